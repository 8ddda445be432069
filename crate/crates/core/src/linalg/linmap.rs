use std::collections::BTreeMap;
use std::fmt;

use super::{Field, LinalgError, Scalar, Vector};

/// Sparse column accumulator; rows kept sorted, zeros dropped on finish.
#[derive(Default)]
pub(crate) struct Accumulator {
    acc: BTreeMap<usize, Scalar>,
}

impl Accumulator {
    pub(crate) fn add(&mut self, row: usize, c: &Scalar) {
        match self.acc.get_mut(&row) {
            Some(s) => s.add_assign_ref(c),
            None => {
                self.acc.insert(row, c.clone());
            }
        }
    }

    pub(crate) fn finish(self) -> Vec<(usize, Scalar)> {
        self.acc.into_iter().filter(|(_, s)| !s.is_zero()).collect()
    }
}

/// Exact linear map `k^src_dim -> k^dst_dim`, stored column by column.
///
/// Column `j` is the sparse image of the basis vector `e_j`: a list of
/// `(row, scalar)` pairs with strictly increasing rows and no zero scalars.
/// Two maps are equal iff their matrices are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinMap {
    field: Field,
    src_dim: usize,
    dst_dim: usize,
    cols: Vec<Vec<(usize, Scalar)>>,
}

impl LinMap {
    pub fn zero(field: Field, dst_dim: usize, src_dim: usize) -> Self {
        LinMap { field, src_dim, dst_dim, cols: vec![Vec::new(); src_dim] }
    }

    pub fn identity(field: Field, dim: usize) -> Self {
        Self::permutation(field, &(0..dim).collect::<Vec<_>>())
    }

    /// Permutation matrix sending `e_i` to `e_{perm[i]}`.
    pub fn permutation(field: Field, perm: &[usize]) -> Self {
        Self::from_function(field, perm.len(), perm)
    }

    /// Sends `e_i` to `e_{images[i]}` in a space of dimension `dst_dim`.
    pub fn from_function(field: Field, dst_dim: usize, images: &[usize]) -> Self {
        assert!(images.iter().all(|&i| i < dst_dim), "image index out of range");
        LinMap { field, src_dim: images.len(), dst_dim, cols: images.iter().map(|&p| vec![(p, field.one())]).collect() }
    }

    /// Builds a map from `(row, col, scalar)` triplets; repeated positions are rejected.
    pub fn from_triplets<I>(field: Field, dst_dim: usize, src_dim: usize, triplets: I) -> Result<Self, LinalgError>
    where
        I: IntoIterator<Item = (usize, usize, Scalar)>,
    {
        let mut cols: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); src_dim];
        for (row, col, s) in triplets {
            if row >= dst_dim || col >= src_dim {
                return Err(LinalgError::IndexOutOfRange { row, col, dst_dim, src_dim });
            }
            if s.field() != field {
                return Err(LinalgError::MixedFields);
            }
            if cols[col].insert(row, s).is_some() {
                return Err(LinalgError::DuplicateEntry { row, col });
            }
        }
        Ok(LinMap {
            field,
            src_dim,
            dst_dim,
            cols: cols.into_iter().map(|c| c.into_iter().filter(|(_, s)| !s.is_zero()).collect()).collect(),
        })
    }

    /// Map whose `j`-th column is `columns[j]`.
    pub fn from_columns(field: Field, dst_dim: usize, columns: &[Vector]) -> Result<Self, LinalgError> {
        let mut cols = Vec::with_capacity(columns.len());
        for v in columns {
            if v.field() != field {
                return Err(LinalgError::MixedFields);
            }
            if v.dim() != dst_dim {
                return Err(LinalgError::DimensionMismatch { expected: dst_dim, found: v.dim() });
            }
            cols.push(v.to_sparse());
        }
        Ok(LinMap { field, src_dim: columns.len(), dst_dim, cols })
    }

    pub(crate) fn from_sparse_columns(field: Field, dst_dim: usize, cols: Vec<Vec<(usize, Scalar)>>) -> Self {
        debug_assert!(cols.iter().all(|c| c.windows(2).all(|w| w[0].0 < w[1].0)));
        LinMap { field, src_dim: cols.len(), dst_dim, cols }
    }

    /// Small integer matrix given row by row.
    pub fn from_rows(field: Field, rows: &[Vec<i64>]) -> Self {
        let dst_dim = rows.len();
        let src_dim = rows.first().map_or(0, Vec::len);
        let triplets = rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().filter(|(_, &x)| x != 0).map(move |(c, &x)| (r, c, field.int(x))));
        Self::from_triplets(field, dst_dim, src_dim, triplets).expect("well-formed rows")
    }

    /// Swap `V_a ⊗ V_b -> V_b ⊗ V_a`.
    pub fn swap(field: Field, a: usize, b: usize) -> Self {
        let perm: Vec<usize> = (0..a * b).map(|idx| (idx % b) * a + idx / b).collect();
        Self::permutation(field, &perm)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn src_dim(&self) -> usize {
        self.src_dim
    }

    pub fn dst_dim(&self) -> usize {
        self.dst_dim
    }

    pub(crate) fn sparse_column(&self, j: usize) -> &[(usize, Scalar)] {
        &self.cols[j]
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector::from_sparse(self.field, self.dst_dim, &self.cols[j])
    }

    pub fn get(&self, row: usize, col: usize) -> Scalar {
        self.cols[col].binary_search_by_key(&row, |(r, _)| *r).map(|k| self.cols[col][k].1.clone()).unwrap_or_else(|_| self.field.zero())
    }

    /// Nonzero entries as `(row, col, scalar)`, ordered by column then row.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.cols.iter().enumerate().flat_map(|(c, col)| col.iter().map(move |(r, s)| (*r, c, s)))
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector, LinalgError> {
        if v.field() != self.field {
            return Err(LinalgError::MixedFields);
        }
        if v.dim() != self.src_dim {
            return Err(LinalgError::DimensionMismatch { expected: self.src_dim, found: v.dim() });
        }
        let mut acc = Accumulator::default();
        for (j, c) in v.iter_nonzero() {
            for (r, s) in &self.cols[j] {
                acc.add(*r, &s.mul_ref(c));
            }
        }
        Ok(Vector::from_sparse(self.field, self.dst_dim, &acc.finish()))
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &LinMap) -> Result<LinMap, LinalgError> {
        if self.field != g.field {
            return Err(LinalgError::MixedFields);
        }
        if g.dst_dim != self.src_dim {
            return Err(LinalgError::DimensionMismatch { expected: self.src_dim, found: g.dst_dim });
        }
        let cols = g
            .cols
            .iter()
            .map(|gcol| {
                let mut acc = Accumulator::default();
                for (k, c) in gcol {
                    for (r, s) in &self.cols[*k] {
                        acc.add(*r, &s.mul_ref(c));
                    }
                }
                acc.finish()
            })
            .collect();
        Ok(LinMap { field: self.field, src_dim: g.src_dim, dst_dim: self.dst_dim, cols })
    }

    /// Kronecker product; `e_i ⊗ e_j` has index `i * dim + j` on both sides.
    pub fn tensor(&self, g: &LinMap) -> Result<LinMap, LinalgError> {
        if self.field != g.field {
            return Err(LinalgError::MixedFields);
        }
        let mut cols = Vec::with_capacity(self.src_dim * g.src_dim);
        for fcol in &self.cols {
            for gcol in &g.cols {
                let mut col = Vec::with_capacity(fcol.len() * gcol.len());
                for (r1, s1) in fcol {
                    for (r2, s2) in gcol {
                        col.push((r1 * g.dst_dim + r2, s1.mul_ref(s2)));
                    }
                }
                cols.push(col);
            }
        }
        Ok(LinMap { field: self.field, src_dim: self.src_dim * g.src_dim, dst_dim: self.dst_dim * g.dst_dim, cols })
    }

    pub fn add(&self, g: &LinMap) -> Result<LinMap, LinalgError> {
        self.check_same_shape(g)?;
        let cols = self
            .cols
            .iter()
            .zip(&g.cols)
            .map(|(a, b)| {
                let mut acc = Accumulator::default();
                for (r, s) in a.iter().chain(b.iter()) {
                    acc.add(*r, s);
                }
                acc.finish()
            })
            .collect();
        Ok(LinMap { cols, ..self.clone_shape() })
    }

    pub fn sub(&self, g: &LinMap) -> Result<LinMap, LinalgError> {
        self.add(&g.scale(&self.field.int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> LinMap {
        if c.is_zero() {
            return LinMap::zero(self.field, self.dst_dim, self.src_dim);
        }
        let cols = self.cols.iter().map(|col| col.iter().map(|(r, s)| (*r, s.mul_ref(c))).collect()).collect();
        LinMap { cols, ..self.clone_shape() }
    }

    /// Returns a copy with entry `(row, col)` replaced by `value`.
    pub fn with_entry(&self, row: usize, col: usize, value: Scalar) -> LinMap {
        let mut out = self.clone();
        let column = &mut out.cols[col];
        match column.binary_search_by_key(&row, |(r, _)| *r) {
            Ok(k) if value.is_zero() => {
                column.remove(k);
            }
            Ok(k) => column[k].1 = value,
            Err(_) if value.is_zero() => {}
            Err(k) => column.insert(k, (row, value)),
        }
        out
    }

    /// First column on which the two maps disagree.
    pub fn first_difference(&self, g: &LinMap) -> Option<usize> {
        (0..self.src_dim.min(g.src_dim)).find(|&j| self.cols[j] != g.cols[j])
    }

    fn check_same_shape(&self, g: &LinMap) -> Result<(), LinalgError> {
        if self.field != g.field {
            return Err(LinalgError::MixedFields);
        }
        if self.src_dim != g.src_dim || self.dst_dim != g.dst_dim {
            return Err(LinalgError::DimensionMismatch { expected: self.src_dim * self.dst_dim, found: g.src_dim * g.dst_dim });
        }
        Ok(())
    }

    fn clone_shape(&self) -> LinMap {
        LinMap { field: self.field, src_dim: self.src_dim, dst_dim: self.dst_dim, cols: Vec::new() }
    }

    /// Dense row-major copy of the matrix.
    pub(crate) fn to_dense_rows(&self) -> Vec<Vec<Scalar>> {
        let mut rows = vec![vec![self.field.zero(); self.src_dim]; self.dst_dim];
        for (r, c, s) in self.triplets() {
            rows[r][c] = s.clone();
        }
        rows
    }
}

impl fmt::Display for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_dense_rows() {
            let cells: Vec<String> = row.iter().map(Scalar::short).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Row-major decomposition of a flat tensor index into per-factor indices.
pub fn split_index(mut idx: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, &d) in out.iter_mut().zip(dims).rev() {
        *slot = idx % d;
        idx /= d;
    }
    out
}

/// Inverse of [`split_index`].
pub fn join_index(parts: &[usize], dims: &[usize]) -> usize {
    parts.iter().zip(dims).fold(0, |acc, (&i, &d)| acc * d + i)
}
