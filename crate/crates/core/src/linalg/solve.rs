//! Exact Gaussian elimination: rank, kernels, inverses.

use super::{LinMap, LinalgError, Scalar, Vector};

/// Reduced row echelon form of a dense matrix, with its pivot columns.
pub(crate) struct Rref {
    pub rows: Vec<Vec<Scalar>>,
    pub pivots: Vec<usize>,
}

pub(crate) fn rref(mut rows: Vec<Vec<Scalar>>, ncols: usize) -> Rref {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].checked_inv().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = x.mul_ref(&inv);
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let factor = rows[i][c].neg();
            let (pivot_row, other) = if i < r {
                let (a, b) = rows.split_at_mut(r);
                (&b[0], &mut a[i])
            } else {
                let (a, b) = rows.split_at_mut(i);
                (&a[r], &mut b[0])
            };
            for (x, y) in other.iter_mut().zip(pivot_row) {
                if !y.is_zero() {
                    x.add_assign_ref(&y.mul_ref(&factor));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Rref { rows, pivots }
}

impl LinMap {
    pub fn rank(&self) -> usize {
        rref(self.to_dense_rows(), self.src_dim()).pivots.len()
    }

    /// Basis of the kernel, one vector per free column of the reduced echelon form.
    ///
    /// The vector for free column `f` has a 1 at `f`, zeros at the other free
    /// columns, and the negated echelon entries at the pivot columns.
    pub fn kernel(&self) -> Vec<Vector> {
        let field = self.field();
        let n = self.src_dim();
        let Rref { rows, pivots } = rref(self.to_dense_rows(), n);
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut entries = vec![field.zero(); n];
                entries[f] = field.one();
                for (row, &pc) in pivots.iter().enumerate() {
                    entries[pc] = rows[row][f].neg();
                }
                Vector::from_entries(field, entries).expect("single field")
            })
            .collect()
    }

    pub fn is_bijective(&self) -> bool {
        self.src_dim() == self.dst_dim() && self.rank() == self.src_dim()
    }

    /// Two-sided inverse, or `None` when the map is not bijective.
    pub fn inverse(&self) -> Option<LinMap> {
        if self.src_dim() != self.dst_dim() {
            return None;
        }
        let field = self.field();
        let n = self.src_dim();
        let mut rows = self.to_dense_rows();
        for (i, row) in rows.iter_mut().enumerate() {
            row.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
        }
        let Rref { rows, pivots } = rref(rows, n);
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| i != p) {
            return None;
        }
        let triplets = rows.into_iter().enumerate().flat_map(|(r, row)| {
            row.into_iter().skip(n).enumerate().filter(|(_, s)| !s.is_zero()).map(move |(c, s)| (r, c, s)).collect::<Vec<_>>()
        });
        Some(LinMap::from_triplets(field, n, n, triplets).expect("in range"))
    }

    /// A map `L` with `L · self = id`, or `None` when `self` is not injective.
    ///
    /// Row-reducing `[self | I]` gives `E · self` in echelon form; the first
    /// `src_dim` rows of `E` are such an `L`.
    pub fn left_inverse(&self) -> Option<LinMap> {
        let field = self.field();
        let (m, n) = (self.dst_dim(), self.src_dim());
        let mut rows = self.to_dense_rows();
        for (i, row) in rows.iter_mut().enumerate() {
            row.extend((0..m).map(|j| if i == j { field.one() } else { field.zero() }));
        }
        let Rref { rows, pivots } = rref(rows, n);
        if pivots.len() != n {
            return None;
        }
        let triplets = rows.into_iter().take(n).enumerate().flat_map(|(r, row)| {
            row.into_iter().skip(n).enumerate().filter(|(_, s)| !s.is_zero()).map(move |(c, s)| (r, c, s)).collect::<Vec<_>>()
        });
        Some(LinMap::from_triplets(field, n, m, triplets).expect("in range"))
    }

    /// Solves `self · x = b` for one particular solution.
    pub fn solve(&self, b: &Vector) -> Result<Option<Vector>, LinalgError> {
        let field = self.field();
        if b.dim() != self.dst_dim() {
            return Err(LinalgError::DimensionMismatch { expected: self.dst_dim(), found: b.dim() });
        }
        let n = self.src_dim();
        let mut rows = self.to_dense_rows();
        for (row, rhs) in rows.iter_mut().zip(b.entries()) {
            row.push(rhs.clone());
        }
        let Rref { rows, pivots } = rref(rows, n + 1);
        if pivots.last() == Some(&n) {
            return Ok(None);
        }
        let mut x = vec![field.zero(); n];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = rows[row][n].clone();
        }
        Ok(Some(Vector::from_entries(field, x)?))
    }
}
