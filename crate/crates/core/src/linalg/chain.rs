//! Composite maps between tensor products, evaluated column by column.
//!
//! A [`Chain`] starts from a list of tensor factors and applies a sequence of
//! local steps, each acting on a run of adjacent factors while the rest pass
//! through untouched. Only the final map on the domain basis is materialized,
//! so intermediate spaces such as `H^{⊗6}` never exist as matrices. Iterated
//! coproducts are written as successive `split` steps.

use std::borrow::Cow;

use super::linmap::{join_index, split_index, Accumulator};
use super::{Field, LinMap, LinalgError, Scalar, Vector};

enum Step<'a> {
    Local { pos: usize, arity: usize, map: Cow<'a, LinMap>, out: Vec<usize> },
    Permute(Vec<usize>),
}

/// A composite linear map on `⊗_i V_{dims[i]}`, built step by step.
pub struct Chain<'a> {
    field: Field,
    src: Vec<usize>,
    current: Vec<usize>,
    steps: Vec<Step<'a>>,
    error: Option<LinalgError>,
}

impl<'a> Chain<'a> {
    pub fn new(field: Field, dims: &[usize]) -> Self {
        Chain { field, src: dims.to_vec(), current: dims.to_vec(), steps: Vec::new(), error: None }
    }

    /// Factor dimensions after the steps so far.
    pub fn factors(&self) -> &[usize] {
        &self.current
    }

    /// Applies `map` to factors `pos..pos+arity`, which become the factors `out`.
    pub fn local(mut self, pos: usize, arity: usize, map: impl Into<Cow<'a, LinMap>>, out: &[usize]) -> Self {
        if self.error.is_some() {
            return self;
        }
        let map = map.into();
        if pos + arity > self.current.len() {
            self.error = Some(LinalgError::DimensionMismatch { expected: self.current.len(), found: pos + arity });
            return self;
        }
        let consumed: usize = self.current[pos..pos + arity].iter().product();
        let produced: usize = out.iter().product();
        if map.field() != self.field {
            self.error = Some(LinalgError::MixedFields);
            return self;
        }
        if consumed != map.src_dim() || produced != map.dst_dim() {
            self.error = Some(LinalgError::DimensionMismatch { expected: map.src_dim() * map.dst_dim(), found: consumed * produced });
            return self;
        }
        self.current.splice(pos..pos + arity, out.iter().copied());
        self.steps.push(Step::Local { pos, arity, map, out: out.to_vec() });
        self
    }

    /// `map` on a single factor.
    pub fn unary(self, pos: usize, map: impl Into<Cow<'a, LinMap>>) -> Self {
        let map = map.into();
        let d = map.dst_dim();
        self.local(pos, 1, map, &[d])
    }

    /// Binary operation (e.g. a multiplication) fusing factors `pos, pos+1`.
    pub fn binary(self, pos: usize, map: impl Into<Cow<'a, LinMap>>) -> Self {
        let map = map.into();
        let d = map.dst_dim();
        self.local(pos, 2, map, &[d])
    }

    /// Comultiplication-like step: factor `pos` becomes two factors.
    pub fn split(self, pos: usize, map: impl Into<Cow<'a, LinMap>>, left: usize, right: usize) -> Self {
        self.local(pos, 1, map, &[left, right])
    }

    /// Counit-like step: factor `pos` is contracted to a scalar and disappears.
    pub fn contract(self, pos: usize, map: impl Into<Cow<'a, LinMap>>) -> Self {
        self.local(pos, 1, map, &[])
    }

    /// Unit-like step: a new factor is inserted at `pos` from `k`.
    pub fn insert(self, pos: usize, map: impl Into<Cow<'a, LinMap>>) -> Self {
        let map = map.into();
        let d = map.dst_dim();
        self.local(pos, 0, map, &[d])
    }

    /// Reorders factors: new factor `k` is old factor `order[k]`.
    pub fn permute(mut self, order: &[usize]) -> Self {
        if self.error.is_some() {
            return self;
        }
        let mut seen = vec![false; self.current.len()];
        if order.len() != self.current.len() || order.iter().any(|&i| i >= seen.len() || std::mem::replace(&mut seen[i], true)) {
            self.error = Some(LinalgError::DimensionMismatch { expected: self.current.len(), found: order.len() });
            return self;
        }
        self.current = order.iter().map(|&i| self.current[i]).collect();
        self.steps.push(Step::Permute(order.to_vec()));
        self
    }

    /// Swaps adjacent factors `pos` and `pos + 1`.
    pub fn swap(self, pos: usize) -> Self {
        let mut order: Vec<usize> = (0..self.current.len()).collect();
        if pos + 1 < order.len() {
            order.swap(pos, pos + 1);
        }
        self.permute(&order)
    }

    fn push_through(&self, start: Vec<(usize, Scalar)>) -> Vec<(usize, Scalar)> {
        let mut dims = self.src.clone();
        let mut vec = start;
        for step in &self.steps {
            let mut acc = Accumulator::default();
            match step {
                Step::Local { pos, arity, map, out } => {
                    let before = &dims[..*pos];
                    let middle = &dims[*pos..*pos + *arity];
                    let after = &dims[*pos + *arity..];
                    let mut new_dims = before.to_vec();
                    new_dims.extend_from_slice(out);
                    new_dims.extend_from_slice(after);
                    let after_size: usize = after.iter().product();
                    let middle_size: usize = middle.iter().product();
                    let out_size: usize = out.iter().product();
                    for (idx, c) in &vec {
                        let suffix = idx % after_size;
                        let rest = idx / after_size;
                        let mid = rest % middle_size;
                        let prefix = rest / middle_size;
                        for (r, s) in map.sparse_column(mid) {
                            let new_idx = (prefix * out_size + r) * after_size + suffix;
                            acc.add(new_idx, &s.mul_ref(c));
                        }
                    }
                    dims = new_dims;
                }
                Step::Permute(order) => {
                    let new_dims: Vec<usize> = order.iter().map(|&i| dims[i]).collect();
                    for (idx, c) in &vec {
                        let parts = split_index(*idx, &dims);
                        let moved: Vec<usize> = order.iter().map(|&i| parts[i]).collect();
                        acc.add(join_index(&moved, &new_dims), c);
                    }
                    dims = new_dims;
                }
            }
            vec = acc.finish();
        }
        vec
    }

    /// Materializes the composite on the domain basis.
    pub fn build(&self) -> Result<LinMap, LinalgError> {
        if let Some(e) = &self.error {
            return Err(e.clone());
        }
        let src_dim: usize = self.src.iter().product();
        let dst_dim: usize = self.current.iter().product();
        let one = self.field.one();
        let cols = (0..src_dim).map(|j| self.push_through(vec![(j, one.clone())])).collect();
        Ok(LinMap::from_sparse_columns(self.field, dst_dim, cols))
    }

    /// Applies the composite to a single vector of the domain.
    pub fn apply(&self, v: &Vector) -> Result<Vector, LinalgError> {
        if let Some(e) = &self.error {
            return Err(e.clone());
        }
        let src_dim: usize = self.src.iter().product();
        if v.dim() != src_dim {
            return Err(LinalgError::DimensionMismatch { expected: src_dim, found: v.dim() });
        }
        let dst_dim: usize = self.current.iter().product();
        Ok(Vector::from_sparse(self.field, dst_dim, &self.push_through(v.to_sparse())))
    }
}

impl<'a> From<&'a LinMap> for Cow<'a, LinMap> {
    fn from(m: &'a LinMap) -> Self {
        Cow::Borrowed(m)
    }
}

impl From<LinMap> for Cow<'_, LinMap> {
    fn from(m: LinMap) -> Self {
        Cow::Owned(m)
    }
}
