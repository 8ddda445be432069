use std::fmt;

use super::{Field, LinalgError, Scalar};

/// Dense exact vector. All entries live in `field`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    field: Field,
    entries: Vec<Scalar>,
}

impl Vector {
    pub fn zeros(field: Field, dim: usize) -> Self {
        Vector { field, entries: vec![field.zero(); dim] }
    }

    /// Unit vector `e_i`.
    pub fn basis(field: Field, dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(field, dim);
        v.entries[i] = field.one();
        v
    }

    pub fn from_entries(field: Field, entries: Vec<Scalar>) -> Result<Self, LinalgError> {
        if entries.iter().any(|s| s.field() != field) {
            return Err(LinalgError::MixedFields);
        }
        Ok(Vector { field, entries })
    }

    /// Convenience constructor from small integers.
    pub fn from_ints(field: Field, xs: &[i64]) -> Self {
        Vector { field, entries: xs.iter().map(|&x| field.int(x)).collect() }
    }

    pub(crate) fn from_sparse(field: Field, dim: usize, sparse: &[(usize, Scalar)]) -> Self {
        let mut v = Self::zeros(field, dim);
        for (i, s) in sparse {
            v.entries[*i] = s.clone();
        }
        v
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.entries[i]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn iter_nonzero(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.entries.iter().enumerate().filter(|(_, s)| !s.is_zero())
    }

    pub(crate) fn to_sparse(&self) -> Vec<(usize, Scalar)> {
        self.iter_nonzero().map(|(i, s)| (i, s.clone())).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    fn check_compatible(&self, other: &Vector) -> Result<(), LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::MixedFields);
        }
        if self.dim() != other.dim() {
            return Err(LinalgError::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Vector) -> Result<Vector, LinalgError> {
        self.check_compatible(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.checked_add(b)).collect::<Result<_, _>>()?;
        Ok(Vector { field: self.field, entries })
    }

    pub fn sub(&self, other: &Vector) -> Result<Vector, LinalgError> {
        self.add(&other.scale(&self.field.int(-1))?)
    }

    pub fn scale(&self, c: &Scalar) -> Result<Vector, LinalgError> {
        let entries = self.entries.iter().map(|a| a.checked_mul(c)).collect::<Result<_, _>>()?;
        Ok(Vector { field: self.field, entries })
    }

    /// `self ⊗ other` under the row-major convention: index `i * other.dim() + j`.
    pub fn tensor(&self, other: &Vector) -> Result<Vector, LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::MixedFields);
        }
        let mut entries = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.entries {
            for b in &other.entries {
                entries.push(a.checked_mul(b)?);
            }
        }
        Ok(Vector { field: self.field, entries })
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, s) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", s.short())?;
        }
        write!(f, "]")
    }
}
