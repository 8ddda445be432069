//! Quasigroup-graded Hopf quasigroups as structure constants.
//!
//! Component `H_p` has basis `e_0..e_{d_p}`. Multiplication `m_{p,q}` is a map
//! `H_p⊗H_q → H_{pq}`, `Δ_p: H_p → H_p⊗H_p`, `ε_p: H_p → k` (a `1×d_p`
//! matrix), the unit is a map `k → H_e`, and `S_p: H_p → H_{p⁻¹}`.

mod associator;
mod axioms;
mod probe;

use std::ops::Deref;

use crate::linalg::{Field, LinMap, LinalgError, Vector};
use crate::quasigroup::Quasigroup;
use crate::report::CheckReport;

pub use associator::{associator, associator_map, check_associator};
pub use axioms::{
    check_bialgebra_axioms, check_hopf_axioms, check_lemma21, check_prop21, check_prop22, check_prop23, classification_report,
    classify_graded, GradedFlags,
};
pub use probe::linearity_probe;

#[derive(Debug, thiserror::Error)]
pub enum HopfError {
    #[error("{map}: expected a {expected_dst}x{expected_src} matrix, found {found_dst}x{found_src}")]
    Shape { map: String, expected_dst: usize, expected_src: usize, found_dst: usize, found_src: usize },
    #[error("expected {expected} entries for {what}, found {found}")]
    Count { what: String, expected: usize, found: usize },
    #[error("structure uses field {found}, expected {expected}")]
    FieldMismatch { expected: Field, found: Field },
    #[error("grading quasigroup is not associative")]
    GradingNotAssociative,
    #[error("not a Hopf quasigroup; failing checks: {}", failing(.0))]
    InvalidHopfQuasigroup(Box<CheckReport>),
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

pub(crate) fn failing(r: &CheckReport) -> String {
    r.failures().map(|c| c.id.as_str()).collect::<Vec<_>>().join(", ")
}

/// Names one structure map, for reading or replacing it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StructureMap {
    Mult(usize, usize),
    Unit,
    Comult(usize),
    Counit(usize),
    Antipode(usize),
}

/// Graded algebra and per-component coalgebra data, without an antipode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBialgebra {
    grading: Quasigroup,
    field: Field,
    dims: Vec<usize>,
    mult: Vec<LinMap>,
    unit: LinMap,
    comult: Vec<LinMap>,
    counit: Vec<LinMap>,
}

/// A graded Hopf quasigroup candidate. Construction checks shapes only;
/// the axioms are verified by [`check_hopf_axioms`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedHopfQuasigroup {
    bialgebra: GradedBialgebra,
    antipode: Vec<LinMap>,
}

impl Deref for GradedHopfQuasigroup {
    type Target = GradedBialgebra;

    fn deref(&self) -> &GradedBialgebra {
        &self.bialgebra
    }
}

fn expect_shape(name: impl FnOnce() -> String, m: &LinMap, field: Field, dst: usize, src: usize) -> Result<(), HopfError> {
    if m.field() != field {
        return Err(HopfError::FieldMismatch { expected: field, found: m.field() });
    }
    if m.dst_dim() != dst || m.src_dim() != src {
        return Err(HopfError::Shape { map: name(), expected_dst: dst, expected_src: src, found_dst: m.dst_dim(), found_src: m.src_dim() });
    }
    Ok(())
}

fn expect_count(what: &str, expected: usize, found: usize) -> Result<(), HopfError> {
    if expected != found {
        return Err(HopfError::Count { what: what.to_string(), expected, found });
    }
    Ok(())
}

impl GradedBialgebra {
    /// `mult` is indexed by `p·n + q`; `unit` is a `d_e × 1` matrix.
    pub fn from_parts(
        grading: Quasigroup,
        field: Field,
        dims: Vec<usize>,
        mult: Vec<LinMap>,
        unit: LinMap,
        comult: Vec<LinMap>,
        counit: Vec<LinMap>,
    ) -> Result<Self, HopfError> {
        let n = grading.order();
        expect_count("dims", n, dims.len())?;
        expect_count("mult", n * n, mult.len())?;
        expect_count("comult", n, comult.len())?;
        expect_count("counit", n, counit.len())?;
        for p in 0..n {
            for q in 0..n {
                let m = &mult[p * n + q];
                expect_shape(|| format!("m({p},{q})"), m, field, dims[grading.mul(p, q)], dims[p] * dims[q])?;
            }
            expect_shape(|| format!("comult({p})"), &comult[p], field, dims[p] * dims[p], dims[p])?;
            expect_shape(|| format!("counit({p})"), &counit[p], field, 1, dims[p])?;
        }
        expect_shape(|| "unit".into(), &unit, field, dims[0], 1)?;
        Ok(GradedBialgebra { grading, field, dims, mult, unit, comult, counit })
    }

    pub fn grading(&self) -> &Quasigroup {
        &self.grading
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> usize {
        self.grading.order()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, p: usize) -> usize {
        self.dims[p]
    }

    /// Grade product `pq` in the grading quasigroup.
    pub fn gm(&self, p: usize, q: usize) -> usize {
        self.grading.mul(p, q)
    }

    /// Grade inverse `p⁻¹`.
    pub fn gi(&self, p: usize) -> usize {
        self.grading.inv(p)
    }

    pub fn mult(&self, p: usize, q: usize) -> &LinMap {
        &self.mult[p * self.order() + q]
    }

    pub fn unit_map(&self) -> &LinMap {
        &self.unit
    }

    pub fn unit(&self) -> Vector {
        self.unit.column(0)
    }

    pub fn comult(&self, p: usize) -> &LinMap {
        &self.comult[p]
    }

    pub fn counit(&self, p: usize) -> &LinMap {
        &self.counit[p]
    }

    pub fn with_antipode(self, antipode: Vec<LinMap>) -> Result<GradedHopfQuasigroup, HopfError> {
        let n = self.order();
        expect_count("antipode", n, antipode.len())?;
        for (p, s) in antipode.iter().enumerate() {
            expect_shape(|| format!("antipode({p})"), s, self.field, self.dims[self.gi(p)], self.dims[p])?;
        }
        Ok(GradedHopfQuasigroup { bialgebra: self, antipode })
    }
}

impl GradedHopfQuasigroup {
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        grading: Quasigroup,
        field: Field,
        dims: Vec<usize>,
        mult: Vec<LinMap>,
        unit: LinMap,
        comult: Vec<LinMap>,
        counit: Vec<LinMap>,
        antipode: Vec<LinMap>,
    ) -> Result<Self, HopfError> {
        GradedBialgebra::from_parts(grading, field, dims, mult, unit, comult, counit)?.with_antipode(antipode)
    }

    pub fn bialgebra(&self) -> &GradedBialgebra {
        &self.bialgebra
    }

    /// Drops the antipode, keeping multiplication and coalgebra data.
    pub fn strip_antipode(&self) -> GradedBialgebra {
        self.bialgebra.clone()
    }

    pub fn antipode(&self, p: usize) -> &LinMap {
        &self.antipode[p]
    }

    pub fn map(&self, which: StructureMap) -> &LinMap {
        match which {
            StructureMap::Mult(p, q) => self.mult(p, q),
            StructureMap::Unit => self.unit_map(),
            StructureMap::Comult(p) => self.comult(p),
            StructureMap::Counit(p) => self.counit(p),
            StructureMap::Antipode(p) => self.antipode(p),
        }
    }

    /// A copy with one structure map replaced (shape-checked).
    pub fn with_map(&self, which: StructureMap, map: LinMap) -> Result<Self, HopfError> {
        let mut out = self.clone();
        let n = self.order();
        let slot = match which {
            StructureMap::Mult(p, q) => &mut out.bialgebra.mult[p * n + q],
            StructureMap::Unit => &mut out.bialgebra.unit,
            StructureMap::Comult(p) => &mut out.bialgebra.comult[p],
            StructureMap::Counit(p) => &mut out.bialgebra.counit[p],
            StructureMap::Antipode(p) => &mut out.antipode[p],
        };
        let old = std::mem::replace(slot, map);
        expect_shape(|| format!("{which:?}"), slot, old.field(), old.dst_dim(), old.src_dim())?;
        Ok(out)
    }

    /// Every structure map, in a fixed order.
    pub fn structure_maps(&self) -> Vec<StructureMap> {
        let n = self.order();
        let mut out = vec![StructureMap::Unit];
        for p in 0..n {
            out.extend((0..n).map(|q| StructureMap::Mult(p, q)));
        }
        out.extend((0..n).map(StructureMap::Comult));
        out.extend((0..n).map(StructureMap::Counit));
        out.extend((0..n).map(StructureMap::Antipode));
        out
    }
}

/// The group-like construction `kQ`: each `H_p` is spanned by `p`, with
/// `m(p⊗q) = pq`, `Δ(p) = p⊗p`, `ε(p) = 1`, `S(p) = p⁻¹`.
pub fn build_kq(q: &Quasigroup, field: Field) -> GradedHopfQuasigroup {
    let n = q.order();
    let one = || LinMap::identity(field, 1);
    GradedHopfQuasigroup::from_parts(
        q.clone(),
        field,
        vec![1; n],
        (0..n * n).map(|_| one()).collect(),
        one(),
        (0..n).map(|_| one()).collect(),
        (0..n).map(|_| one()).collect(),
        (0..n).map(|_| one()).collect(),
    )
    .expect("kQ shapes are consistent")
}

/// Ungraded Hopf quasigroup data on a single space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfQuasigroupData {
    pub field: Field,
    pub dim: usize,
    /// `d × d²`
    pub mult: LinMap,
    /// `d × 1`
    pub unit: LinMap,
    /// `d² × d`
    pub comult: LinMap,
    /// `1 × d`
    pub counit: LinMap,
    /// `d × d`
    pub antipode: LinMap,
}

impl HopfQuasigroupData {
    /// The loop algebra `kL` on the basis `L`, with group-like coproduct.
    pub fn loop_algebra(l: &Quasigroup, field: Field) -> Self {
        let n = l.order();
        let products: Vec<usize> = (0..n * n).map(|ij| l.mul(ij / n, ij % n)).collect();
        let diagonal: Vec<usize> = (0..n).map(|i| i * n + i).collect();
        HopfQuasigroupData {
            field,
            dim: n,
            mult: LinMap::from_function(field, n, &products),
            unit: LinMap::from_function(field, n, &[0]),
            comult: LinMap::from_function(field, n * n, &diagonal),
            counit: LinMap::from_function(field, 1, &vec![0; n]),
            antipode: LinMap::permutation(field, l.inverses()),
        }
    }

    /// Packages the data over the one-element grading without checking axioms.
    pub fn as_graded(&self) -> Result<GradedHopfQuasigroup, HopfError> {
        let z1 = Quasigroup::from_cayley_table(&[vec![0]]).expect("trivial loop");
        GradedHopfQuasigroup::from_parts(
            z1,
            self.field,
            vec![self.dim],
            vec![self.mult.clone()],
            self.unit.clone(),
            vec![self.comult.clone()],
            vec![self.counit.clone()],
            vec![self.antipode.clone()],
        )
    }

    pub fn from_graded(h: &GradedHopfQuasigroup) -> Option<Self> {
        (h.order() == 1).then(|| HopfQuasigroupData {
            field: h.field(),
            dim: h.dim(0),
            mult: h.mult(0, 0).clone(),
            unit: h.unit_map().clone(),
            comult: h.comult(0).clone(),
            counit: h.counit(0).clone(),
            antipode: h.antipode(0).clone(),
        })
    }
}

/// Views ungraded Hopf quasigroup data as graded over the trivial loop,
/// rejecting data that fails any axiom.
pub fn trivial_grading(h: &HopfQuasigroupData) -> Result<GradedHopfQuasigroup, HopfError> {
    let graded = h.as_graded()?;
    let report = check_hopf_axioms(&graded);
    if report.passed() {
        Ok(graded)
    } else {
        Err(HopfError::InvalidHopfQuasigroup(Box::new(report)))
    }
}
