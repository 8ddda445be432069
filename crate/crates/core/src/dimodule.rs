//! Long dimodules: graded quasimodules whose components are also right
//! `H_e`-comodules `ρ_{q,e}: M_q → M_q⊗H_e` compatible with the action, and
//! the operators `R_q(m⊗n) = n₁·m ⊗ n₀` they define.

use std::sync::Arc;

use crate::hopf::GradedHopfQuasigroup;
use crate::linalg::{Chain, LinMap, LinalgError};
use crate::quasimodule::{
    expect_count, expect_shape, quasimodule_checks, require, same_host, tensor_quasimodules, GradedQuasimodule, ModuleError,
};
use crate::report::{compare, compare_chains, over, CheckReport, Outcome};

const E: usize = 0;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LongDimodule {
    base: GradedQuasimodule,
    right: Vec<LinMap>,
}

impl std::ops::Deref for LongDimodule {
    type Target = GradedQuasimodule;

    fn deref(&self) -> &GradedQuasimodule {
        &self.base
    }
}

impl LongDimodule {
    /// `right[q]` is `ρ_{q,e}: M_q → M_q⊗H_e`. Only shapes are checked.
    pub fn from_parts(base: GradedQuasimodule, right: Vec<LinMap>) -> Result<Self, ModuleError> {
        let h = base.host();
        expect_count("right coaction", h.order(), right.len())?;
        for (q, c) in right.iter().enumerate() {
            expect_shape(|| format!("right_coaction({q})"), c, h.field(), base.dim(q) * h.dim(E), base.dim(q))?;
        }
        Ok(LongDimodule { base, right })
    }

    pub fn base(&self) -> &GradedQuasimodule {
        &self.base
    }

    pub fn right_coaction(&self, q: usize) -> &LinMap {
        &self.right[q]
    }

    pub fn with_right_coaction(&self, q: usize, map: LinMap) -> Result<Self, ModuleError> {
        let mut right = self.right.clone();
        right[q] = map;
        Self::from_parts(self.base.clone(), right)
    }

    pub fn with_action(&self, p: usize, q: usize, map: LinMap) -> Result<Self, ModuleError> {
        Self::from_parts(self.base.with_action(p, q, map)?, self.right.clone())
    }

    pub fn validated(self) -> Result<Self, ModuleError> {
        require(check_long_dimodule(&self))?;
        Ok(self)
    }
}

/// A right `H_e`-comodule `ρ: C → C⊗H_e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightComodule {
    pub dim: usize,
    pub coaction: LinMap,
}

impl RightComodule {
    /// `H_e` coacting on itself by `Δ_e`.
    pub fn regular(h: &GradedHopfQuasigroup) -> Self {
        RightComodule { dim: h.dim(E), coaction: h.comult(E).clone() }
    }

    /// `c ↦ c⊗1` on `k^dim`.
    pub fn trivial(h: &GradedHopfQuasigroup, dim: usize) -> Self {
        let coaction = Chain::new(h.field(), &[dim]).insert(1, h.unit_map()).build().expect("unit has shape d_e × 1");
        RightComodule { dim, coaction }
    }
}

fn right_comodule_checks(h: &GradedHopfQuasigroup, dims: &[usize], rho: &(dyn Fn(usize) -> LinMap + Sync), r: &mut CheckReport) {
    let f = h.field();
    let d = h.dim(E);
    r.record(
        "right-comodule-coassociativity",
        "(ρ⊗id)ρ = (id⊗Δ_e)ρ",
        over(dims.len(), 1, |t| {
            let c = dims[t[0]];
            let rho = rho(t[0]);
            let lhs = Chain::new(f, &[c]).split(0, &rho, c, d).split(0, &rho, c, d);
            let rhs = Chain::new(f, &[c]).split(0, &rho, c, d).split(1, h.comult(E), d, d);
            compare_chains(t, &[c], &[t[0], E, E], &lhs, &[t[0], E, E], &rhs)
        }),
    );
    r.record(
        "right-comodule-counit",
        "(id⊗ε_e)ρ = id",
        over(dims.len(), 1, |t| {
            let c = dims[t[0]];
            let rho = rho(t[0]);
            let lhs = Chain::new(f, &[c]).split(0, &rho, c, d).contract(1, h.counit(E));
            compare_chains(t, &[c], &[t[0]], &lhs, &[t[0]], &Chain::new(f, &[c]))
        }),
    );
}

/// Comodule axioms for a single right `H_e`-comodule.
pub fn check_right_comodule(h: &GradedHopfQuasigroup, c: &RightComodule) -> Result<CheckReport, ModuleError> {
    expect_shape(|| "comodule coaction".into(), &c.coaction, h.field(), c.dim * h.dim(E), c.dim)?;
    let mut r = CheckReport::new("right-comodule");
    right_comodule_checks(h, &[c.dim], &|_| c.coaction.clone(), &mut r);
    Ok(r)
}

/// `m ↦ S_e(m₁)·m₀`, a map `M_q → M_q`.
fn twisted(d: &LongDimodule, q: usize) -> Result<LinMap, LinalgError> {
    let h = d.host();
    Chain::new(d.field(), &[d.dim(q)])
        .split(0, d.right_coaction(q), d.dim(q), h.dim(E))
        .swap(0)
        .unary(0, h.antipode(E))
        .local(0, 2, d.action(E, q), &[d.dim(h.gm(E, q))])
        .build()
}

/// `m ↦ S_e(m₁₍₂₎)·m₀ ⊗ m₁₍₁₎`, a map `M_q → M_q⊗H_e`.
fn twisted_split(d: &LongDimodule, q: usize) -> Result<LinMap, LinalgError> {
    let h = d.host();
    let de = h.dim(E);
    Chain::new(d.field(), &[d.dim(q)])
        .split(0, d.right_coaction(q), d.dim(q), de)
        .split(1, h.comult(E), de, de)
        .unary(2, h.antipode(E))
        .permute(&[2, 0, 1])
        .local(0, 2, d.action(E, q), &[d.dim(h.gm(E, q))])
        .build()
}

/// Quasimodule axioms, right-comodule axioms, the compatibility
/// `(h·m)₀⊗(h·m)₁ = h·m₀⊗m₁`, and the two identities it implies for
/// `S_e(m₁)·m₀`.
pub fn check_long_dimodule(d: &LongDimodule) -> CheckReport {
    let mut r = CheckReport::new("long-dimodule");
    quasimodule_checks(d, &mut r);
    let h = d.host();
    let f = d.field();
    let de = h.dim(E);
    right_comodule_checks(h, d.dims(), &|q| d.right_coaction(q).clone(), &mut r);
    r.record(
        "coaction-compatibility",
        "(h·m)₀⊗(h·m)₁ = h·m₀⊗m₁",
        over(d.order(), 2, |t| {
            let (p, q) = (t[0], t[1]);
            let pq = h.gm(p, q);
            let src = [h.dim(p), d.dim(q)];
            let lhs = Chain::new(f, &src).local(0, 2, d.action(p, q), &[d.dim(pq)]).split(0, d.right_coaction(pq), d.dim(pq), de);
            let rhs = Chain::new(f, &src).split(1, d.right_coaction(q), d.dim(q), de).local(0, 2, d.action(p, q), &[d.dim(pq)]);
            compare_chains(t, &src, &[pq, E], &lhs, &[pq, E], &rhs)
        }),
    );
    r.record(
        "twisted-coaction",
        "ρ(S_e(m₁)·m₀) = S_e(m₁₍₂₎)·m₀ ⊗ m₁₍₁₎",
        over(d.order(), 1, |t| {
            let q = t[0];
            let lhs = twisted(d, q).and_then(|tw| d.right_coaction(q).compose(&tw));
            compare(t, &[d.dim(q)], lhs, twisted_split(d, q))
        }),
    );
    r.record(
        "twisted-coaction-translate",
        "ρ(h·(S_e(m₁)·m₀)) = h·(S_e(m₁₍₂₎)·m₀) ⊗ m₁₍₁₎",
        over(d.order(), 2, |t| {
            let (p, q) = (t[0], t[1]);
            let pq = h.gm(p, q);
            let src = [h.dim(p), d.dim(q)];
            let (Ok(tw), Ok(ts)) = (twisted(d, q), twisted_split(d, q)) else {
                return Outcome::Mismatch(format!("component {q}: twisted coaction is ill-formed"));
            };
            let lhs =
                Chain::new(f, &src).unary(1, &tw).local(0, 2, d.action(p, q), &[d.dim(pq)]).split(0, d.right_coaction(pq), d.dim(pq), de);
            let rhs = Chain::new(f, &src).local(1, 1, &ts, &[d.dim(q), de]).local(0, 2, d.action(p, q), &[d.dim(pq)]);
            compare_chains(t, &src, &[pq, E], &lhs, &[pq, E], &rhs)
        }),
    );
    r
}

/// `M_q⊗H_e` with `h·(m⊗g) = (h·m)⊗g` and `ρ(m⊗g) = m⊗g₁⊗g₂`.
pub fn build_m_tensor_he(m: &GradedQuasimodule) -> Result<LongDimodule, ModuleError> {
    let h = m.host();
    let f = m.field();
    let n = m.order();
    let de = h.dim(E);
    let dims: Vec<usize> = (0..n).map(|q| m.dim(q) * de).collect();
    let action = (0..n * n)
        .map(|i| {
            let (p, q) = (i / n, i % n);
            Chain::new(f, &[h.dim(p), m.dim(q), de]).local(0, 2, m.action(p, q), &[m.dim(h.gm(p, q))]).build()
        })
        .collect::<Result<_, _>>()?;
    let right = (0..n).map(|q| Chain::new(f, &[m.dim(q), de]).split(1, h.comult(E), de, de).build()).collect::<Result<_, _>>()?;
    let base = GradedQuasimodule::from_parts(m.shared_host(), dims, action)?;
    LongDimodule::from_parts(base, right)?.validated()
}

/// `H_q⊗C` with `h·(g⊗c) = hg⊗c` and `ρ(g⊗c) = g⊗c₀⊗c₁`.
pub fn build_h_tensor_comodule(h: Arc<GradedHopfQuasigroup>, c: &RightComodule) -> Result<LongDimodule, ModuleError> {
    let report = check_right_comodule(&h, c)?;
    if !report.passed() {
        return Err(ModuleError::InvalidComodule(Box::new(report)));
    }
    let f = h.field();
    let n = h.order();
    let de = h.dim(E);
    let dims: Vec<usize> = (0..n).map(|q| h.dim(q) * c.dim).collect();
    let action = (0..n * n)
        .map(|i| {
            let (p, q) = (i / n, i % n);
            Chain::new(f, &[h.dim(p), h.dim(q), c.dim]).binary(0, h.mult(p, q)).build()
        })
        .collect::<Result<_, _>>()?;
    let right = (0..n).map(|q| Chain::new(f, &[h.dim(q), c.dim]).split(1, &c.coaction, c.dim, de).build()).collect::<Result<_, _>>()?;
    let base = GradedQuasimodule::from_parts(h, dims, action)?;
    LongDimodule::from_parts(base, right)?.validated()
}

/// `ρ(m) = m⊗1`.
pub fn with_trivial_coaction(m: &GradedQuasimodule) -> Result<LongDimodule, ModuleError> {
    let h = m.host();
    let right = (0..m.order()).map(|q| Chain::new(m.field(), &[m.dim(q)]).insert(1, h.unit_map()).build()).collect::<Result<_, _>>()?;
    LongDimodule::from_parts(m.clone(), right)?.validated()
}

/// `ρ(x) = x⊗e` on a module from [`crate::quasimodule::build_kx`].
pub fn attach_kx_right_coaction(m: &GradedQuasimodule) -> Result<LongDimodule, ModuleError> {
    let right = (0..m.order()).map(|q| LinMap::identity(m.field(), m.dim(q))).collect();
    LongDimodule::from_parts(m.clone(), right)?.validated()
}

/// Diagonal action and `ρ(m⊗n) = m₀⊗n₀⊗m₁n₁`.
pub fn tensor_dimodules(m: &LongDimodule, n: &LongDimodule) -> Result<LongDimodule, ModuleError> {
    if !same_host(m, n) {
        return Err(ModuleError::HostMismatch);
    }
    let base = tensor_quasimodules(m, n)?;
    let h = m.host();
    let de = h.dim(E);
    let right = (0..m.order())
        .map(|q| {
            Chain::new(m.field(), &[m.dim(q), n.dim(q)])
                .split(0, m.right_coaction(q), m.dim(q), de)
                .split(2, n.right_coaction(q), n.dim(q), de)
                .swap(1)
                .binary(2, h.mult(E, E))
                .build()
        })
        .collect::<Result<_, _>>()?;
    LongDimodule::from_parts(base, right)?.validated()
}

/// `R_q(m⊗n) = n₁·m ⊗ n₀` on `M_q⊗M_q`.
pub fn long_operator(d: &LongDimodule, q: usize) -> Result<LinMap, LinalgError> {
    let h = d.host();
    let dq = d.dim(q);
    Chain::new(d.field(), &[dq, dq])
        .split(1, d.right_coaction(q), dq, h.dim(E))
        .permute(&[2, 0, 1])
        .local(0, 2, d.action(E, q), &[d.dim(h.gm(E, q))])
        .build()
}

/// Compares `R¹²R²³` with `R²³R¹²` on `V⊗V⊗V` for `R` on `V⊗V`.
pub fn long_equation_outcome(grade: usize, r: &LinMap, dim: usize) -> Outcome {
    let f = r.field();
    let id = LinMap::identity(f, dim);
    let (r12, r23) = match (r.tensor(&id), id.tensor(r)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return e.into(),
    };
    compare(&[grade], &[dim, dim, dim], r12.compose(&r23), r23.compose(&r12))
}

pub fn check_long_equation(d: &LongDimodule) -> CheckReport {
    let mut r = CheckReport::new("long-equation");
    r.record(
        "long-equation",
        "R¹²R²³ = R²³R¹²",
        over(d.order(), 1, |t| match long_operator(d, t[0]) {
            Ok(op) => long_equation_outcome(t[0], &op, d.dim(t[0])),
            Err(e) => e.into(),
        }),
    );
    r
}
