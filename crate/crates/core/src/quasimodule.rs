//! Graded quasimodules `φ_{p,q}: H_p⊗M_q → M_{pq}`, Hopf quasimodules with
//! left coactions `ρ_q: M_q → H_q⊗M_q`, and the structure theory around
//! coinvariants: the modified action and the isomorphism `H⊗M^{coH} ≅ M`.

use std::sync::Arc;

use crate::build_kq;
use crate::hopf::{failing, GradedHopfQuasigroup, HopfError};
use crate::linalg::{Chain, Field, LinMap, LinalgError, Vector};
use crate::quasigroup::Quasigroup;
use crate::report::{compare, compare_chains, over, CheckReport, Outcome};

#[derive(Debug, thiserror::Error)]
pub enum ModuleError {
    #[error("{what}: expected a {expected_dst}x{expected_src} matrix, found {found_dst}x{found_src}")]
    Shape { what: String, expected_dst: usize, expected_src: usize, found_dst: usize, found_src: usize },
    #[error("expected {expected} entries for {what}, found {found}")]
    Count { what: String, expected: usize, found: usize },
    #[error("component sizes must all be equal, got {0:?}")]
    NonUniformSizes(Vec<usize>),
    #[error("the two modules are over different Hopf quasigroups")]
    HostMismatch,
    #[error("not a valid module; failing checks: {}", failing(.0))]
    Invalid(Box<CheckReport>),
    #[error("not a right comodule; failing checks: {}", failing(.0))]
    InvalidComodule(Box<CheckReport>),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

pub(crate) fn expect_shape(what: impl FnOnce() -> String, m: &LinMap, field: Field, dst: usize, src: usize) -> Result<(), ModuleError> {
    if m.field() != field {
        return Err(LinalgError::MixedFields.into());
    }
    if m.dst_dim() != dst || m.src_dim() != src {
        return Err(ModuleError::Shape {
            what: what(),
            expected_dst: dst,
            expected_src: src,
            found_dst: m.dst_dim(),
            found_src: m.src_dim(),
        });
    }
    Ok(())
}

pub(crate) fn expect_count(what: &str, expected: usize, found: usize) -> Result<(), ModuleError> {
    if expected != found {
        return Err(ModuleError::Count { what: what.to_string(), expected, found });
    }
    Ok(())
}

pub(crate) fn require(report: CheckReport) -> Result<(), ModuleError> {
    if report.passed() {
        Ok(())
    } else {
        Err(ModuleError::Invalid(Box::new(report)))
    }
}

/// A family `{M_q}` with a graded action of `H`. Built unvalidated by
/// [`GradedQuasimodule::from_parts`]; every other constructor validates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedQuasimodule {
    host: Arc<GradedHopfQuasigroup>,
    dims: Vec<usize>,
    action: Vec<LinMap>,
}

impl GradedQuasimodule {
    /// `action` is indexed by `p·n + q`. Only shapes are checked.
    pub fn from_parts(host: Arc<GradedHopfQuasigroup>, dims: Vec<usize>, action: Vec<LinMap>) -> Result<Self, ModuleError> {
        let n = host.order();
        expect_count("dims", n, dims.len())?;
        expect_count("action", n * n, action.len())?;
        for (i, a) in action.iter().enumerate() {
            let (p, q) = (i / n, i % n);
            expect_shape(|| format!("action({p},{q})"), a, host.field(), dims[host.gm(p, q)], host.dim(p) * dims[q])?;
        }
        Ok(GradedQuasimodule { host, dims, action })
    }

    pub fn host(&self) -> &GradedHopfQuasigroup {
        &self.host
    }

    pub fn shared_host(&self) -> Arc<GradedHopfQuasigroup> {
        Arc::clone(&self.host)
    }

    pub fn field(&self) -> Field {
        self.host.field()
    }

    pub fn order(&self) -> usize {
        self.host.order()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, q: usize) -> usize {
        self.dims[q]
    }

    /// `φ_{p,q}: H_p⊗M_q → M_{pq}`.
    pub fn action(&self, p: usize, q: usize) -> &LinMap {
        &self.action[p * self.order() + q]
    }

    pub fn with_action(&self, p: usize, q: usize, map: LinMap) -> Result<Self, ModuleError> {
        let mut action = self.action.clone();
        action[p * self.order() + q] = map;
        Self::from_parts(self.shared_host(), self.dims.clone(), action)
    }

    pub fn validated(self) -> Result<Self, ModuleError> {
        require(check_quasimodule(&self))?;
        Ok(self)
    }
}

/// A graded quasimodule whose components are left `H_q`-comodules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfQuasimodule {
    base: GradedQuasimodule,
    coaction: Vec<LinMap>,
}

impl std::ops::Deref for HopfQuasimodule {
    type Target = GradedQuasimodule;

    fn deref(&self) -> &GradedQuasimodule {
        &self.base
    }
}

impl HopfQuasimodule {
    /// `coaction[q]` is `ρ_q: M_q → H_q⊗M_q`. Only shapes are checked.
    pub fn from_parts(base: GradedQuasimodule, coaction: Vec<LinMap>) -> Result<Self, ModuleError> {
        let h = base.host();
        expect_count("coaction", h.order(), coaction.len())?;
        for (q, c) in coaction.iter().enumerate() {
            expect_shape(|| format!("coaction({q})"), c, h.field(), h.dim(q) * base.dim(q), base.dim(q))?;
        }
        Ok(HopfQuasimodule { base, coaction })
    }

    pub fn base(&self) -> &GradedQuasimodule {
        &self.base
    }

    pub fn coaction(&self, q: usize) -> &LinMap {
        &self.coaction[q]
    }

    pub fn with_coaction(&self, q: usize, map: LinMap) -> Result<Self, ModuleError> {
        let mut coaction = self.coaction.clone();
        coaction[q] = map;
        Self::from_parts(self.base.clone(), coaction)
    }

    pub fn with_action(&self, p: usize, q: usize, map: LinMap) -> Result<Self, ModuleError> {
        Self::from_parts(self.base.with_action(p, q, map)?, self.coaction.clone())
    }

    pub fn validated(self) -> Result<Self, ModuleError> {
        require(check_hopf_quasimodule(&self))?;
        Ok(self)
    }
}

pub(crate) fn same_host(a: &GradedQuasimodule, b: &GradedQuasimodule) -> bool {
    Arc::ptr_eq(&a.host, &b.host) || a.host == b.host
}

/// `h⊗m ↦ h₁·(S(h₂)·m)`, a map `H_p⊗M_q → M_q`.
pub fn quasi_adjoint(m: &GradedQuasimodule, p: usize, q: usize) -> Result<LinMap, LinalgError> {
    let h = m.host();
    let pi = h.gi(p);
    let mid = h.gm(pi, q);
    Chain::new(m.field(), &[h.dim(p), m.dim(q)])
        .split(0, h.comult(p), h.dim(p), h.dim(p))
        .unary(1, h.antipode(p))
        .local(1, 2, m.action(pi, q), &[m.dim(mid)])
        .local(0, 2, m.action(p, mid), &[m.dim(h.gm(p, mid))])
        .build()
}

pub(crate) fn quasimodule_checks(m: &GradedQuasimodule, r: &mut CheckReport) {
    let h = m.host();
    let f = m.field();
    let n = m.order();
    let e = 0;
    r.record(
        "unit-acts-trivially",
        "1·m = m",
        over(n, 1, |t| {
            let q = t[0];
            let lhs = Chain::new(f, &[m.dim(q)]).insert(0, h.unit_map()).binary(0, m.action(e, q));
            compare_chains(t, &[m.dim(q)], &[h.gm(e, q)], &lhs, &[q], &Chain::new(f, &[m.dim(q)]))
        }),
    );
    r.record(
        "inverse-left",
        "h₁·(S(h₂)·m) = ε(h)m",
        over(n, 2, |t| {
            let (p, q) = (t[0], t[1]);
            let src = [h.dim(p), m.dim(q)];
            let (pi, mid) = (h.gi(p), h.gm(h.gi(p), q));
            let lhs = Chain::new(f, &src)
                .split(0, h.comult(p), h.dim(p), h.dim(p))
                .unary(1, h.antipode(p))
                .local(1, 2, m.action(pi, q), &[m.dim(mid)])
                .local(0, 2, m.action(p, mid), &[m.dim(h.gm(p, mid))]);
            let rhs = Chain::new(f, &src).contract(0, h.counit(p));
            compare_chains(t, &src, &[h.gm(p, mid)], &lhs, &[q], &rhs)
        }),
    );
    r.record(
        "inverse-right",
        "S(h₁)·(h₂·m) = ε(h)m",
        over(n, 2, |t| {
            let (p, q) = (t[0], t[1]);
            let src = [h.dim(p), m.dim(q)];
            let (pi, pq) = (h.gi(p), h.gm(p, q));
            let lhs = Chain::new(f, &src)
                .split(0, h.comult(p), h.dim(p), h.dim(p))
                .local(1, 2, m.action(p, q), &[m.dim(pq)])
                .unary(0, h.antipode(p))
                .local(0, 2, m.action(pi, pq), &[m.dim(h.gm(pi, pq))]);
            let rhs = Chain::new(f, &src).contract(0, h.counit(p));
            compare_chains(t, &src, &[h.gm(pi, pq)], &lhs, &[q], &rhs)
        }),
    );
}

/// Unit and inverse-property axioms of a graded quasimodule.
pub fn check_quasimodule(m: &GradedQuasimodule) -> CheckReport {
    let mut r = CheckReport::new("quasimodule");
    quasimodule_checks(m, &mut r);
    r
}

/// Coassociativity and counitality of a family of left comodules
/// `ρ_q: C_q → H_q⊗C_q`.
fn left_comodule_checks(h: &GradedHopfQuasigroup, dims: &[usize], rho: &(dyn Fn(usize) -> LinMap + Sync), r: &mut CheckReport) {
    let f = h.field();
    r.record(
        "comodule-coassociativity",
        "(Δ⊗id)ρ = (id⊗ρ)ρ",
        over(h.order(), 1, |t| {
            let q = t[0];
            let (d, c) = (h.dim(q), dims[q]);
            let rho = rho(q);
            let lhs = Chain::new(f, &[c]).split(0, &rho, d, c).split(0, h.comult(q), d, d);
            let rhs = Chain::new(f, &[c]).split(0, &rho, d, c).split(1, &rho, d, c);
            compare_chains(t, &[c], &[q, q, q], &lhs, &[q, q, q], &rhs)
        }),
    );
    r.record(
        "comodule-counit",
        "(ε⊗id)ρ = id",
        over(h.order(), 1, |t| {
            let q = t[0];
            let (d, c) = (h.dim(q), dims[q]);
            let rho = rho(q);
            let lhs = Chain::new(f, &[c]).split(0, &rho, d, c).contract(0, h.counit(q));
            compare_chains(t, &[c], &[q], &lhs, &[q], &Chain::new(f, &[c]))
        }),
    );
}

/// Quasimodule axioms, comodule axioms and the compatibility
/// `ρ(h·m) = h₁m₋₁ ⊗ h₂·m₀`.
pub fn check_hopf_quasimodule(m: &HopfQuasimodule) -> CheckReport {
    let mut r = CheckReport::new("hopf-quasimodule");
    quasimodule_checks(m, &mut r);
    let h = m.host();
    let f = m.field();
    left_comodule_checks(h, m.dims(), &|q| m.coaction(q).clone(), &mut r);
    r.record(
        "coaction-compatibility",
        "ρ_{pq}(h·m) = h₁m₋₁ ⊗ h₂·m₀",
        over(m.order(), 2, |t| {
            let (p, q) = (t[0], t[1]);
            let pq = h.gm(p, q);
            let src = [h.dim(p), m.dim(q)];
            let lhs = Chain::new(f, &src).local(0, 2, m.action(p, q), &[m.dim(pq)]).split(0, m.coaction(pq), h.dim(pq), m.dim(pq));
            let rhs = Chain::new(f, &src)
                .split(0, h.comult(p), h.dim(p), h.dim(p))
                .split(2, m.coaction(q), h.dim(q), m.dim(q))
                .swap(1)
                .binary(0, h.mult(p, q))
                .local(1, 2, m.action(p, q), &[m.dim(pq)]);
            compare_chains(t, &src, &[pq, pq], &lhs, &[pq, pq], &rhs)
        }),
    );
    r
}

/// `f(h₁·(S(h₂)·m)) = h₁·(S(h₂)·f(m))` for a family `f_q: M_q → N_q`.
pub fn check_quasimodule_map(m: &GradedQuasimodule, n: &GradedQuasimodule, maps: &[LinMap]) -> Result<CheckReport, ModuleError> {
    if !same_host(m, n) {
        return Err(ModuleError::HostMismatch);
    }
    expect_count("map components", m.order(), maps.len())?;
    for (q, f) in maps.iter().enumerate() {
        expect_shape(|| format!("map({q})"), f, m.field(), n.dim(q), m.dim(q))?;
    }
    let mut r = CheckReport::new("quasimodule-map");
    quasimodule_map_check(m, n, maps, &mut r);
    Ok(r)
}

fn quasimodule_map_check(m: &GradedQuasimodule, n: &GradedQuasimodule, maps: &[LinMap], r: &mut CheckReport) {
    let h = m.host();
    r.record(
        "quasilinear",
        "f(h₁·(S(h₂)·m)) = h₁·(S(h₂)·f(m))",
        over(m.order(), 2, |t| {
            let (p, q) = (t[0], t[1]);
            let lhs = quasi_adjoint(m, p, q).and_then(|a| maps[q].compose(&a));
            let rhs =
                quasi_adjoint(n, p, q).and_then(|a| LinMap::identity(m.field(), h.dim(p)).tensor(&maps[q]).and_then(|idf| a.compose(&idf)));
            compare(t, &[h.dim(p), m.dim(q)], lhs, rhs)
        }),
    );
}

/// [`check_quasimodule_map`] plus colinearity `m₋₁⊗f(m₀) = ρ(f(m))`.
pub fn check_hopf_quasimodule_map(m: &HopfQuasimodule, n: &HopfQuasimodule, maps: &[LinMap]) -> Result<CheckReport, ModuleError> {
    let mut r = check_quasimodule_map(m, n, maps)?;
    r.suite = "hopf-quasimodule-map".into();
    for c in &mut r.results {
        c.suite = r.suite.clone();
    }
    let h = m.host();
    let f = m.field();
    r.record(
        "colinear",
        "m₋₁⊗f(m₀) = ρ(f(m))",
        over(m.order(), 1, |t| {
            let q = t[0];
            let lhs = Chain::new(f, &[m.dim(q)]).split(0, m.coaction(q), h.dim(q), m.dim(q)).unary(1, &maps[q]);
            let rhs = Chain::new(f, &[m.dim(q)]).unary(0, &maps[q]).split(0, n.coaction(q), h.dim(q), n.dim(q));
            compare_chains(t, &[m.dim(q)], &[q, q], &lhs, &[q, q], &rhs)
        }),
    );
    Ok(r)
}

/// The `kQ`-quasimodule on `kX_q = k^s` where `p` sends the `i`-th basis
/// vector of `X_q` to the `i`-th one of `X_{pq}`.
pub fn build_kx(q: &Quasigroup, sizes: &[usize], field: Field) -> Result<GradedQuasimodule, ModuleError> {
    expect_count("sizes", q.order(), sizes.len())?;
    let s = sizes.first().copied().unwrap_or(0);
    if sizes.iter().any(|&x| x != s) {
        return Err(ModuleError::NonUniformSizes(sizes.to_vec()));
    }
    let host = Arc::new(build_kq(q, field));
    let n = q.order();
    let action = vec![LinMap::identity(field, s); n * n];
    GradedQuasimodule::from_parts(host, sizes.to_vec(), action)?.validated()
}

/// `ρ_q(x) = q⊗x` on a module from [`build_kx`].
pub fn attach_kx_coaction(m: GradedQuasimodule) -> Result<HopfQuasimodule, ModuleError> {
    let coaction = (0..m.order()).map(|q| LinMap::identity(m.field(), m.dim(q))).collect();
    HopfQuasimodule::from_parts(m, coaction)?.validated()
}

/// `H` acting on itself by multiplication, coacting by `Δ`.
pub fn regular_module(h: Arc<GradedHopfQuasigroup>) -> Result<HopfQuasimodule, ModuleError> {
    let n = h.order();
    let action = (0..n * n).map(|i| h.mult(i / n, i % n).clone()).collect();
    let coaction = (0..n).map(|q| h.comult(q).clone()).collect();
    let dims = h.dims().to_vec();
    let base = GradedQuasimodule::from_parts(h, dims, action)?;
    HopfQuasimodule::from_parts(base, coaction)?.validated()
}

/// `M_q⊗N_q` with `h·(m⊗n) = h₁·m ⊗ h₂·n`.
pub fn tensor_quasimodules(m: &GradedQuasimodule, n: &GradedQuasimodule) -> Result<GradedQuasimodule, ModuleError> {
    if !same_host(m, n) {
        return Err(ModuleError::HostMismatch);
    }
    let h = m.host();
    let order = m.order();
    let dims: Vec<usize> = (0..order).map(|q| m.dim(q) * n.dim(q)).collect();
    let action = (0..order * order)
        .map(|i| {
            let (p, q) = (i / order, i % order);
            let pq = h.gm(p, q);
            Chain::new(m.field(), &[h.dim(p), m.dim(q), n.dim(q)])
                .split(0, h.comult(p), h.dim(p), h.dim(p))
                .swap(1)
                .local(0, 2, m.action(p, q), &[m.dim(pq)])
                .local(1, 2, n.action(p, q), &[n.dim(pq)])
                .build()
        })
        .collect::<Result<_, _>>()?;
    GradedQuasimodule::from_parts(m.shared_host(), dims, action)?.validated()
}

/// `x⊗m ↦ S_q(x)·m`, a map `H_q⊗M_q → M_{q⁻¹q}`.
fn antipode_action(m: &GradedQuasimodule, q: usize) -> Result<LinMap, LinalgError> {
    let h = m.host();
    let qi = h.gi(q);
    Chain::new(m.field(), &[h.dim(q), m.dim(q)]).unary(0, h.antipode(q)).local(0, 2, m.action(qi, q), &[m.dim(h.gm(qi, q))]).build()
}

/// `m ↦ S_q(m₋₁)·m₀`, a map `M_q → M_e`.
pub fn coinvariant_part(m: &HopfQuasimodule, q: usize) -> Result<LinMap, LinalgError> {
    antipode_action(m, q)?.compose(m.coaction(q))
}

/// `ρ_e(S(m₋₁)·m₀) = 1⊗S(m₋₁)·m₀` and its translate by `h ∈ H_p`.
pub fn check_lemma41(m: &HopfQuasimodule) -> CheckReport {
    let mut r = CheckReport::new("coinvariant-part");
    let h = m.host();
    let f = m.field();
    let e = 0;
    r.record(
        "lands-in-coinvariants",
        "ρ_e(S_q(m₋₁)·m₀) = 1⊗S_q(m₋₁)·m₀",
        over(m.order(), 1, |t| {
            let q = t[0];
            let target = h.gm(h.gi(q), q);
            let Ok(part) = coinvariant_part(m, q) else {
                return Outcome::Mismatch(format!("component {q}: coinvariant part is ill-formed"));
            };
            let lhs = Chain::new(f, &[m.dim(q)]).unary(0, &part).split(0, m.coaction(target), h.dim(target), m.dim(target));
            let rhs = Chain::new(f, &[m.dim(q)]).unary(0, &part).insert(0, h.unit_map());
            compare_chains(t, &[m.dim(q)], &[target, target], &lhs, &[e, e], &rhs)
        }),
    );
    r.record(
        "translates-are-free",
        "ρ_p(h·(S_q(m₋₁)·m₀)) = h₁ ⊗ h₂·(S_q(m₋₁)·m₀)",
        over(m.order(), 2, |t| {
            let (p, q) = (t[0], t[1]);
            let src = [h.dim(p), m.dim(q)];
            let Ok(part) = coinvariant_part(m, q) else {
                return Outcome::Mismatch(format!("component {q}: coinvariant part is ill-formed"));
            };
            let pe = h.gm(p, e);
            let lhs = Chain::new(f, &src).unary(1, &part).binary(0, m.action(p, e)).split(0, m.coaction(pe), h.dim(pe), m.dim(pe));
            let rhs =
                Chain::new(f, &src).unary(1, &part).split(0, h.comult(p), h.dim(p), h.dim(p)).local(1, 2, m.action(p, e), &[m.dim(pe)]);
            compare_chains(t, &src, &[pe, pe], &lhs, &[p, pe], &rhs)
        }),
    );
    r
}

/// `h ▷ m = (h m₋₂)·(S_q(m₋₁)·m₀)` with the same coaction, unvalidated.
pub fn modified_action_unchecked(m: &HopfQuasimodule) -> Result<HopfQuasimodule, ModuleError> {
    let h = m.host();
    let n = m.order();
    let e = 0;
    let action = (0..n * n)
        .map(|i| {
            let (p, q) = (i / n, i % n);
            let pq = h.gm(p, q);
            let part = antipode_action(m, q)?;
            Chain::new(m.field(), &[h.dim(p), m.dim(q)])
                .split(1, m.coaction(q), h.dim(q), m.dim(q))
                .split(1, h.comult(q), h.dim(q), h.dim(q))
                .local(2, 2, &part, &[m.dim(e)])
                .binary(0, h.mult(p, q))
                .local(0, 2, m.action(pq, e), &[m.dim(h.gm(pq, e))])
                .build()
        })
        .collect::<Result<Vec<_>, LinalgError>>()?;
    let base = GradedQuasimodule::from_parts(m.shared_host(), m.dims().to_vec(), action)?;
    HopfQuasimodule::from_parts(base, m.coaction.clone())
}

/// The modified action, validated as a Hopf quasimodule.
pub fn modified_action(m: &HopfQuasimodule) -> Result<HopfQuasimodule, ModuleError> {
    modified_action_unchecked(m)?.validated()
}

/// Validates the modified action; whether applying it twice changes
/// anything is recorded, not asserted.
pub fn check_modified_action(m: &HopfQuasimodule) -> Result<CheckReport, ModuleError> {
    let once = modified_action_unchecked(m)?;
    let mut r = check_hopf_quasimodule(&once);
    r.suite = "modified-action".into();
    for c in &mut r.results {
        c.suite = r.suite.clone();
    }
    let twice = modified_action_unchecked(&once)?;
    let again = check_hopf_quasimodule(&twice);
    r.observe(
        "twice-valid",
        "▷ applied to (M, ▷, ρ) is again a Hopf quasimodule",
        if again.passed() { Outcome::Holds } else { Outcome::Mismatch(failing(&again)) },
    );
    let n = m.order();
    let same = (0..n * n).find(|&i| once.action(i / n, i % n) != twice.action(i / n, i % n));
    r.observe(
        "idempotent",
        "▷ of ▷ equals ▷",
        match same {
            None => Outcome::Holds,
            Some(i) => Outcome::Mismatch(format!("differs on component ({},{})", i / n, i % n)),
        },
    );
    Ok(r)
}

/// Basis of `M^{coH} = {m ∈ M_e : ρ_e(m) = 1⊗m}`.
pub fn coinvariants(m: &HopfQuasimodule) -> Result<Vec<Vector>, ModuleError> {
    let h = m.host();
    let e = 0;
    let unit_side = Chain::new(m.field(), &[m.dim(e)]).insert(0, h.unit_map()).build()?;
    Ok(m.coaction(e).sub(&unit_side)?.kernel())
}

/// `H⊗M^{coH}` together with the inclusion `M^{coH} → M_e`.
#[derive(Clone, Debug)]
pub struct FreeModule {
    pub module: HopfQuasimodule,
    pub inclusion: LinMap,
}

/// `H_q⊗M^{coH}` with `h·(g⊗m) = hg⊗m` and `ρ(g⊗m) = g₁⊗g₂⊗m`.
pub fn h_tensor_coinv(m: &HopfQuasimodule) -> Result<FreeModule, ModuleError> {
    let h = m.host();
    let f = m.field();
    let e = 0;
    let basis = coinvariants(m)?;
    let c = basis.len();
    let inclusion = LinMap::from_columns(f, m.dim(e), &basis)?;
    let n = m.order();
    let dims: Vec<usize> = (0..n).map(|q| h.dim(q) * c).collect();
    let action = (0..n * n)
        .map(|i| {
            let (p, q) = (i / n, i % n);
            Chain::new(f, &[h.dim(p), h.dim(q), c]).binary(0, h.mult(p, q)).build()
        })
        .collect::<Result<_, _>>()?;
    let coaction =
        (0..n).map(|q| Chain::new(f, &[h.dim(q), c]).split(0, h.comult(q), h.dim(q), h.dim(q)).build()).collect::<Result<_, _>>()?;
    let base = GradedQuasimodule::from_parts(m.shared_host(), dims, action)?;
    let module = HopfQuasimodule::from_parts(base, coaction)?.validated()?;
    Ok(FreeModule { module, inclusion })
}

/// `σ_q(g⊗m) = g·m`.
fn sigma(m: &HopfQuasimodule, inclusion: &LinMap, q: usize) -> Result<LinMap, LinalgError> {
    let h = m.host();
    let e = 0;
    Chain::new(m.field(), &[h.dim(q), inclusion.src_dim()]).unary(1, inclusion).local(0, 2, m.action(q, e), &[m.dim(h.gm(q, e))]).build()
}

/// `m ↦ m₋₂ ⊗ S_q(m₋₁)·m₀` as a map into `H_q⊗M_e`.
fn sigma_inverse_full(m: &HopfQuasimodule, q: usize) -> Result<LinMap, LinalgError> {
    let h = m.host();
    let part = antipode_action(m, q)?;
    let e = 0;
    Chain::new(m.field(), &[m.dim(q)])
        .split(0, m.coaction(q), h.dim(q), m.dim(q))
        .split(0, h.comult(q), h.dim(q), h.dim(q))
        .local(1, 2, &part, &[m.dim(e)])
        .build()
}

/// Checks `σ: H⊗M^{coH} → M` is an isomorphism of Hopf quasimodules:
/// `σ⁻¹` lands in `H⊗M^{coH}`, both composites are identities, `σ` is
/// quasilinear and colinear, and the dimensions match.
pub fn fundamental_theorem_check(m: &HopfQuasimodule) -> Result<CheckReport, ModuleError> {
    let mut r = CheckReport::new("fundamental-theorem");
    r.extend(check_hopf_quasimodule(m));
    let free = match h_tensor_coinv(m) {
        Ok(free) => free,
        Err(ModuleError::Invalid(report)) => {
            r.extend(*report);
            return Ok(r);
        }
        Err(e) => return Err(e),
    };
    let h = m.host();
    let f = m.field();
    let c = free.inclusion.src_dim();
    let projection = free.inclusion.left_inverse().expect("kernel basis is independent");
    let n = m.order();
    r.assert(
        "dimension",
        "dim M_q = dim H_q · dim M^{coH}",
        (0..n).all(|q| m.dim(q) == h.dim(q) * c),
        format!("dim M^coH = {c}, dims {:?}, host dims {:?}", m.dims(), h.dims()),
    );
    let lift = |q: usize| LinMap::identity(f, h.dim(q)).tensor(&free.inclusion);
    let project = |q: usize| LinMap::identity(f, h.dim(q)).tensor(&projection);
    let inverse = |q: usize| -> Result<LinMap, LinalgError> { project(q)?.compose(&sigma_inverse_full(m, q)?) };
    r.record(
        "inverse-lands-in-coinvariants",
        "m₋₂ ⊗ S_q(m₋₁)·m₀ ∈ H_q⊗M^{coH}",
        over(n, 1, |t| {
            let q = t[0];
            let full = sigma_inverse_full(m, q);
            let round = inverse(t[0]).and_then(|inv| lift(q)?.compose(&inv));
            compare(t, &[m.dim(q)], round, full)
        }),
    );
    r.record(
        "sigma-after-inverse",
        "σ_q σ_q⁻¹ = id",
        over(n, 1, |t| {
            let q = t[0];
            let lhs = inverse(q).and_then(|inv| sigma(m, &free.inclusion, q)?.compose(&inv));
            compare(t, &[m.dim(q)], lhs, Ok(LinMap::identity(f, m.dim(q))))
        }),
    );
    r.record(
        "inverse-after-sigma",
        "σ_q⁻¹ σ_q = id",
        over(n, 1, |t| {
            let q = t[0];
            let lhs = sigma(m, &free.inclusion, q).and_then(|s| inverse(q)?.compose(&s));
            compare(t, &[h.dim(q), c], lhs, Ok(LinMap::identity(f, h.dim(q) * c)))
        }),
    );
    let sigmas: Vec<LinMap> = (0..n).map(|q| sigma(m, &free.inclusion, q)).collect::<Result<_, _>>()?;
    let map_report = check_hopf_quasimodule_map(&free.module, m, &sigmas)?;
    for c in map_report.results {
        let outcome = match (&c.witness, c.status.holds()) {
            (Some(w), _) => Outcome::Witness(w.clone()),
            (None, true) => Outcome::Holds,
            (None, false) => Outcome::Mismatch(c.note.clone().unwrap_or_default()),
        };
        r.record(&format!("sigma-{}", c.id), &c.anchor, outcome);
    }
    Ok(r)
}
