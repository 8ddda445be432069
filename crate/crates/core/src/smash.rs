//! Hopf quasigroups `A` carrying an action of a graded Hopf quasigroup `H`
//! (one map `φ_p: H_p⊗A → A` per grade), and the smash product `A⋊H` on the
//! components `A⊗H_p`.
//!
//! Construction and validation of the smash product are separate, so both
//! directions of "smash product is a Hopf quasigroup ⟺ the action is
//! compatible with products of antipodes" can be observed on failing data.

use std::sync::Arc;

use rayon::prelude::*;

use crate::build_kq;
use crate::hopf::{check_hopf_axioms, failing, GradedHopfQuasigroup, HopfError, HopfQuasigroupData};
use crate::linalg::{Chain, Field, LinMap, LinalgError, Scalar, Vector};
use crate::quasigroup::{enumerate_ip_loops, PropertyFilter, Quasigroup};
use crate::report::{compare_chains, over, CheckReport, Outcome};

const E: usize = 0;

#[derive(Debug, thiserror::Error)]
pub enum SmashError {
    #[error("{what}: expected a {expected_dst}x{expected_src} matrix, found {found_dst}x{found_src}")]
    Shape { what: String, expected_dst: usize, expected_src: usize, found_dst: usize, found_src: usize },
    #[error("expected {expected} action maps, found {found}")]
    Count { expected: usize, found: usize },
    #[error("h₁⊗h₂·a = h₂⊗h₁·a fails; the smash product is not defined")]
    ActionNotCocommutative(Box<CheckReport>),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

fn expect_shape(what: impl FnOnce() -> String, m: &LinMap, field: Field, dst: usize, src: usize) -> Result<(), SmashError> {
    if m.field() != field {
        return Err(LinalgError::MixedFields.into());
    }
    if m.dst_dim() != dst || m.src_dim() != src {
        return Err(SmashError::Shape {
            what: what(),
            expected_dst: dst,
            expected_src: src,
            found_dst: m.dst_dim(),
            found_src: m.src_dim(),
        });
    }
    Ok(())
}

/// A vector space `M` with maps `φ_p: H_p⊗M → M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UngradedQuasimodule {
    host: Arc<GradedHopfQuasigroup>,
    dim: usize,
    action: Vec<LinMap>,
}

impl UngradedQuasimodule {
    pub fn from_parts(host: Arc<GradedHopfQuasigroup>, dim: usize, action: Vec<LinMap>) -> Result<Self, SmashError> {
        if action.len() != host.order() {
            return Err(SmashError::Count { expected: host.order(), found: action.len() });
        }
        for (p, a) in action.iter().enumerate() {
            expect_shape(|| format!("action({p})"), a, host.field(), dim, host.dim(p) * dim)?;
        }
        Ok(UngradedQuasimodule { host, dim, action })
    }

    pub fn host(&self) -> &GradedHopfQuasigroup {
        &self.host
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self, p: usize) -> &LinMap {
        &self.action[p]
    }
}

/// A Hopf quasigroup `A` with an action of `H` on its underlying space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasimoduleHopfQuasigroup {
    module: UngradedQuasimodule,
    algebra: HopfQuasigroupData,
}

impl QuasimoduleHopfQuasigroup {
    /// Only shapes are checked; see [`check_quasimodule_hopf`].
    pub fn from_parts(host: Arc<GradedHopfQuasigroup>, algebra: HopfQuasigroupData, action: Vec<LinMap>) -> Result<Self, SmashError> {
        algebra.as_graded()?;
        if algebra.field != host.field() {
            return Err(LinalgError::MixedFields.into());
        }
        let module = UngradedQuasimodule::from_parts(host, algebra.dim, action)?;
        Ok(QuasimoduleHopfQuasigroup { module, algebra })
    }

    /// `h·a = ε(h)a`.
    pub fn trivial_action(host: Arc<GradedHopfQuasigroup>, algebra: HopfQuasigroupData) -> Result<Self, SmashError> {
        let action = (0..host.order())
            .map(|p| Chain::new(host.field(), &[host.dim(p), algebra.dim]).contract(0, host.counit(p)).build())
            .collect::<Result<_, _>>()?;
        Self::from_parts(host, algebra, action)
    }

    /// `kQ` acting on the loop algebra `kL`, with `p` acting by the permutation
    /// `images[p]` of `L`.
    pub fn by_loop_maps(grading: &Quasigroup, l: &Quasigroup, images: &[Vec<usize>], field: Field) -> Result<Self, SmashError> {
        let host = Arc::new(build_kq(grading, field));
        let algebra = HopfQuasigroupData::loop_algebra(l, field);
        let action = images.iter().map(|img| LinMap::from_function(field, l.order(), img)).collect();
        Self::from_parts(host, algebra, action)
    }

    pub fn host(&self) -> &GradedHopfQuasigroup {
        self.module.host()
    }

    pub fn shared_host(&self) -> Arc<GradedHopfQuasigroup> {
        Arc::clone(&self.module.host)
    }

    pub fn algebra(&self) -> &HopfQuasigroupData {
        &self.algebra
    }

    pub fn action(&self, p: usize) -> &LinMap {
        self.module.action(p)
    }

    pub fn field(&self) -> Field {
        self.algebra.field
    }

    pub fn with_action(&self, p: usize, map: LinMap) -> Result<Self, SmashError> {
        let mut action = self.module.action.clone();
        action[p] = map;
        Self::from_parts(self.shared_host(), self.algebra.clone(), action)
    }
}

fn one_grade(h: &GradedHopfQuasigroup, eval: impl Fn(usize) -> Outcome + Sync + Send) -> Outcome {
    over(h.order(), 1, |t| eval(t[0]))
}

/// The unit and inverse-property axioms of the action, the module algebra
/// and module coalgebra identities, the Hopf quasigroup axioms of `A`, and
/// then `h·S(a) = S(h·a)`, which must follow from them.
pub fn check_quasimodule_hopf(x: &QuasimoduleHopfQuasigroup) -> CheckReport {
    let mut r = CheckReport::new("quasimodule-hopf-quasigroup");
    let h = x.host();
    let a = x.algebra();
    let f = x.field();
    let d = a.dim;
    match a.as_graded() {
        Ok(g) => {
            for c in check_hopf_axioms(&g).results {
                let outcome = match (c.witness, c.status.holds()) {
                    (Some(w), _) => Outcome::Witness(w),
                    (None, true) => Outcome::Holds,
                    (None, false) => Outcome::Mismatch(c.note.unwrap_or_default()),
                };
                r.record(&format!("algebra/{}", c.id), &c.anchor, outcome);
            }
        }
        Err(e) => r.assert("algebra/shape", "A is a Hopf quasigroup", false, e.to_string()),
    }
    r.record(
        "unit-acts-trivially",
        "1·a = a",
        compare_chains(&[E], &[d], &[E], &Chain::new(f, &[d]).insert(0, h.unit_map()).binary(0, x.action(E)), &[E], &Chain::new(f, &[d])),
    );
    r.record(
        "inverse-left",
        "S_p(h₁)·(h₂·a) = ε_p(h)a",
        one_grade(h, |p| {
            let src = [h.dim(p), d];
            let lhs = Chain::new(f, &src)
                .split(0, h.comult(p), h.dim(p), h.dim(p))
                .binary(1, x.action(p))
                .unary(0, h.antipode(p))
                .binary(0, x.action(h.gi(p)));
            compare_chains(&[p], &src, &[], &lhs, &[], &Chain::new(f, &src).contract(0, h.counit(p)))
        }),
    );
    r.record(
        "inverse-right",
        "h₁·(S_p(h₂)·a) = ε_p(h)a",
        one_grade(h, |p| {
            let src = [h.dim(p), d];
            let lhs = Chain::new(f, &src)
                .split(0, h.comult(p), h.dim(p), h.dim(p))
                .unary(1, h.antipode(p))
                .binary(1, x.action(h.gi(p)))
                .binary(0, x.action(p));
            compare_chains(&[p], &src, &[], &lhs, &[], &Chain::new(f, &src).contract(0, h.counit(p)))
        }),
    );
    r.record(
        "module-algebra",
        "(h₁·a)(h₂·b) = h·(ab)",
        one_grade(h, |p| {
            let src = [h.dim(p), d, d];
            let lhs = Chain::new(f, &src)
                .split(0, h.comult(p), h.dim(p), h.dim(p))
                .swap(1)
                .binary(0, x.action(p))
                .binary(1, x.action(p))
                .binary(0, &a.mult);
            let rhs = Chain::new(f, &src).binary(1, &a.mult).binary(0, x.action(p));
            compare_chains(&[p], &src, &[], &lhs, &[], &rhs)
        }),
    );
    r.record(
        "module-algebra-unit",
        "h·1 = ε_p(h)1",
        one_grade(h, |p| {
            let src = [h.dim(p)];
            let lhs = Chain::new(f, &src).insert(1, &a.unit).binary(0, x.action(p));
            let rhs = Chain::new(f, &src).contract(0, h.counit(p)).insert(0, &a.unit);
            compare_chains(&[p], &src, &[], &lhs, &[], &rhs)
        }),
    );
    r.record(
        "module-coalgebra",
        "Δ(h·c) = h₁·c₁ ⊗ h₂·c₂",
        one_grade(h, |p| {
            let src = [h.dim(p), d];
            let lhs = Chain::new(f, &src).binary(0, x.action(p)).split(0, &a.comult, d, d);
            let rhs = Chain::new(f, &src)
                .split(0, h.comult(p), h.dim(p), h.dim(p))
                .split(2, &a.comult, d, d)
                .swap(1)
                .binary(0, x.action(p))
                .binary(1, x.action(p));
            compare_chains(&[p], &src, &[], &lhs, &[], &rhs)
        }),
    );
    r.record(
        "module-coalgebra-counit",
        "ε(h·c) = ε_p(h)ε(c)",
        one_grade(h, |p| {
            let src = [h.dim(p), d];
            let lhs = Chain::new(f, &src).binary(0, x.action(p)).contract(0, &a.counit);
            let rhs = Chain::new(f, &src).contract(0, h.counit(p)).contract(0, &a.counit);
            compare_chains(&[p], &src, &[], &lhs, &[], &rhs)
        }),
    );
    r.record(
        "action-commutes-with-antipode",
        "h·S(a) = S(h·a)",
        one_grade(h, |p| {
            let src = [h.dim(p), d];
            let lhs = Chain::new(f, &src).unary(1, &a.antipode).binary(0, x.action(p));
            let rhs = Chain::new(f, &src).binary(0, x.action(p)).unary(0, &a.antipode);
            compare_chains(&[p], &src, &[], &lhs, &[], &rhs)
        }),
    );
    r
}

/// `h₁⊗h₂·a = h₂⊗h₁·a` for all `h ∈ H_p`.
pub fn action_cocommutes(x: &QuasimoduleHopfQuasigroup) -> Outcome {
    let h = x.host();
    let f = x.field();
    let d = x.algebra().dim;
    one_grade(h, |p| {
        let src = [h.dim(p), d];
        let lhs = Chain::new(f, &src).split(0, h.comult(p), h.dim(p), h.dim(p)).binary(1, x.action(p));
        let rhs = Chain::new(f, &src).split(0, h.comult(p), h.dim(p), h.dim(p)).swap(0).binary(1, x.action(p));
        compare_chains(&[p], &src, &[p, p], &lhs, &[p, p], &rhs)
    })
}

/// `g·(S_p(h)·a) = (gS_p(h))·a` for all `g ∈ H_q`, `h ∈ H_p`.
pub fn action_respects_antipode_products(x: &QuasimoduleHopfQuasigroup) -> Outcome {
    let h = x.host();
    let f = x.field();
    let d = x.algebra().dim;
    over(h.order(), 2, |t| {
        let (p, q) = (t[0], t[1]);
        let pi = h.gi(p);
        let src = [h.dim(q), h.dim(p), d];
        let lhs = Chain::new(f, &src).unary(1, h.antipode(p)).binary(1, x.action(pi)).binary(0, x.action(q));
        let rhs = Chain::new(f, &src).unary(1, h.antipode(p)).binary(0, h.mult(q, pi)).binary(0, x.action(h.gm(q, pi)));
        compare_chains(&[q, p], &src, &[], &lhs, &[], &rhs)
    })
}

pub fn check_condition_6h(x: &QuasimoduleHopfQuasigroup) -> bool {
    action_cocommutes(x).holds()
}

pub fn check_condition_6m(x: &QuasimoduleHopfQuasigroup) -> bool {
    action_respects_antipode_products(x).holds()
}

fn require_cocommuting(x: &QuasimoduleHopfQuasigroup) -> Result<(), SmashError> {
    let outcome = action_cocommutes(x);
    if outcome.holds() {
        return Ok(());
    }
    let mut r = CheckReport::new("smash-hypothesis");
    r.record("action-cocommutes", "h₁⊗h₂·a = h₂⊗h₁·a", outcome);
    Err(SmashError::ActionNotCocommutative(Box::new(r)))
}

/// The structure maps of `A⋊H` on `A⊗H_p`, unvalidated:
/// `(a⊗h)(b⊗g) = a(h₁·b)⊗h₂g`, unit `1⊗1`, `Δ(a⊗h) = (a₁⊗h₁)⊗(a₂⊗h₂)`,
/// `ε(a⊗h) = ε(a)ε_p(h)`, `S(a⊗h) = S_p(h₂)·S(a) ⊗ S_p(h₁)`.
pub fn build_smash(x: &QuasimoduleHopfQuasigroup) -> Result<GradedHopfQuasigroup, SmashError> {
    require_cocommuting(x)?;
    let h = x.host();
    let a = x.algebra();
    let f = x.field();
    let d = a.dim;
    let n = h.order();
    let dims: Vec<usize> = (0..n).map(|p| d * h.dim(p)).collect();
    let mult = (0..n * n)
        .map(|i| {
            let (p, q) = (i / n, i % n);
            Chain::new(f, &[d, h.dim(p), d, h.dim(q)])
                .split(1, h.comult(p), h.dim(p), h.dim(p))
                .permute(&[0, 1, 3, 2, 4])
                .binary(1, x.action(p))
                .binary(0, &a.mult)
                .binary(1, h.mult(p, q))
                .build()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let unit = Chain::new(f, &[]).insert(0, &a.unit).insert(1, h.unit_map()).build()?;
    let comult = (0..n)
        .map(|p| Chain::new(f, &[d, h.dim(p)]).split(0, &a.comult, d, d).split(2, h.comult(p), h.dim(p), h.dim(p)).swap(1).build())
        .collect::<Result<Vec<_>, _>>()?;
    let counit = (0..n)
        .map(|p| Chain::new(f, &[d, h.dim(p)]).contract(0, &a.counit).contract(0, h.counit(p)).build())
        .collect::<Result<Vec<_>, _>>()?;
    let antipode = (0..n)
        .map(|p| {
            Chain::new(f, &[d, h.dim(p)])
                .unary(0, &a.antipode)
                .split(1, h.comult(p), h.dim(p), h.dim(p))
                .unary(1, h.antipode(p))
                .unary(2, h.antipode(p))
                .permute(&[2, 0, 1])
                .binary(0, x.action(h.gi(p)))
                .build()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GradedHopfQuasigroup::from_parts(h.grading().clone(), f, dims, mult, unit, comult, counit, antipode)?)
}

fn first_witness(r: &CheckReport) -> Outcome {
    match r.failures().next() {
        None => Outcome::Holds,
        Some(c) => match &c.witness {
            Some(w) => Outcome::Witness(w.clone()),
            None => Outcome::Mismatch(format!("{}: {}", c.id, c.note.clone().unwrap_or_default())),
        },
    }
}

/// Whether `A⋊H` passes every graded Hopf quasigroup axiom, and whether
/// the action respects antipode products; the two must agree.
pub fn check_theorem61(x: &QuasimoduleHopfQuasigroup) -> Result<CheckReport, SmashError> {
    let smash = build_smash(x)?;
    let axioms = check_hopf_axioms(&smash);
    let compat = action_respects_antipode_products(x);
    let (b1, b2) = (axioms.passed(), compat.holds());
    let mut r = CheckReport::new("smash-equivalence");
    r.observe(
        "smash-is-hopf-quasigroup",
        "A⋊H satisfies the graded Hopf quasigroup axioms",
        if b1 { Outcome::Holds } else { first_witness(&axioms) },
    );
    r.observe("action-respects-antipode-products", "g·(S_p(h)·a) = (gS_p(h))·a", compat);
    let note = if b1 { String::new() } else { format!("failing smash axioms: {}", failing(&axioms)) };
    r.assert("equivalent", "A⋊H is a Hopf quasigroup ⟺ g·(S_p(h)·a) = (gS_p(h))·a", b1 == b2, note);
    Ok(r)
}

/// One `(grading, algebra, field)` combination of the bounded search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchCase {
    pub grading_order: usize,
    pub grading_index: usize,
    pub algebra_order: usize,
    pub algebra_index: usize,
    pub field: Field,
    /// Actions passing every quasimodule Hopf quasigroup axiom.
    pub valid_actions: usize,
    /// Of those, actions violating `g·(S_p(h)·a) = (gS_p(h))·a`.
    pub incompatible: usize,
    /// Actions where the smash verdict and the compatibility verdict differ.
    pub disagreements: usize,
}

#[derive(Clone, Debug)]
pub struct SearchHit {
    pub grading: Quasigroup,
    pub algebra: Quasigroup,
    pub structure: QuasimoduleHopfQuasigroup,
    pub smash_is_hopf: bool,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub cases: Vec<SearchCase>,
    /// The first action found that satisfies every hypothesis but fails the
    /// compatibility condition, if any.
    pub counterexample: Option<SearchHit>,
}

impl SearchOutcome {
    pub fn valid_actions(&self) -> usize {
        self.cases.iter().map(|c| c.valid_actions).sum()
    }

    pub fn disagreements(&self) -> usize {
        self.cases.iter().map(|c| c.disagreements).sum()
    }

    pub fn to_report(&self) -> CheckReport {
        let mut r = CheckReport::new("smash-search");
        let incompatible: usize = self.cases.iter().map(|c| c.incompatible).sum();
        r.observe(
            "incompatible-action-found",
            "some valid action violates g·(S_p(h)·a) = (gS_p(h))·a",
            if incompatible > 0 { Outcome::Holds } else { Outcome::Mismatch("no counterexample at this scale".into()) },
        );
        r.assert(
            "equivalent-on-all",
            "A⋊H is a Hopf quasigroup ⟺ g·(S_p(h)·a) = (gS_p(h))·a",
            self.disagreements() == 0,
            format!(
                "{} cases, {} valid actions, {} incompatible, {} disagreements",
                self.cases.len(),
                self.valid_actions(),
                incompatible,
                self.disagreements()
            ),
        );
        r
    }
}

fn entry_set(field: Field) -> Vec<Scalar> {
    match field {
        Field::Rational => vec![field.int(-1), field.zero(), field.one()],
        Field::Prime(p) => (0..p as i64).map(|x| field.int(x)).collect(),
    }
}

/// Vectors with entries from `entries` that are group-like in `A`:
/// `Δ(v) = v⊗v`, `ε(v) = 1`. Any valid action sends a group-like basis
/// vector to one of these.
fn grouplike_candidates(a: &HopfQuasigroupData, entries: &[Scalar]) -> Vec<Vector> {
    let d = a.dim;
    let total = entries.len().pow(d as u32);
    (0..total)
        .filter_map(|mut code| {
            let v: Vec<Scalar> = (0..d)
                .map(|_| {
                    let s = entries[code % entries.len()].clone();
                    code /= entries.len();
                    s
                })
                .collect();
            let v = Vector::from_entries(a.field, v).ok()?;
            let grouplike = a.comult.apply(&v).ok()? == v.tensor(&v).ok()? && a.counit.apply(&v).ok()?.get(0).is_one();
            grouplike.then_some(v)
        })
        .collect()
}

/// Matrices `φ` built column by column from group-like candidates that are
/// algebra maps: `φ(ab) = φ(a)φ(b)`, `φ(1) = 1`.
fn algebra_map_candidates(a: &HopfQuasigroupData, columns: &[Vector]) -> Vec<LinMap> {
    let d = a.dim;
    let total = columns.len().pow(d as u32);
    (0..total)
        .into_par_iter()
        .filter_map(|mut code| {
            let cols: Vec<Vector> = (0..d)
                .map(|_| {
                    let c = columns[code % columns.len()].clone();
                    code /= columns.len();
                    c
                })
                .collect();
            let phi = LinMap::from_columns(a.field, d, &cols).ok()?;
            let lhs = a.mult.compose(&phi.tensor(&phi).ok()?).ok()?;
            let rhs = phi.compose(&a.mult).ok()?;
            (lhs == rhs && phi.compose(&a.unit).ok()? == a.unit).then_some(phi)
        })
        .collect()
}

/// Assigns `φ_p` for every grade with `φ_e = id` and `φ_{p⁻¹} = φ_p⁻¹`,
/// calling `visit` on each complete assignment.
fn assignments(g: &Quasigroup, candidates: &[LinMap], id: &LinMap, visit: &mut dyn FnMut(&[LinMap])) {
    fn go(g: &Quasigroup, candidates: &[LinMap], slots: &mut Vec<Option<LinMap>>, p: usize, visit: &mut dyn FnMut(&[LinMap])) {
        if p == slots.len() {
            let full: Vec<LinMap> = slots.iter().map(|s| s.clone().expect("all grades assigned")).collect();
            visit(&full);
            return;
        }
        if slots[p].is_some() {
            return go(g, candidates, slots, p + 1, visit);
        }
        let pi = g.inv(p);
        for c in candidates {
            let Some(inv) = c.inverse() else { continue };
            if pi == p && &inv != c {
                continue;
            }
            if !candidates.contains(&inv) {
                continue;
            }
            slots[p] = Some(c.clone());
            slots[pi] = Some(inv);
            go(g, candidates, slots, p + 1, visit);
            slots[pi] = None;
            slots[p] = None;
        }
    }
    let mut slots: Vec<Option<LinMap>> = vec![None; g.order()];
    slots[g.identity()] = Some(id.clone());
    go(g, candidates, &mut slots, 0, visit);
}

/// Exhausts actions of `kQ` (`|Q| ≤ 4`) on loop algebras `kL` (`|L| ≤ max_dim`)
/// whose matrices have entries in `{0, ±1}` over `ℚ` or anywhere in `F_2`,
/// `F_3`, looking for a valid action that violates
/// `g·(S_p(h)·a) = (gS_p(h))·a`. Every valid action also has its smash
/// product validated, to compare the two verdicts.
pub fn search_counterexample(max_dim: usize) -> Result<SearchOutcome, SmashError> {
    let loops = |n: usize| enumerate_ip_loops(n, &PropertyFilter::default()).expect("small orders are enumerable");
    let mut cases = Vec::new();
    let mut counterexample = None;
    for field in [Field::Rational, Field::prime(2).expect("prime"), Field::prime(3).expect("prime")] {
        let entries = entry_set(field);
        for gn in 1..=4 {
            for (gi, g) in loops(gn).into_iter().enumerate() {
                let host = Arc::new(build_kq(&g, field));
                for an in 1..=max_dim {
                    for (ai, l) in loops(an).into_iter().enumerate() {
                        let algebra = HopfQuasigroupData::loop_algebra(&l, field);
                        let columns = grouplike_candidates(&algebra, &entries);
                        let candidates = algebra_map_candidates(&algebra, &columns);
                        let id = LinMap::identity(field, an);
                        let mut case = SearchCase {
                            grading_order: gn,
                            grading_index: gi,
                            algebra_order: an,
                            algebra_index: ai,
                            field,
                            valid_actions: 0,
                            incompatible: 0,
                            disagreements: 0,
                        };
                        let mut failure = None;
                        assignments(&g, &candidates, &id, &mut |action| {
                            if failure.is_some() {
                                return;
                            }
                            let x = match QuasimoduleHopfQuasigroup::from_parts(Arc::clone(&host), algebra.clone(), action.to_vec()) {
                                Ok(x) => x,
                                Err(e) => return failure = Some(e),
                            };
                            if !check_quasimodule_hopf(&x).passed() || !check_condition_6h(&x) {
                                return;
                            }
                            case.valid_actions += 1;
                            let compatible = check_condition_6m(&x);
                            let smash_is_hopf = match build_smash(&x) {
                                Ok(s) => check_hopf_axioms(&s).passed(),
                                Err(e) => return failure = Some(e),
                            };
                            case.disagreements += usize::from(compatible != smash_is_hopf);
                            if !compatible {
                                case.incompatible += 1;
                                if counterexample.is_none() {
                                    counterexample =
                                        Some(SearchHit { grading: g.clone(), algebra: l.clone(), structure: x, smash_is_hopf });
                                }
                            }
                        });
                        if let Some(e) = failure {
                            return Err(e);
                        }
                        cases.push(case);
                    }
                }
            }
        }
    }
    Ok(SearchOutcome { cases, counterexample })
}
