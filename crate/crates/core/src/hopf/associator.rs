//! The associator `δ(h,g,f) = ((h₁g₁)f₁)·S((h₂(g₂f₂)))` over an associative grading.

use super::{GradedHopfQuasigroup, HopfError};
use crate::linalg::{Chain, LinMap, Vector};
use crate::report::{compare_chains, over, tuples, CheckReport};

fn require_associative(h: &GradedHopfQuasigroup) -> Result<(), HopfError> {
    if h.grading().is_associative() {
        Ok(())
    } else {
        Err(HopfError::GradingNotAssociative)
    }
}

/// Splits every factor of `H_p⊗H_q⊗H_r` and orders them `h₁,g₁,f₁,h₂,g₂,f₂`.
fn spread3<'a>(h: &'a GradedHopfQuasigroup, p: usize, q: usize, r: usize) -> Chain<'a> {
    let d = |x: usize| h.dim(x);
    Chain::new(h.field(), &[d(p), d(q), d(r)])
        .split(0, h.comult(p), d(p), d(p))
        .split(2, h.comult(q), d(q), d(q))
        .split(4, h.comult(r), d(r), d(r))
        .permute(&[0, 2, 4, 1, 3, 5])
}

/// `δ_{p,q,r}: H_p⊗H_q⊗H_r → H_e`.
pub fn associator_map(h: &GradedHopfQuasigroup, p: usize, q: usize, r: usize) -> Result<LinMap, HopfError> {
    require_associative(h)?;
    let (pq, qr) = (h.gm(p, q), h.gm(q, r));
    let pqr = h.gm(pq, r);
    Ok(spread3(h, p, q, r)
        .binary(0, h.mult(p, q))
        .binary(0, h.mult(pq, r))
        .binary(2, h.mult(q, r))
        .binary(1, h.mult(p, qr))
        .unary(1, h.antipode(pqr))
        .binary(0, h.mult(pqr, h.gi(pqr)))
        .build()?)
}

/// `δ(h, g, f)` for `h ∈ H_p`, `g ∈ H_q`, `f ∈ H_r`.
pub fn associator(
    h: &GradedHopfQuasigroup,
    (p, q, r): (usize, usize, usize),
    x: &Vector,
    y: &Vector,
    z: &Vector,
) -> Result<Vector, HopfError> {
    let delta = associator_map(h, p, q, r)?;
    Ok(delta.apply(&x.tensor(y)?.tensor(z)?)?)
}

/// Rebracketing, unit normalizations and the ten antipode normalizations.
pub fn check_associator(h: &GradedHopfQuasigroup) -> Result<CheckReport, HopfError> {
    require_associative(h)?;
    let n = h.order();
    let f = h.field();
    let d = |x: usize| h.dim(x);
    let e = 0;
    let de = d(e);
    let mut report = CheckReport::new("associator");

    // δ maps are shared by every identity below.
    let deltas: Vec<LinMap> = tuples(n, 3).iter().map(|t| associator_map(h, t[0], t[1], t[2])).collect::<Result<_, _>>()?;
    let delta = |p: usize, q: usize, r: usize| &deltas[(p * n + q) * n + r];

    report.record(
        "rebracketing",
        "(hg)f = δ(h₁,g₁,f₁)(h₂(g₂f₂))",
        over(n, 3, |t| {
            let (p, q, r) = (t[0], t[1], t[2]);
            let src = [d(p), d(q), d(r)];
            let (pq, qr) = (h.gm(p, q), h.gm(q, r));
            let p_qr = h.gm(p, qr);
            let lhs = Chain::new(f, &src).binary(0, h.mult(p, q)).binary(0, h.mult(pq, r));
            let rhs = spread3(h, p, q, r)
                .local(0, 3, delta(p, q, r), &[de])
                .binary(2, h.mult(q, r))
                .binary(1, h.mult(p, qr))
                .binary(0, h.mult(e, p_qr));
            compare_chains(t, &src, &[h.gm(pq, r)], &lhs, &[h.gm(e, p_qr)], &rhs)
        }),
    );

    // δ with a unit inserted at `slot` equals ε ⊗ ε times 1.
    for (slot, id, anchor) in
        [(0, "unit-first", "δ(1,h,g) = ε(h)ε(g)1"), (1, "unit-middle", "δ(h,1,g) = ε(h)ε(g)1"), (2, "unit-last", "δ(h,g,1) = ε(h)ε(g)1")]
    {
        report.record(
            id,
            anchor,
            over(n, 2, |t| {
                let (p, q) = (t[0], t[1]);
                let src = [d(p), d(q)];
                let mut grades = vec![p, q];
                grades.insert(slot, e);
                let lhs = Chain::new(f, &src).insert(slot, h.unit_map()).local(0, 3, delta(grades[0], grades[1], grades[2]), &[de]);
                let rhs = Chain::new(f, &src).contract(0, h.counit(p)).contract(0, h.counit(q)).insert(0, h.unit_map());
                compare_chains(t, &src, &[e], &lhs, &[e], &rhs)
            }),
        );
    }

    for (k, anchor) in TEN_ANCHORS.iter().enumerate() {
        report.record(
            &format!("antipode-normalization-{}", k + 1),
            anchor,
            over(n, 2, |t| {
                let (p, q) = (t[0], t[1]);
                let src = [d(p), d(q)];
                let (pi, qi) = (h.gi(p), h.gi(q));
                let s = |x: usize| h.antipode(x);
                let m = |x: usize, y: usize| h.mult(x, y);
                // both elements split: factors h₁ h₂ g₁ g₂
                let both = || Chain::new(f, &src).split(0, h.comult(p), d(p), d(p)).split(2, h.comult(q), d(q), d(q));
                // reorder to h₁ g₁ g₂ h₂
                let nested = || both().permute(&[0, 2, 3, 1]);
                let (chain, grades) = match k {
                    0 => (Chain::new(f, &src).split(0, h.comult(p), d(p), d(p)).unary(1, s(p)), [p, pi, q]),
                    1 => (Chain::new(f, &src).split(0, h.comult(p), d(p), d(p)).unary(0, s(p)), [pi, p, q]),
                    2 => (Chain::new(f, &src).split(1, h.comult(q), d(q), d(q)).unary(2, s(q)), [p, q, qi]),
                    3 => (Chain::new(f, &src).split(1, h.comult(q), d(q), d(q)).unary(1, s(q)), [p, qi, q]),
                    4 => (nested().unary(2, s(q)).unary(3, s(p)).binary(0, m(p, q)), [h.gm(p, q), qi, pi]),
                    5 => (nested().unary(0, s(p)).unary(1, s(q)).binary(0, m(pi, qi)), [h.gm(pi, qi), q, p]),
                    6 => (nested().unary(0, s(p)).unary(1, s(q)).binary(2, m(q, p)), [pi, qi, h.gm(q, p)]),
                    7 => (nested().unary(2, s(q)).unary(3, s(p)).binary(2, m(qi, pi)), [p, q, h.gm(qi, pi)]),
                    8 => (both().unary(0, s(p)).unary(2, s(q)).binary(1, m(p, qi)), [pi, h.gm(p, qi), q]),
                    _ => (both().unary(1, s(p)).unary(3, s(q)).binary(1, m(pi, q)), [p, h.gm(pi, q), qi]),
                };
                let lhs = chain.local(0, 3, delta(grades[0], grades[1], grades[2]), &[de]);
                let rhs = Chain::new(f, &src).contract(0, h.counit(p)).contract(0, h.counit(q)).insert(0, h.unit_map());
                compare_chains(t, &src, &[e], &lhs, &[e], &rhs)
            }),
        );
    }
    Ok(report)
}

const TEN_ANCHORS: [&str; 10] = [
    "δ(h₁,S(h₂),g) = ε(h)ε(g)1",
    "δ(S(h₁),h₂,g) = ε(h)ε(g)1",
    "δ(h,g₁,S(g₂)) = ε(h)ε(g)1",
    "δ(h,S(g₁),g₂) = ε(h)ε(g)1",
    "δ(h₁g₁,S(g₂),S(h₂)) = ε(h)ε(g)1",
    "δ(S(h₁)S(g₁),g₂,h₂) = ε(h)ε(g)1",
    "δ(S(h₁),S(g₁),g₂h₂) = ε(h)ε(g)1",
    "δ(h₁,g₁,S(g₂)S(h₂)) = ε(h)ε(g)1",
    "δ(S(h₁),h₂S(g₁),g₂) = ε(h)ε(g)1",
    "δ(h₁,S(h₂)g₁,S(g₂)) = ε(h)ε(g)1",
];
