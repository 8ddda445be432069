use std::sync::Arc;

use quasihopf::hopf::check_hopf_axioms;
use quasihopf::quasigroup::{automorphisms, catalog};
use quasihopf::smash::{
    build_smash, check_condition_6h, check_condition_6m, check_quasimodule_hopf, check_theorem61, search_counterexample,
};
use quasihopf::{build_kq, trivial_grading, Field, HopfQuasigroupData, LinMap, QuasimoduleHopfQuasigroup, SmashError, Status};

fn q() -> Field {
    Field::Rational
}

fn identity_perm(n: usize) -> Vec<usize> {
    (0..n).collect()
}

fn involution_of(name: &str) -> Vec<usize> {
    let l = catalog(name).unwrap();
    automorphisms(&l).into_iter().find(|a| *a != identity_perm(l.order()) && (0..l.order()).all(|x| a[a[x]] == x)).unwrap()
}

fn z2_acting_by(name: &str, auto: Vec<usize>) -> QuasimoduleHopfQuasigroup {
    let g = catalog("Z2").unwrap();
    let l = catalog(name).unwrap();
    QuasimoduleHopfQuasigroup::by_loop_maps(&g, &l, &[identity_perm(l.order()), auto], q()).unwrap()
}

/// Z3 acting on kZ3 with both non-identity grades acting by inversion.
fn inversion_action() -> QuasimoduleHopfQuasigroup {
    let z3 = catalog("Z3").unwrap();
    let inv: Vec<usize> = (0..3).map(|x| z3.inv(x)).collect();
    QuasimoduleHopfQuasigroup::by_loop_maps(&z3, &z3, &[identity_perm(3), inv.clone(), inv], q()).unwrap()
}

#[test]
fn trivial_action_gives_a_hopf_smash() {
    for (h, a) in [("Z3", "S3"), ("S3", "moufang12"), ("Z2", "ip_min_nonassoc")] {
        let host = Arc::new(build_kq(&catalog(h).unwrap(), q()));
        let algebra = HopfQuasigroupData::loop_algebra(&catalog(a).unwrap(), q());
        let x = QuasimoduleHopfQuasigroup::trivial_action(host, algebra).unwrap();
        assert!(check_quasimodule_hopf(&x).passed());
        assert!(check_condition_6h(&x) && check_condition_6m(&x));
        let s = build_smash(&x).unwrap();
        assert_eq!(s.dims()[0], catalog(a).unwrap().order());
        assert!(check_hopf_axioms(&s).passed(), "{h} on {a}");
        assert!(check_theorem61(&x).unwrap().passed());
    }
}

#[test]
fn automorphism_action_on_moufang_loop() {
    let x = z2_acting_by("moufang12", involution_of("moufang12"));
    let r = check_quasimodule_hopf(&x);
    assert!(r.passed(), "{:?}", r.failures().map(|c| &c.id).collect::<Vec<_>>());
    assert!(check_condition_6m(&x));
    let s = build_smash(&x).unwrap();
    assert_eq!(s.dims(), &[12, 12]);
    assert!(check_hopf_axioms(&s).passed());
    let r = check_theorem61(&x).unwrap();
    assert!(r.holds("smash-is-hopf-quasigroup") && r.holds("action-respects-antipode-products"));
}

#[test]
fn smash_unit_and_counit_are_plain_tensors() {
    let x = z2_acting_by("S3", involution_of("S3"));
    let s = build_smash(&x).unwrap();
    // 1⊗1 is the basis vector (e, e) of A⊗H_e
    let unit = s.unit_map();
    assert_eq!(unit.src_dim(), 1);
    assert_eq!(unit.nnz(), 1);
    assert!(unit.get(0, 0).is_one());
    for p in 0..2 {
        assert_eq!(s.counit(p).nnz(), 6);
        assert!(s.counit(p).triplets().all(|(_, _, e)| e.is_one()));
    }
}

#[test]
fn non_automorphism_fails_module_algebra() {
    // swaps the identity with a generator
    let z2 = catalog("Z2").unwrap();
    let z3 = catalog("Z3").unwrap();
    let x = QuasimoduleHopfQuasigroup::by_loop_maps(&z2, &z3, &[identity_perm(3), vec![1, 0, 2]], q()).unwrap();
    let r = check_quasimodule_hopf(&x);
    let c = r.get("module-algebra").unwrap();
    assert_eq!(c.status, Status::Fail);
    let w = c.witness.as_ref().unwrap();
    assert_eq!(w.grades, vec![1]);
    assert_ne!(w.lhs, w.rhs);
}

#[test]
fn inversion_action_breaks_the_smash() {
    let x = inversion_action();
    assert!(check_quasimodule_hopf(&x).passed());
    assert!(check_condition_6h(&x));
    assert!(!check_condition_6m(&x));
    let s = build_smash(&x).unwrap();
    assert!(!check_hopf_axioms(&s).passed());
    let r = check_theorem61(&x).unwrap();
    assert!(r.holds("equivalent"));
    assert!(!r.holds("smash-is-hopf-quasigroup"));
}

/// Functions on S3 with pointwise product and `Δ(δ_g) = Σ_{xy=g} δ_x⊗δ_y`.
fn function_algebra_s3() -> HopfQuasigroupData {
    let g = &catalog("S3").unwrap();
    let f = q();
    let one = || f.one();
    let n = g.order();
    let map = |dst, src, t: Vec<(usize, usize)>| LinMap::from_triplets(f, dst, src, t.into_iter().map(|(r, c)| (r, c, one()))).unwrap();
    HopfQuasigroupData {
        field: f,
        dim: n,
        mult: map(n, n * n, (0..n).map(|x| (x, x * n + x)).collect()),
        unit: map(n, 1, (0..n).map(|x| (x, 0)).collect()),
        comult: map(n * n, n, (0..n).flat_map(|x| (0..n).map(move |y| (x * n + y, g.mul(x, y)))).collect()),
        counit: map(1, n, vec![(0, g.identity())]),
        antipode: map(n, n, (0..n).map(|x| (g.inv(x), x)).collect()),
    }
}

#[test]
fn non_cocommuting_action_is_rejected() {
    // the S3-grading of kS3, seen as an action of the function algebra
    let host = Arc::new(trivial_grading(&function_algebra_s3()).unwrap());
    let algebra = HopfQuasigroupData::loop_algebra(&catalog("S3").unwrap(), q());
    let action = LinMap::from_triplets(q(), 6, 36, (0..6).map(|g| (g, g * 6 + g, q().one()))).unwrap();
    let x = QuasimoduleHopfQuasigroup::from_parts(host, algebra, vec![action]).unwrap();
    let r = check_quasimodule_hopf(&x);
    assert!(r.holds("module-algebra"));
    assert!(!check_condition_6h(&x));
    assert!(matches!(build_smash(&x), Err(SmashError::ActionNotCocommutative(_))));

    let y = inversion_action();
    assert!(matches!(y.with_action(1, LinMap::zero(q(), 2, 3)), Err(SmashError::Shape { .. })));
}

#[test]
fn bounded_search_finds_incompatible_action() {
    let out = search_counterexample(3).unwrap();
    assert_eq!(out.disagreements(), 0);
    assert!(out.valid_actions() > 0);
    let hit = out.counterexample.as_ref().unwrap();
    assert!(!hit.smash_is_hopf);
    assert!(!check_condition_6m(&hit.structure));
    assert!(check_quasimodule_hopf(&hit.structure).passed());
    let r = out.to_report();
    assert!(r.passed());
}
