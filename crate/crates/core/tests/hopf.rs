use quasihopf::hopf::{
    associator, associator_map, check_associator, check_hopf_axioms, check_lemma21, check_prop21, check_prop22, check_prop23,
    classification_report, classify_graded, linearity_probe, StructureMap,
};
use quasihopf::quasigroup::{catalog, CATALOG_NAMES};
use quasihopf::{build_kq, trivial_grading, Field, HopfQuasigroupData, LinMap, Status, Vector};

fn q() -> Field {
    Field::Rational
}

fn kq(name: &str) -> quasihopf::GradedHopfQuasigroup {
    build_kq(&catalog(name).unwrap(), q())
}

fn kl(name: &str) -> quasihopf::GradedHopfQuasigroup {
    trivial_grading(&HopfQuasigroupData::loop_algebra(&catalog(name).unwrap(), q())).unwrap()
}

#[test]
fn kq_axioms_hold_on_catalog_over_q_and_f5() {
    for field in [q(), Field::prime(5).unwrap()] {
        for name in CATALOG_NAMES {
            let h = build_kq(&catalog(name).unwrap(), field);
            let r = check_hopf_axioms(&h);
            assert!(r.passed(), "{name} over {field}: {:?}", r.failures().map(|c| &c.id).collect::<Vec<_>>());
            assert!(check_prop21(&h).passed(), "{name}");
        }
    }
}

#[test]
fn kz3_antipode_sends_h1_to_h2() {
    let h = kq("Z3");
    assert_eq!(h.antipode(1).src_dim(), h.dim(1));
    assert_eq!(h.gi(1), 2);
    assert_eq!(h.antipode(1), &LinMap::identity(q(), 1));
}

#[test]
fn graded_flags_agree_with_quasigroup_flags() {
    for name in CATALOG_NAMES {
        let qg = catalog(name).unwrap();
        let qf = qg.classify();
        let gf = classify_graded(&build_kq(&qg, q()));
        assert_eq!(gf.flexible, qf.flexible, "{name}");
        assert_eq!(gf.alternative, qf.alternative, "{name}");
        assert_eq!(gf.moufang, qf.moufang, "{name}");
        assert_eq!(gf.commutative, qf.commutative, "{name}");
        assert!(gf.cocommutative, "{name}");
    }
}

#[test]
fn classify_examples() {
    let z4 = classify_graded(&kq("Z4"));
    assert!(z4.flexible && z4.alternative && z4.moufang && z4.commutative && z4.cocommutative);
    let s3 = classify_graded(&kq("S3"));
    assert!(!s3.commutative && s3.cocommutative);
    assert!(classify_graded(&kq("moufang12")).moufang);
    assert!(!classify_graded(&kq("ip_min_nonassoc")).moufang);
    let report = classification_report(&kq("ip_min_nonassoc"));
    assert_eq!(report.get("moufang").unwrap().status, Status::Skipped);
}

#[test]
fn trivially_graded_loop_algebras() {
    let z2 = HopfQuasigroupData::loop_algebra(&catalog("Z2").unwrap(), q());
    assert!(check_hopf_axioms(&trivial_grading(&z2).unwrap()).passed());
    let m = kl("moufang12");
    assert!(check_hopf_axioms(&m).passed());
    assert!(check_prop21(&m).passed());
    assert!(!m.grading().is_associative() || m.order() == 1);
    let flags = classify_graded(&m);
    assert!(flags.moufang && !flags.commutative && flags.cocommutative);
}

#[test]
fn broken_antipode_is_rejected_by_trivial_grading() {
    let mut data = HopfQuasigroupData::loop_algebra(&catalog("Z3").unwrap(), q());
    data.antipode = LinMap::identity(q(), 3);
    assert!(trivial_grading(&data).is_err());
}

#[test]
fn mutated_kz3_antipode_fails_with_witness() {
    let h = kq("Z3");
    let bad = h.with_map(StructureMap::Antipode(1), h.antipode(1).scale(&q().int(2))).unwrap();
    let r = check_hopf_axioms(&bad);
    let c = r.get("antipode-left").unwrap();
    assert_eq!(c.status, Status::Fail);
    let w = c.witness.as_ref().unwrap();
    assert_eq!(w.grades, vec![1, 0]);
    assert_ne!(w.lhs, w.rhs);
    assert!(r.get("unit-left").unwrap().status == Status::Pass);
}

#[test]
fn later_results_are_tainted_after_a_failure() {
    let h = kq("Z3");
    let bad = h.with_map(StructureMap::Counit(2), LinMap::zero(q(), 1, 1)).unwrap();
    let r = check_hopf_axioms(&bad);
    let first = r.results.iter().position(|c| c.status == Status::Fail).unwrap();
    assert!(r.results[first + 1..].iter().all(|c| c.tainted));
    assert!(r.results[..=first].iter().all(|c| !c.tainted));
}

#[test]
fn antipode_is_involutive_on_cocommutative_fixtures() {
    for name in ["Z5", "S3", "ip_min_nonassoc"] {
        let r = check_prop22(&kq(name));
        assert_eq!(r.get("involutive").unwrap().status, Status::Pass, "{name}");
    }
}

#[test]
fn moufang_conditions_agree() {
    for name in ["moufang12", "Z6"] {
        let r = check_prop23(&kq(name));
        assert!(r.passed(), "{name}");
        for c in ["condition-1", "condition-2", "condition-3"] {
            assert_eq!(r.get(c).unwrap().status, Status::Recorded { holds: true }, "{name} {c}");
        }
    }
    let r = check_prop23(&kq("ip_min_nonassoc"));
    assert_eq!(r.get("equivalent").unwrap().status, Status::Skipped);
}

#[test]
fn adjoint_identity_on_flexible_fixtures() {
    assert!(check_lemma21(&kq("moufang12")).holds("adjoint"));
    assert!(check_lemma21(&kq("Z2")).holds("adjoint"));
    assert!(check_lemma21(&kl("moufang12")).holds("adjoint"));
}

#[test]
fn associator_on_loop_algebra_is_the_bracket_defect() {
    let l = catalog("moufang12").unwrap();
    let h = kl("moufang12");
    let n = l.order();
    let delta = associator_map(&h, 0, 0, 0).unwrap();
    let x = Vector::from_ints(q(), &[1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
    let (y, z) = (Vector::basis(q(), n, 3), Vector::basis(q(), n, 5));
    let direct = associator(&h, (0, 0, 0), &x, &y, &z).unwrap();
    let combined = delta.column(3 * n + 5).add(&delta.column((n + 3) * n + 5).scale(&q().int(2)).unwrap()).unwrap();
    assert_eq!(direct, combined);
    let mut nontrivial = 0;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let v = |i| Vector::basis(q(), n, i);
                let d = delta.column((a * n + b) * n + c);
                let left = l.mul(l.mul(a, b), c);
                let right = l.mul(a, l.mul(b, c));
                let expected = l.mul(left, l.inv(right));
                assert_eq!(d, v(expected));
                nontrivial += usize::from(expected != 0);
            }
        }
    }
    assert!(nontrivial > 0);
}

#[test]
fn associator_suite_on_loop_algebra_and_groups() {
    assert!(check_associator(&kl("moufang12")).unwrap().passed());
    assert!(check_associator(&kq("S3")).unwrap().passed());
    assert!(check_associator(&kq("ip_min_nonassoc")).is_err());
}

#[test]
fn associator_of_group_algebra_is_trivial() {
    let h = kq("Z4");
    let one = Vector::basis(q(), 1, 0);
    for p in 0..4 {
        for r in 0..4 {
            for s in 0..4 {
                assert_eq!(associator(&h, (p, r, s), &one, &one, &one).unwrap(), one);
            }
        }
    }
}

#[test]
fn broken_coassociativity_breaks_rebracketing() {
    let h = kl("S3");
    let bad_delta = h.comult(0).with_entry(0, 1, q().one());
    let bad = h.with_map(StructureMap::Comult(0), bad_delta).unwrap();
    let r = check_associator(&bad).unwrap();
    let c = r.get("rebracketing").unwrap();
    assert_eq!(c.status, Status::Fail);
    assert!(c.witness.is_some());
}

#[test]
fn linearity_probe_passes_on_fixtures() {
    for name in ["Z3", "S3", "moufang12"] {
        assert!(linearity_probe(&kq(name), 7).passed());
    }
    assert!(linearity_probe(&kl("Q8"), 11).passed());
}

#[test]
fn adjoint_identity_on_flexible_nonmoufang_loop() {
    let r = check_lemma21(&kq("ip_min_nonassoc"));
    assert_eq!(r.get("adjoint").unwrap().status, Status::Pass);
}
