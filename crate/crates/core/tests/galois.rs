use quasihopf::galois::{
    build_galois, check_lemma31, check_lemma32, check_linearity, check_reconstruction, check_theorem31_forward, galois_map, invert_galois,
    predicate_outcome, reconstruct_hopf,
};
use quasihopf::hopf::{check_hopf_axioms, StructureMap};
use quasihopf::quasigroup::catalog;
use quasihopf::{build_kq, trivial_grading, Field, GaloisError, GaloisKind, HopfQuasigroupData, LinMap, Predicate, Status, Vector};

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
fn beta_on_kz3_lands_in_the_product_grade() {
    let h = kq("Z3");
    let beta = galois_map(&h, GaloisKind::Beta).unwrap();
    assert_eq!(GaloisKind::Beta.targets(h.grading(), 1, 2), (0, 2));
    assert_eq!(beta.map(1, 2), &LinMap::identity(q(), 1));
    assert_eq!(GaloisKind::BetaStar.targets(h.grading(), 1, 2), (2, 2));
    assert_eq!(GaloisKind::GammaStar.targets(h.grading(), 1, 2), (1, 1));
}

#[test]
fn galois_maps_on_loop_algebra_match_basis_oracle() {
    let l = catalog("moufang12").unwrap();
    let h = kl("moufang12");
    let n = l.order();
    let fams: Vec<_> = GaloisKind::ALL.iter().map(|&k| build_galois(&h, k).unwrap()).collect();
    for a in 0..n {
        for b in 0..n {
            let x = Vector::basis(q(), n, a).tensor(&Vector::basis(q(), n, b)).unwrap();
            let expected = [(l.mul(a, b), b), (a, l.mul(a, b)), (l.mul(a, l.inv(b)), b), (a, l.mul(l.inv(a), b))];
            for (fam, (u, v)) in fams.iter().zip(expected) {
                let want = Vector::basis(q(), n, u).tensor(&Vector::basis(q(), n, v)).unwrap();
                assert_eq!(fam.map(0, 0).apply(&x).unwrap(), want, "{} at ({a},{b})", fam.kind());
            }
        }
    }
}

#[test]
fn galois_maps_are_almost_linear_on_catalog() {
    for name in ["Z1", "Z3", "S3", "moufang12", "ip_min_nonassoc"] {
        let r = check_lemma32(&kq(name)).unwrap();
        assert!(r.passed(), "{name}: {:?}", r.failures().map(|c| &c.id).collect::<Vec<_>>());
    }
    assert!(check_lemma32(&kl("moufang12")).unwrap().passed());
}

#[test]
fn predicate_shape_mismatch_is_an_error() {
    let h = kq("Z3");
    let beta = build_galois(&h, GaloisKind::Beta).unwrap();
    let err = predicate_outcome(&h, &beta, Predicate::AlmostRightLinear).unwrap_err();
    assert!(matches!(err, GaloisError::SignatureMismatch { .. }));
    let gamma = build_galois(&h, GaloisKind::Gamma).unwrap();
    assert!(check_linearity(&h, &gamma, Predicate::LeftColinear).unwrap().passed());
}

#[test]
fn corrupting_the_unit_block_breaks_almost_linearity() {
    let h = kq("Z3");
    let star = build_galois(&h, GaloisKind::BetaStar).unwrap();
    let bad = star.with_map(0, 1, star.map(0, 1).scale(&q().int(2))).unwrap();
    let r = check_linearity(&h, &bad, Predicate::AlmostLeftLinear).unwrap();
    let c = r.results.first().unwrap();
    assert_eq!(c.status, Status::Fail);
    let w = c.witness.as_ref().unwrap();
    assert_ne!(w.grades[0], 0);
    assert_eq!(w.grades[1], 1);
    assert!(star.with_map(0, 1, LinMap::identity(q(), 2)).is_err());
}

#[test]
fn almost_colinear_and_colinear_coincide() {
    for h in [kq("S3"), kq("moufang12"), kl("S3")] {
        let fams = quasihopf::galois::all_families(&h).unwrap();
        let r = check_lemma31(&h, &fams);
        assert!(r.passed());
        for kind in GaloisKind::ALL {
            assert_eq!(r.get(&format!("{}/coincide", kind.name())).unwrap().status, Status::Pass);
        }
    }
}

#[test]
fn colinearity_comparison_is_skipped_without_coassociativity() {
    let h = kl("S3");
    let bad = h.with_map(StructureMap::Comult(0), h.comult(0).with_entry(0, 1, q().one())).unwrap();
    let fams = vec![galois_map(&bad, GaloisKind::Beta).unwrap()];
    let r = check_lemma31(&bad, &fams);
    assert_eq!(r.get("beta/coincide").unwrap().status, Status::Skipped);
}

#[test]
fn stars_invert_galois_maps() {
    for h in [kq("Z1"), kq("Z3"), kq("moufang12"), kq("ip_min_nonassoc"), kl("moufang12")] {
        let r = check_theorem31_forward(&h).unwrap();
        assert!(r.passed(), "{:?}", r.failures().map(|c| &c.id).collect::<Vec<_>>());
    }
}

#[test]
fn inverted_families_equal_stored_ones() {
    for h in [kq("Z4"), kq("S3"), kl("Q8")] {
        let b = h.strip_antipode();
        for kind in [GaloisKind::BetaStar, GaloisKind::GammaStar] {
            assert_eq!(invert_galois(&b, kind).unwrap(), build_galois(&h, kind).unwrap(), "{kind}");
        }
    }
}

#[test]
fn antipode_is_reconstructed_from_both_paths() {
    for h in [kq("Z3"), kq("S3"), kq("moufang12"), kl("moufang12"), build_kq(&catalog("Z5").unwrap(), Field::prime(3).unwrap())] {
        let r = check_reconstruction(&h).unwrap();
        assert!(r.passed(), "{:?}", r.failures().map(|c| &c.id).collect::<Vec<_>>());
        let rebuilt = reconstruct_hopf(&h.strip_antipode()).unwrap();
        assert_eq!(rebuilt, h);
        assert!(check_hopf_axioms(&rebuilt).passed());
    }
}

#[test]
fn reconstruction_rejects_non_invertible_galois_map() {
    let h = kq("Z2");
    let bad = h.with_map(StructureMap::Mult(1, 1), LinMap::zero(q(), 1, 1)).unwrap();
    let err = reconstruct_hopf(&bad.strip_antipode()).unwrap_err();
    assert!(matches!(err, GaloisError::HypothesisNotMet(_)), "{err}");
}
