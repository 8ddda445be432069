use std::sync::Arc;

use proptest::prelude::*;
use quasihopf::dimodule::{
    attach_kx_right_coaction, build_h_tensor_comodule, build_m_tensor_he, check_long_dimodule, check_long_equation, long_operator,
    tensor_dimodules, with_trivial_coaction,
};
use quasihopf::quasigroup::catalog;
use quasihopf::quasimodule::{build_kx, regular_module};
use quasihopf::{
    build_kq, trivial_grading, Field, GradedHopfQuasigroup, HopfQuasigroupData, LinMap, LongDimodule, ModuleError, RightComodule, Status,
};

fn q() -> Field {
    Field::Rational
}

fn example(name: &str, s: usize) -> LongDimodule {
    let g = catalog(name).unwrap();
    attach_kx_right_coaction(&build_kx(&g, &vec![s; g.order()], q()).unwrap()).unwrap()
}

fn kl(name: &str) -> Arc<GradedHopfQuasigroup> {
    Arc::new(trivial_grading(&HopfQuasigroupData::loop_algebra(&catalog(name).unwrap(), q())).unwrap())
}

fn regular_tensor_he(name: &str) -> LongDimodule {
    build_m_tensor_he(&regular_module(kl(name)).unwrap()).unwrap()
}

#[test]
fn example_dimodule_has_identity_operator() {
    for name in ["Z3", "moufang12"] {
        let d = example(name, 2);
        assert!(check_long_dimodule(&d).passed());
        for c in 0..d.order() {
            assert_eq!(long_operator(&d, c).unwrap(), LinMap::identity(q(), 4));
        }
        assert!(check_long_equation(&d).passed());
    }
}

#[test]
fn trivial_coaction_on_regular_module() {
    let m = regular_module(Arc::new(build_kq(&catalog("S3").unwrap(), q()))).unwrap();
    let d = with_trivial_coaction(&m).unwrap();
    assert!(check_long_dimodule(&d).passed());
    let d = with_trivial_coaction(&regular_module(kl("moufang12")).unwrap()).unwrap();
    assert!(check_long_equation(&d).passed());
}

#[test]
fn m_tensor_he_dimensions() {
    let d = build_m_tensor_he(&regular_module(Arc::new(build_kq(&catalog("Z3").unwrap(), q()))).unwrap()).unwrap();
    assert_eq!(d.dims(), &[1, 1, 1]);
    let d = regular_tensor_he("Z3");
    assert_eq!(d.dims(), &[9]);
    let g = catalog("S3").unwrap();
    let h = kl("S3");
    let kx = build_kx(&g, &[2; 6], q()).unwrap();
    assert_eq!(build_m_tensor_he(&kx).unwrap().dims(), &[2; 6]);
    let m = regular_module(h).unwrap();
    assert_eq!(build_m_tensor_he(&m).unwrap().dims(), &[36]);
    let z1 = build_kx(&catalog("Z1").unwrap(), &[1], q()).unwrap();
    assert_eq!(build_m_tensor_he(&z1).unwrap().dims(), &[1]);
}

#[test]
fn long_equation_on_nine_dimensional_component() {
    let d = regular_tensor_he("Z3");
    let r = long_operator(&d, 0).unwrap();
    assert_eq!(r.src_dim(), 81);
    assert_ne!(r, LinMap::identity(q(), 81));
    // a permutation of the basis: (a⊗x)⊗(b⊗y) ↦ (ya⊗x)⊗(b⊗y)
    assert!(r.is_bijective());
    assert_eq!(r.nnz(), 81);
    assert!(check_long_equation(&d).passed());
}

#[test]
fn h_tensor_comodule() {
    let h = Arc::new(build_kq(&catalog("Z3").unwrap(), q()));
    let d = build_h_tensor_comodule(Arc::clone(&h), &RightComodule::regular(&h)).unwrap();
    assert!(check_long_equation(&d).passed());
    let d = build_h_tensor_comodule(Arc::clone(&h), &RightComodule::trivial(&h, 1)).unwrap();
    assert_eq!(d.dims(), &[1, 1, 1]);
    let loops = kl("S3");
    let d = build_h_tensor_comodule(Arc::clone(&loops), &RightComodule::regular(&loops)).unwrap();
    assert!(check_long_equation(&d).passed());
    let broken = RightComodule { dim: 1, coaction: LinMap::zero(q(), 1, 1) };
    assert!(matches!(build_h_tensor_comodule(h, &broken), Err(ModuleError::InvalidComodule(_))));
}

#[test]
fn tensors_of_dimodules() {
    let a = example("Z3", 2);
    let b = with_trivial_coaction(a.base()).unwrap();
    let t = tensor_dimodules(&a, &b).unwrap();
    assert!(check_long_equation(&t).passed());
    let t = tensor_dimodules(&a, &a).unwrap();
    assert_eq!(t.dims(), &[4, 4, 4]);
    assert!(check_long_equation(&t).passed());
    assert!(matches!(tensor_dimodules(&a, &example("S3", 1)), Err(ModuleError::HostMismatch)));

    let m = regular_tensor_he("Z3");
    let trivial = with_trivial_coaction(&regular_module(kl("Z3")).unwrap()).unwrap();
    let t = tensor_dimodules(&trivial, &m).unwrap();
    assert_eq!(t.dims(), &[27]);
    assert!(check_long_equation(&t).passed());
}

#[test]
fn broken_compatibility_is_reported() {
    let d = regular_tensor_he("Z3");
    let bad = d.with_action(0, 0, d.action(0, 0).with_entry(1, 0, q().int(1))).unwrap();
    let r = check_long_dimodule(&bad);
    let c = r.get("coaction-compatibility").unwrap();
    assert_eq!(c.status, Status::Fail);
    let w = c.witness.as_ref().unwrap();
    assert_ne!(w.lhs, w.rhs);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn valid_dimodules_solve_the_long_equation(s in 1usize..3, t in 1usize..3, trivial in any::<bool>()) {
        let a = example("S3", s);
        let b = if trivial { with_trivial_coaction(example("S3", t).base()).unwrap() } else { example("S3", t) };
        let d = tensor_dimodules(&a, &b).unwrap();
        prop_assert!(check_long_dimodule(&d).passed());
        prop_assert!(check_long_equation(&d).passed());
    }
}
