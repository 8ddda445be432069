use proptest::prelude::*;
use quasihopf::{Chain, Field, LinMap, LinalgError, Scalar, Vector};

fn q() -> Field {
    Field::Rational
}

fn f5() -> Field {
    Field::prime(5).unwrap()
}

#[test]
fn rational_arithmetic_is_canonical() {
    let half = q().ratio(1, 2).unwrap();
    let third = q().ratio(1, 3).unwrap();
    assert_eq!(half.checked_add(&third).unwrap(), q().ratio(5, 6).unwrap());
    assert_eq!(q().ratio(2, 4).unwrap(), half);
    assert_eq!(q().ratio(2, -4).unwrap().to_string(), "-1/2");
    assert_eq!(q().ratio(4, 2).unwrap().to_string(), "2");
}

#[test]
fn prime_field_inverse() {
    assert_eq!(f5().int(2).checked_inv().unwrap(), f5().int(3));
    assert_eq!(f5().int(7), f5().int(2));
    assert_eq!(f5().zero().checked_inv(), Err(LinalgError::DivisionByZero));
}

#[test]
fn mixed_fields_are_rejected() {
    assert_eq!(q().one().checked_add(&f5().one()), Err(LinalgError::MixedFields));
    assert!(Field::prime(6).is_err());
}

#[test]
fn field_descriptors_round_trip() {
    for s in ["Q", "F2", "F5", "F101"] {
        let f: Field = s.parse().unwrap();
        assert_eq!(f.to_string(), s);
    }
    assert!("F4".parse::<Field>().is_err());
    assert!("R".parse::<Field>().is_err());
}

#[test]
fn scalars_parse_in_both_notations() {
    assert_eq!(q().parse_scalar("-3/6").unwrap(), q().ratio(-1, 2).unwrap());
    assert_eq!(f5().parse_scalar("3 mod 5").unwrap(), f5().int(3));
    assert!(f5().parse_scalar("3 mod 7").is_err());
}

#[test]
fn identity_laws_for_compose() {
    let f = LinMap::from_rows(q(), &[vec![1, 2, 0], vec![0, -1, 3], vec![4, 0, 1]]);
    let id = LinMap::identity(q(), 3);
    assert_eq!(id.compose(&f).unwrap(), f);
    assert_eq!(f.compose(&id).unwrap(), f);
}

#[test]
fn inverse_cyclic_permutations_compose_to_identity() {
    let forward = LinMap::permutation(q(), &[1, 2, 0]);
    let backward = LinMap::permutation(q(), &[2, 0, 1]);
    assert_eq!(forward.compose(&backward).unwrap(), LinMap::identity(q(), 3));
}

#[test]
fn compose_rejects_mismatched_dims() {
    let a = LinMap::identity(q(), 2);
    let b = LinMap::identity(q(), 3);
    assert!(matches!(a.compose(&b), Err(LinalgError::DimensionMismatch { .. })));
}

#[test]
fn identity_tensor_identity() {
    let t = LinMap::identity(q(), 2).tensor(&LinMap::identity(q(), 3)).unwrap();
    assert_eq!(t, LinMap::identity(q(), 6));
}

#[test]
fn tensor_acts_factorwise_on_basis_vectors() {
    let f = LinMap::from_rows(q(), &[vec![1, 2], vec![3, 4]]);
    let g = LinMap::from_rows(q(), &[vec![0, 1, -1], vec![2, 0, 5]]);
    let fg = f.tensor(&g).unwrap();
    for i in 0..2 {
        for j in 0..3 {
            let v = Vector::basis(q(), 2, i);
            let w = Vector::basis(q(), 3, j);
            let lhs = fg.apply(&v.tensor(&w).unwrap()).unwrap();
            let rhs = f.apply(&v).unwrap().tensor(&g.apply(&w).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

/// Dense row-major matrices as `i64` residues; the oracle multiplies these
/// directly, independently of `LinMap`.
fn dense_mul(a: &[Vec<i64>], b: &[Vec<i64>], p: i64) -> Vec<Vec<i64>> {
    let inner = b.len();
    (0..a.len()).map(|i| (0..b[0].len()).map(|j| (0..inner).map(|k| a[i][k] * b[k][j]).sum::<i64>().rem_euclid(p)).collect()).collect()
}

fn dense_kron(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let (ar, ac, br, bc) = (a.len(), a[0].len(), b.len(), b[0].len());
    let mut out = vec![vec![0; ac * bc]; ar * br];
    for i in 0..ar {
        for j in 0..ac {
            for k in 0..br {
                for l in 0..bc {
                    out[i * br + k][j * bc + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

fn dense_of(m: &LinMap) -> Vec<Vec<i64>> {
    (0..m.dst_dim()).map(|i| (0..m.src_dim()).map(|j| m.get(i, j).short().parse::<i64>().unwrap()).collect()).collect()
}

#[test]
fn tensor_interchange_over_f5_matches_dense_oracle() {
    let f_rows = vec![vec![2, 3], vec![4, 1]];
    let g_rows = vec![vec![1, 4], vec![0, 3]];
    let id = vec![vec![1, 0], vec![0, 1]];
    let f = LinMap::from_rows(f5(), &f_rows);
    let g = LinMap::from_rows(f5(), &g_rows);
    let i2 = LinMap::identity(f5(), 2);
    let lhs = f.tensor(&i2).unwrap().compose(&i2.tensor(&g).unwrap()).unwrap();
    let rhs = i2.tensor(&g).unwrap().compose(&f.tensor(&i2).unwrap()).unwrap();
    assert_eq!(lhs, rhs);
    let oracle = dense_mul(&dense_kron(&f_rows, &id), &dense_kron(&id, &g_rows), 5);
    assert_eq!(dense_of(&lhs), oracle);
}

#[test]
fn kernel_examples() {
    assert!(LinMap::identity(q(), 3).kernel().is_empty());
    assert_eq!(LinMap::zero(q(), 2, 2).kernel().len(), 2);
    let k = LinMap::from_rows(q(), &[vec![1, 1], vec![2, 2]]).kernel();
    assert_eq!(k, vec![Vector::from_ints(q(), &[-1, 1])]);
}

#[test]
fn bijectivity() {
    assert!(LinMap::identity(q(), 4).is_bijective());
    assert!(!LinMap::zero(q(), 2, 2).is_bijective());
    assert!(LinMap::permutation(q(), &[0, 2, 1]).is_bijective());
    assert!(!LinMap::zero(q(), 2, 3).is_bijective());
}

#[test]
fn inverse_and_solve() {
    let m = LinMap::from_rows(q(), &[vec![2, 1], vec![1, 1]]);
    let inv = m.inverse().unwrap();
    assert_eq!(m.compose(&inv).unwrap(), LinMap::identity(q(), 2));
    let b = Vector::from_ints(q(), &[3, 2]);
    assert_eq!(m.solve(&b).unwrap(), Some(Vector::from_ints(q(), &[1, 1])));
    let singular = LinMap::from_rows(q(), &[vec![1, 1], vec![1, 1]]);
    assert_eq!(singular.solve(&Vector::from_ints(q(), &[1, 0])).unwrap(), None);
}

#[test]
fn chain_matches_explicit_tensor_composition() {
    let f = LinMap::from_rows(q(), &[vec![1, 2], vec![0, 1], vec![3, -1]]);
    let g = LinMap::from_rows(q(), &[vec![1, 0, 2], vec![1, 1, 1]]);
    let direct = f.tensor(&g).unwrap();
    let chain = Chain::new(q(), &[2, 3]).unary(0, &f).unary(1, &g).build().unwrap();
    assert_eq!(chain, direct);

    // swap then act is the conjugated tensor
    let swapped = Chain::new(q(), &[2, 3]).swap(0).unary(0, &g).unary(1, &f).build().unwrap();
    let flip = LinMap::swap(q(), 2, 3);
    assert_eq!(swapped, g.tensor(&f).unwrap().compose(&flip).unwrap());
}

#[test]
fn chain_reports_dimension_errors() {
    let f = LinMap::identity(q(), 2);
    assert!(Chain::new(q(), &[3]).unary(0, &f).build().is_err());
    assert!(Chain::new(q(), &[2, 2]).permute(&[0, 0]).build().is_err());
}

fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, cols), rows)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn compose_is_associative(a in small_matrix(2, 3), b in small_matrix(3, 2), c in small_matrix(2, 3)) {
        let (a, b, c) = (LinMap::from_rows(q(), &a), LinMap::from_rows(q(), &b), LinMap::from_rows(q(), &c));
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn tensor_mixed_product(f in small_matrix(2, 2), g in small_matrix(2, 3), f2 in small_matrix(2, 2), g2 in small_matrix(3, 2)) {
        let (f, g, f2, g2) = (
            LinMap::from_rows(f5(), &f),
            LinMap::from_rows(f5(), &g),
            LinMap::from_rows(f5(), &f2),
            LinMap::from_rows(f5(), &g2),
        );
        let lhs = f.tensor(&g).unwrap().compose(&f2.tensor(&g2).unwrap()).unwrap();
        let rhs = f.compose(&f2).unwrap().tensor(&g.compose(&g2).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rank_nullity(m in small_matrix(3, 4)) {
        let m = LinMap::from_rows(q(), &m);
        let kernel = m.kernel();
        for b in &kernel {
            prop_assert!(m.apply(b).unwrap().is_zero());
        }
        prop_assert_eq!(m.rank() + kernel.len(), 4);
    }

    #[test]
    fn canonical_form_is_idempotent(n in -50i64..50, d in 1i64..50) {
        let x = q().ratio(n, d).unwrap();
        let again = q().parse_scalar(&x.to_string()).unwrap();
        prop_assert_eq!(&again, &x);
        prop_assert_eq!(again.to_string(), x.to_string());
    }

    #[test]
    fn prime_field_axioms(a in 0i64..7, b in 0i64..7, c in 0i64..7) {
        let f7 = Field::prime(7).unwrap();
        let (a, b, c) = (f7.int(a), f7.int(b), f7.int(c));
        let left = a.checked_mul(&b.checked_add(&c).unwrap()).unwrap();
        let right = a.checked_mul(&b).unwrap().checked_add(&a.checked_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        if !a.is_zero() {
            prop_assert!(a.checked_mul(&a.checked_inv().unwrap()).unwrap().is_one());
        }
    }
}

#[test]
fn scalar_display_forms() {
    let s: Scalar = q().ratio(3, 1).unwrap();
    assert_eq!(s.to_string(), "3");
    assert_eq!(s.to_file_string(), "3/1");
    assert_eq!(q().ratio(-2, 6).unwrap().to_file_string(), "-1/3");
    assert_eq!(f5().int(4).to_string(), "4 mod 5");
}
