use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::oracle::bareiss_rank;
use super::*;

fn f2() -> FieldSpec {
    FieldSpec::prime(2)
}

#[test]
fn identity_rref() {
    let r = Mat::identity(f2(), 2).rref();
    assert_eq!(r.rank, 2);
    assert_eq!(r.pivots, vec![0, 1]);
}

#[test]
fn duplicate_rows() {
    let r = Mat::from_i64(f2(), 2, 2, &[1, 1, 1, 1]).rref();
    assert_eq!(r.rank, 1);
    assert_eq!(r.pivots, vec![0]);
}

#[test]
fn random_rank_matches_bareiss() {
    let f = FieldSpec::prime(101);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let m = Mat::random(f, 5, 7, &mut rng);
    assert_eq!(m.rank(), bareiss_rank(&m));
}

#[test]
fn solve_identity() {
    let f = FieldSpec::rationals();
    let b = Mat::from_i64(f, 3, 2, &[1, 2, 3, 4, 5, 6]);
    let s = Mat::identity(f, 3).solve(&b).unwrap();
    assert_eq!(s.particular.unwrap(), b);
    assert_eq!(s.kernel.cols(), 0);
}

#[test]
fn solve_flags_inconsistent_columns() {
    let f = FieldSpec::rationals();
    let a = Mat::from_i64(f, 2, 2, &[1, 0, 0, 0]);
    let b = Mat::from_i64(f, 2, 2, &[1, 1, 0, 1]);
    let s = a.solve(&b).unwrap();
    assert!(s.particular.is_none());
    assert!(s.columns[0].is_some());
    assert!(s.columns[1].is_none());
    assert_eq!(s.kernel.cols(), 1);
}

#[test]
fn solve_shape_error() {
    let f = f2();
    let err = Mat::identity(f, 2).solve(&Mat::zeros(f, 3, 1)).unwrap_err();
    assert!(matches!(err, crate::Error::InputShape(_)));
}

#[test]
fn zero_sized_matrices() {
    let f = FieldSpec::prime(3);
    let z = Mat::zeros(f, 0, 3);
    assert_eq!(z.rank(), 0);
    assert_eq!(z.kernel().cols(), 3);
    let e = Mat::zeros(f, 2, 0);
    assert_eq!(e.kernel().cols(), 0);
    assert_eq!((&Mat::zeros(f, 2, 0) * &Mat::zeros(f, 0, 4)), Mat::zeros(f, 2, 4));
    assert!(Mat::identity(f, 0).inverse().unwrap().is_identity());
}

#[test]
fn scalar_parsing() {
    let q = FieldSpec::rationals();
    assert_eq!(q.parse("6/4").unwrap(), q.from_ratio(3, 2).unwrap());
    let f7 = FieldSpec::prime(7);
    assert_eq!(f7.parse("1/2").unwrap(), f7.from_i64(4));
    assert_eq!(f7.parse("-1").unwrap(), f7.from_i64(6));
    assert!(f7.parse("1/7").is_err());
    assert!(FieldSpec::new(6).is_err());
}

#[test]
fn inverse_and_left_inverse() {
    let q = FieldSpec::rationals();
    let a = Mat::from_i64(q, 2, 2, &[2, 1, 1, 1]);
    let inv = a.inverse().unwrap();
    assert!((&a * &inv).is_identity());
    let tall = Mat::from_i64(q, 3, 2, &[1, 0, 0, 1, 1, 1]);
    let l = tall.left_inverse().unwrap();
    assert!((&l * &tall).is_identity());
    assert!(Mat::from_i64(q, 2, 2, &[1, 2, 2, 4]).inverse().is_none());
}

#[test]
fn kron_and_vectorize() {
    let q = FieldSpec::rationals();
    let a = Mat::from_i64(q, 2, 2, &[1, 2, 3, 4]);
    let x = Mat::from_i64(q, 2, 2, &[0, 1, 1, 0]);
    let b = Mat::from_i64(q, 2, 2, &[5, 6, 7, 8]);
    // vec(AXB) = (B^T ⊗ A) vec X
    let lhs = (&(&a * &x) * &b).vectorize();
    let rhs = &b.transpose().kron(&a) * &x.vectorize();
    assert_eq!(lhs, rhs);
    assert_eq!(Mat::unvectorize(&x.vectorize(), 2, 2), x);
}

fn arb_field() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::rationals()),
        Just(FieldSpec::prime(2)),
        Just(FieldSpec::prime(3)),
        Just(FieldSpec::prime(101)),
    ]
}

fn arb_mat() -> impl Strategy<Value = Mat> {
    (arb_field(), 0usize..6, 0usize..6, any::<u64>())
        .prop_map(|(f, r, c, seed)| Mat::random(f, r, c, &mut ChaCha8Rng::seed_from_u64(seed)))
}

proptest! {
    #[test]
    fn rref_is_idempotent(m in arb_mat()) {
        let r = m.rref();
        prop_assert_eq!(&r.reduced.rref().reduced, &r.reduced);
    }

    #[test]
    fn rank_nullity_and_kernel(m in arb_mat()) {
        let k = m.kernel();
        prop_assert_eq!(k.cols() + m.rank(), m.cols());
        prop_assert!((&m * &k).is_zero());
        prop_assert_eq!(m.rank(), bareiss_rank(&m));
    }

    #[test]
    fn solve_reproduces_rhs(m in arb_mat(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = Mat::random(m.field(), m.cols(), 2, &mut rng);
        let b = &m * &x;
        let s = m.solve(&b).unwrap();
        let p = s.particular.expect("consistent by construction");
        prop_assert_eq!(&(&m * &p), &b);
    }

    #[test]
    fn rationals_stay_canonical(m in arb_mat()) {
        let r = m.rref();
        prop_assert!(r.reduced.entries().iter().all(is_canonical));
        prop_assert!(m.kernel().entries().iter().all(is_canonical));
    }
}
