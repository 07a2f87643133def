use std::sync::Arc;

use super::*;
use crate::corpus::{linear_path_algebra, named_algebra, ALGEBRA_NAMES};
use crate::exactlin::{FieldSpec, Mat};

fn f2() -> FieldSpec {
    FieldSpec::prime(2)
}

fn nilpotency_index(a: &Algebra) -> Option<usize> {
    let rad = a.radical().clone();
    let mut power = rad.clone();
    for k in 1..=a.dim() + 1 {
        if power.cols() == 0 {
            return Some(k);
        }
        power = a.span_products(&power, &rad);
    }
    None
}

#[test]
fn a2_has_three_paths() {
    let a = linear_path_algebra(f2(), 2).unwrap();
    assert_eq!(a.dim(), 3);
    assert_eq!(a.labels(), ["e1", "e2", "a1"]);
    assert_eq!(a.idempotents().unwrap().len(), 2);
    assert_eq!(a.radical(), &Mat::unit_vector(f2(), 3, 2));
}

#[test]
fn loop_with_square_relation_is_dual_numbers() {
    let q = Quiver::new(1, &[(0, 0, "x")]).with_relation(Relation::monomial(&["x", "x"], f2()));
    let a = path_algebra(&q, f2(), DEFAULT_MAX_PATH_LENGTH).unwrap();
    assert_eq!(a.dim(), 2);
    let b = named_algebra("F2[x]/x^2").unwrap();
    assert!(a.is_commutative());
    // Same structure constants once both bases are (1, x).
    assert_eq!(a.left_all(), b.left_all());
}

#[test]
fn empty_quiver_is_the_field() {
    let a = path_algebra(&Quiver::new(1, &[]), f2(), DEFAULT_MAX_PATH_LENGTH).unwrap();
    assert_eq!(a.dim(), 1);
    assert!(a.structurally_equal(&field_algebra(f2())));
}

#[test]
fn free_loop_is_infinite_dimensional() {
    let q = Quiver::new(1, &[(0, 0, "x")]);
    let err = path_algebra(&q, f2(), 8).unwrap_err();
    assert!(matches!(err, Error::InfiniteDimensional(_)), "{err:?}");
}

#[test]
fn noncomposable_relation_is_rejected() {
    let q = Quiver::new(3, &[(0, 1, "a"), (1, 2, "b")]).with_relation(Relation::monomial(&["b", "a"], f2()));
    let err = path_algebra(&q, f2(), 8).unwrap_err();
    assert!(matches!(err, Error::MalformedRelation(_)), "{err:?}");
}

#[test]
fn commuting_square_has_dimension_nine() {
    let k = f2();
    let q = Quiver::new(4, &[(0, 1, "a"), (0, 2, "b"), (1, 3, "c"), (2, 3, "d")]).with_relation(Relation {
        terms: vec![
            (vec!["a".into(), "c".into()], k.one()),
            (vec!["b".into(), "d".into()], -&k.one()),
        ],
    });
    let a = path_algebra(&q, k, 8).unwrap();
    // 4 vertices, 4 arrows, one surviving length-two path
    assert_eq!(a.dim(), 9);
}

#[test]
fn s3_over_f7_is_semisimple() {
    let a = named_algebra("F7[S3]").unwrap();
    assert_eq!(a.dim(), 6);
    assert_eq!(a.radical_dim(), 0);
    assert_eq!(generic_radical(&a).cols(), 0);
    let ids = a.idempotents().unwrap();
    // 1 + 1 + 2 primitive idempotents: two linear characters and the 2x2 block split in two.
    assert_eq!(ids.len(), 4);
    for (i, e) in ids.iter().enumerate() {
        for (j, f) in ids.iter().enumerate() {
            let ef = a.mul(e, f);
            if i == j {
                assert_eq!(&ef, e);
            } else {
                assert!(ef.is_zero());
            }
        }
    }
}

#[test]
fn c2_over_f2_radical_is_spanned_by_one_plus_g() {
    let a = named_algebra("F2[C2]").unwrap();
    let x = a.element(&[("1", 1), ("g1", 1)]).unwrap();
    assert!(a.radical().spans(&x));
    assert_eq!(a.radical_dim(), 1);
    assert_eq!(a.idempotents().unwrap().len(), 1);
    assert!(a.mul(&x, &x).is_zero());
}

#[test]
fn c2_over_f2_matches_dual_numbers_after_base_change() {
    let a = named_algebra("F2[C2]").unwrap();
    let x = a.element(&[("1", 1), ("g1", 1)]).unwrap();
    // In the basis (1, 1+g) the multiplication is that of k[x]/(x^2).
    let t = Mat::hstack(f2(), 2, &[a.unit(), &x]);
    let tinv = t.inverse().unwrap();
    let dual = named_algebra("F2[x]/x^2").unwrap();
    for (i, v) in [a.unit().clone(), x].iter().enumerate() {
        let m = &(&tinv * &a.left_mult(v)) * &t;
        assert_eq!(&m, dual.left(i));
    }
}

#[test]
fn closed_radical_agrees_with_generic_computation() {
    for name in ALGEBRA_NAMES {
        let a = named_algebra(name).unwrap();
        if let Some(closed) = a.closed_form_radical() {
            let generic = generic_radical(&a);
            assert_eq!(closed.rank(), generic.cols(), "{name}");
            assert!(generic.spans(closed) && closed.spans(&generic), "{name}");
        }
    }
}

#[test]
fn radical_is_nilpotent_and_quotient_is_semisimple() {
    for name in ALGEBRA_NAMES {
        let a = named_algebra(name).unwrap();
        assert!(nilpotency_index(&a).is_some(), "{name}");
        if a.radical_dim() == 0 {
            continue;
        }
        let q = quotient(&a, a.radical()).unwrap();
        assert_eq!(generic_radical(&q).cols(), 0, "{name}");
    }
}

#[test]
fn opposite_of_a2_is_reversed_quiver() {
    let a = linear_path_algebra(f2(), 2).unwrap();
    let op = a.opposite();
    let rev = path_algebra(&Quiver::new(2, &[(1, 0, "a1")]), f2(), 8).unwrap();
    // Both have basis e1, e2, arrow; the arrow of the opposite runs 2 -> 1.
    assert!(op.structurally_equal(&rev));
    assert!(Arc::ptr_eq(&op.opposite(), &a));
}

#[test]
fn opposite_of_commutative_algebra_is_identical() {
    for name in ["F2[x]/x^3", "F3[C3]"] {
        let a = named_algebra(name).unwrap();
        assert!(a.opposite().structurally_equal(&a));
    }
}

#[test]
fn derived_dimensions() {
    let k = f2();
    let a2 = linear_path_algebra(k, 2).unwrap();
    let p = product(&field_algebra(k), &a2).unwrap();
    assert_eq!(p.dim(), 4);
    assert_eq!(p.block_idempotents().len(), 2);
    assert_eq!(truncated_extension(&a2, 2).unwrap().algebra.dim(), 6);
    assert_eq!(matrix_algebra(&a2, 2).unwrap().dim(), 12);
    let t1 = truncated_extension(&a2, 1).unwrap();
    assert!(t1.algebra.structurally_equal(&a2));
    assert!(t1.embedding.is_identity());
}

#[test]
fn truncated_idempotents_are_images() {
    let a2 = linear_path_algebra(f2(), 2).unwrap();
    let t = truncated_extension(&a2, 3).unwrap();
    let ids = t.algebra.idempotents().unwrap();
    for (e, f) in ids.iter().zip(a2.idempotents().unwrap()) {
        assert_eq!(e, &(&t.embedding * f));
    }
}

#[test]
fn non_associative_table_is_rejected() {
    let k = f2();
    // basis {1, x} with x*x = 1 but x*1 = 0 breaks the unit law
    let v = |a: i64, b: i64| Mat::from_i64(k, 2, 1, &[a, b]);
    let table = vec![vec![v(1, 0), v(0, 1)], vec![v(0, 0), v(1, 0)]];
    let data = AlgebraData::from_table(k, vec!["1".into(), "x".into()], &table, v(1, 0)).unwrap();
    assert!(Algebra::new(data).is_err());
}

#[test]
fn group_table_validation() {
    let bad = vec![vec![0, 1], vec![1, 1]];
    assert!(matches!(group_algebra(&bad, f2()), Err(Error::NotAGroup(_))));
    let trivial = group_algebra(&cyclic_group_table(1), f2()).unwrap();
    assert!(trivial.structurally_equal(&field_algebra(f2())));
}

#[test]
fn group_algebra_over_rationals_has_no_idempotents() {
    let a = group_algebra(&cyclic_group_table(3), FieldSpec::rationals()).unwrap();
    assert!(a.idempotents().is_none());
    assert_eq!(generic_radical(&a).cols(), 0);
}
