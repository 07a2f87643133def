use std::sync::Arc;

use super::*;
use crate::algebra::{field_algebra, Algebra};
use crate::corpus::{named_algebra, standard_complexes, standard_graded, COMPLEX_ALGEBRAS};
use crate::exactlin::FieldSpec;
use crate::homology::{gorenstein_profile, Dim};
use crate::modrep::structural_modules;

fn alg(name: &str) -> Arc<Algebra> {
    named_algebra(name).unwrap()
}

fn k_complex() -> Complex {
    let k = field_algebra(FieldSpec::prime(2));
    let m = Module::regular(&k);
    Complex::new(&k, 0, vec![m.clone(), m], vec![Mat::identity(k.field(), 1)]).unwrap()
}

#[test]
fn f_examples() {
    let a = alg("A2");
    assert!(functor_f(&GradedModule::zero(&a)).is_zero());

    let k = field_algebra(FieldSpec::prime(2));
    let x = GradedModule::new(&k, 0, vec![Module::regular(&k)]).unwrap();
    let fx = functor_f(&x);
    assert_eq!(fx.support(), (0, 1));
    assert_eq!(fx.component(0).dim(), 1);
    assert_eq!(fx.component(1).dim(), 1);
    assert!(fx.differential(0).is_identity());

    for name in COMPLEX_ALGEBRAS {
        for x in standard_graded(&alg(name)).unwrap() {
            assert!(is_contractible(&functor_f(&x)).unwrap().is_yes(), "{name}");
        }
    }
}

#[test]
fn u_examples() {
    let a = alg("A2");
    assert!(functor_u(&Complex::zero(&a)).is_zero());
    for x in standard_graded(&a).unwrap() {
        let ufx = functor_u(&functor_f(&x));
        let (lo, hi) = x.support();
        for p in lo..=hi + 1 {
            assert_eq!(ufx.component(p).dim(), x.component(p).dim() + x.component(p - 1).dim());
        }
    }
    for c in standard_complexes(&a).unwrap() {
        let u = functor_u(&c);
        let (lo, hi) = c.support();
        for p in lo..=hi {
            assert_eq!(u.component(p), c.component(p));
        }
    }
}

#[test]
fn sigma_examples() {
    let a = alg("A2");
    assert!(shift_sigma(&Complex::zero(&a)).is_zero());
    for c in standard_complexes(&a).unwrap() {
        let s2 = shift_sigma(&shift_sigma(&c));
        assert_eq!(s2.support().0, c.support().0 - 2);
        assert_eq!(s2.differentials(), c.differentials());
        let s = shift_sigma(&c);
        let (lo, hi) = c.support();
        for p in lo - 1..=hi {
            assert_eq!(s.cohomology_dim(p), c.cohomology_dim(p + 1));
        }
        // U Sigma is the degree shift of graded modules.
        assert!(functor_u(&s).same_as(&functor_u(&c).shift()));
    }
}

#[test]
fn contractibility_examples() {
    let a = alg("A2");
    assert!(is_contractible(&Complex::zero(&a)).unwrap().is_yes());
    match is_contractible(&k_complex()).unwrap() {
        Contractibility::Yes { lo, homotopy } => {
            assert_eq!(lo, 0);
            assert!(homotopy[1].is_identity());
        }
        Contractibility::No => panic!("[k -> k] is contractible"),
    }
    for name in COMPLEX_ALGEBRAS {
        let a = alg(name);
        let s = structural_modules(&a).unwrap().classes[0].simple.clone();
        assert!(!is_contractible(&Complex::stalk(&s, 3)).unwrap().is_yes());
    }
}

#[test]
fn frobenius_pair_on_corpus() {
    let a = alg("A2");
    let r = check_frobenius_pair_fu(&[], &[]).unwrap();
    assert!(r.all_pass());

    let c2 = alg("F2[C2]");
    let stalks: Vec<Complex> = structural_modules(&c2)
        .unwrap()
        .classes
        .iter()
        .flat_map(|c| [Complex::stalk(&c.simple, 0), Complex::stalk(&c.projective, 1)])
        .collect();
    let r = check_frobenius_pair_fu(&standard_graded(&c2).unwrap(), &stalks).unwrap();
    assert!(r.all_pass(), "{r:?}");

    for name in COMPLEX_ALGEBRAS {
        let a = alg(name);
        let r = check_frobenius_pair_fu(&standard_graded(&a).unwrap(), &standard_complexes(&a).unwrap()).unwrap();
        assert!(r.all_pass(), "{name}: {r:?}");
    }

    let p = structural_modules(&a).unwrap().classes[0].projective.clone();
    let fp = functor_f(&GradedModule::new(&a, 0, vec![p]).unwrap());
    assert!(is_contractible(&fp).unwrap().is_yes());
}

#[test]
fn componentwise_gp_examples() {
    let mut count = 0;
    for name in COMPLEX_ALGEBRAS {
        let a = alg(name);
        let profile = gorenstein_profile(&a, 20).unwrap();
        for c in standard_complexes(&a).unwrap() {
            let r = componentwise_gp_check(&c, &profile).unwrap();
            for (p, v) in &r.verdicts {
                assert_eq!(
                    *v,
                    is_gorenstein_projective(&c.component(*p), &profile).unwrap().is_yes()
                );
            }
            let shifted = componentwise_gp_check(&shift_sigma(&c), &profile).unwrap();
            assert_eq!(r.all_gp(), shifted.all_gp());
            if name == &"F2[C2]" {
                assert!(r.all_gp());
            }
            count += 1;
        }
    }
    assert!(count >= 20);

    let a = alg("A2");
    let profile = gorenstein_profile(&a, 20).unwrap();
    let s1 = structural_modules(&a)
        .unwrap()
        .classes
        .iter()
        .find(|c| c.simple.dim() != c.projective.dim())
        .unwrap()
        .simple
        .clone();
    assert!(!componentwise_gp_check(&Complex::stalk(&s1, 0), &profile)
        .unwrap()
        .all_gp());
    let proj = structural_modules(&a).unwrap().classes[0].projective.clone();
    let d = Mat::zeros(a.field(), proj.dim(), proj.dim());
    let c = Complex::new(&a, 0, vec![proj.clone(), proj], vec![d]).unwrap();
    assert!(componentwise_gp_check(&c, &profile).unwrap().all_gp());
}

#[test]
fn componentwise_gp_needs_certified_profile() {
    let a = alg("A2");
    let uncertified = GorensteinProfile {
        spdi: Dim::AtLeast(3),
        sidp: Dim::AtLeast(3),
        bound: 3,
    };
    let c = Complex::stalk(&Module::regular(&a), 0);
    assert!(matches!(
        componentwise_gp_check(&c, &uncertified),
        Err(Error::PreconditionFailed(_))
    ));
}
