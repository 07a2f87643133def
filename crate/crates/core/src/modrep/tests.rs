use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::algebra::Algebra;
use crate::corpus::{named_algebra, random_module, standard_modules, ALGEBRA_NAMES};
use crate::exactlin::Mat;

fn alg(name: &str) -> Arc<Algebra> {
    named_algebra(name).unwrap()
}

fn classes(a: &Arc<Algebra>) -> Arc<Structural> {
    structural_modules(a).unwrap()
}

/// Counts intertwiners by running over every matrix over F_2.
fn brute_force_hom_count(m: &Module, n: &Module) -> usize {
    let f = m.field();
    let cells = m.dim() * n.dim();
    let mut count = 0;
    for code in 0u32..(1 << cells) {
        let x = Mat::from_fn(f, n.dim(), m.dim(), |i, j| {
            f.from_i64(((code >> (i * m.dim() + j)) & 1) as i64)
        });
        if m.algebra()
            .generators()
            .iter()
            .all(|&g| &x * m.action(g) == n.action(g) * &x)
        {
            count += 1;
        }
    }
    count
}

#[test]
fn hom_from_regular_has_dimension_of_target() {
    for name in ["A2", "F2[C2]", "nakayama", "F7[S3]"] {
        let a = alg(name);
        for (_, m) in standard_modules(&a).unwrap() {
            assert_eq!(hom_dim(&Module::regular(&a), &m).unwrap(), m.dim(), "{name}");
        }
    }
}

#[test]
fn hom_space_matches_exhaustive_count_over_f2() {
    for name in ["A2", "F2[C2]", "F2[x]/x^3", "nakayama"] {
        let a = alg(name);
        let mods: Vec<Module> = standard_modules(&a)
            .unwrap()
            .into_iter()
            .map(|(_, m)| m)
            .filter(|m| m.dim() <= 3)
            .collect();
        for m in &mods {
            for n in &mods {
                let h = hom_dim(m, n).unwrap();
                assert_eq!(1usize << h, brute_force_hom_count(m, n), "{name}");
            }
        }
    }
}

#[test]
fn a2_structural_modules() {
    let a = alg("A2");
    let s = classes(&a);
    assert_eq!(s.class_count(), 2);
    let dims: Vec<_> = s
        .classes
        .iter()
        .map(|c| (c.simple.dim(), c.projective.dim(), c.injective.dim()))
        .collect();
    assert_eq!(dims, [(1, 2, 1), (1, 1, 2)]);
    assert_eq!(hom_dim(&s.classes[0].simple, &s.classes[1].simple).unwrap(), 0);
}

#[test]
fn field_and_c2_structural_modules() {
    let f = alg("F2");
    let s = classes(&f);
    assert_eq!(s.class_count(), 1);
    assert_eq!(s.classes[0].projective.dim(), 1);
    assert_eq!(s.classes[0].injective.dim(), 1);

    let a = alg("F2[C2]");
    let s = classes(&a);
    let c = &s.classes[0];
    assert_eq!((c.simple.dim(), c.projective.dim(), c.injective.dim()), (1, 2, 2));
    assert_eq!(hom_dim(&c.simple, &c.simple).unwrap(), 1);
    let dual_regular = Module::regular(&a.opposite()).dual();
    assert!(is_isomorphic(&dual_regular, &Module::regular(&a), 0).unwrap().is_yes());
}

#[test]
fn idempotent_classes_match_simple_classes() {
    for name in ALGEBRA_NAMES {
        let a = alg(name);
        let s = classes(&a);
        let mut distinct: Vec<usize> = s.idempotent_class.clone();
        distinct.sort();
        distinct.dedup();
        assert_eq!(distinct.len(), s.class_count(), "{name}");
        // Distinct classes have non-isomorphic simples.
        for (i, x) in s.classes.iter().enumerate() {
            for y in &s.classes[i + 1..] {
                assert_eq!(hom_dim(&x.simple, &y.simple).unwrap(), 0, "{name}");
            }
        }
    }
    assert_eq!(classes(&alg("F7[S3]")).class_count(), 3);
    assert_eq!(classes(&alg("M2(F2[x]/x^2)")).class_count(), 1);
}

#[test]
fn factorization_of_zero_and_identity() {
    let a = alg("A2");
    let m = Module::regular(&a);
    let z = hom_factorization(&ModHom::zero(&m, &m));
    assert_eq!((z.kernel.dim(), z.image.dim(), z.cokernel.dim()), (3, 0, 3));
    let i = hom_factorization(&ModHom::identity(&m));
    assert_eq!((i.kernel.dim(), i.image.dim(), i.cokernel.dim()), (0, 3, 0));
}

#[test]
fn cokernel_of_p2_in_p1_is_s1() {
    let a = alg("A2");
    let s = classes(&a);
    let (p1, p2, s1) = (&s.classes[0].projective, &s.classes[1].projective, &s.classes[0].simple);
    let maps = hom_space(p2, p1).unwrap();
    assert_eq!(maps.len(), 1);
    assert!(maps[0].is_injective());
    let f = hom_factorization(&maps[0]);
    assert!(is_isomorphic(&f.cokernel, s1, 0).unwrap().is_yes());
    assert!(is_short_exact(&f.image_inclusion, &f.cokernel_projection));
}

#[test]
fn double_dual_is_identity() {
    let a = alg("A3");
    for (_, m) in standard_modules(&a).unwrap() {
        let dd = m.dual().dual();
        assert!(Arc::ptr_eq(dd.algebra(), m.algebra()));
        assert!(dd == m);
    }
    assert!(Module::zero(&a).dual().is_zero());
}

#[test]
fn dual_of_projective_is_injective_envelope_of_its_socle() {
    let a = alg("A2");
    let op = a.opposite();
    let s = classes(&a);
    let d = s.classes[0].projective.dual();
    assert!(Arc::ptr_eq(d.algebra(), &op));
    let (soc, incl) = d.socle();
    let (env, _) = envelope(&soc).unwrap();
    assert_eq!(env.dim(), d.dim());
    assert!(is_isomorphic(&env, &d, 0).unwrap().is_yes());
    assert!(incl.is_injective());
}

#[test]
fn covers_and_envelopes() {
    let a = alg("A2");
    let s = classes(&a);
    let (p, pi) = cover(&s.classes[0].simple).unwrap();
    assert_eq!(p.classes(), [0]);
    assert!(pi.is_surjective());
    for c in &s.classes {
        let (p, pi) = cover(&c.projective).unwrap();
        assert_eq!(p.module.dim(), c.projective.dim());
        assert!(pi.is_isomorphism());
    }
    let g = alg("F2[C2]");
    let k = &classes(&g).classes[0].simple;
    let (env, iota) = envelope(k).unwrap();
    assert!(iota.is_injective());
    assert!(is_isomorphic(&env, &Module::regular(&g), 0).unwrap().is_yes());
}

#[test]
fn cover_kernels_are_superfluous() {
    for name in ["A3", "nakayama", "A2[x]/x^2", "F3[C3]", "M2(F2[x]/x^2)"] {
        let a = alg(name);
        for (label, m) in standard_modules(&a).unwrap() {
            let (p, pi) = cover(&m).unwrap();
            let ker = pi.matrix().kernel();
            assert!(p.module.radical_basis().spans(&ker), "{name} {label}");
            let (env, iota) = envelope(&m).unwrap();
            assert!(iota.is_injective(), "{name} {label}");
            // The socle of the envelope lies in the image.
            assert!(iota.matrix().spans(&env.socle_basis()), "{name} {label}");
        }
    }
}

#[test]
fn lift_through_cover() {
    let a = alg("A3");
    let mods = standard_modules(&a).unwrap();
    for (_, m) in &mods {
        let (p, pi) = cover(m).unwrap();
        let (q, rho) = cover(&p.module).unwrap();
        let phi = pi.compose(&rho);
        let lifted = q.lift(phi.matrix(), &pi).unwrap();
        assert_eq!(pi.compose(&lifted), phi);
    }
}

#[test]
fn stable_hom_examples() {
    let g = alg("F2[C2]");
    let k = classes(&g).classes[0].simple.clone();
    assert_eq!(stable_hom_dim(&k, &k).unwrap(), 1);
    let a = alg("A2");
    for c in &classes(&a).classes {
        for (_, m) in standard_modules(&a).unwrap() {
            assert_eq!(stable_hom_dim(&c.projective, &m).unwrap(), 0);
        }
    }
    let ss = alg("F7[S3]");
    let mods = standard_modules(&ss).unwrap();
    for (_, x) in &mods {
        for (_, y) in &mods {
            assert_eq!(stable_hom_dim(x, y).unwrap(), 0);
        }
    }
}

#[test]
fn isomorphism_verdicts() {
    let g = alg("F2[C2]");
    let k = classes(&g).classes[0].simple.clone();
    let r = Module::regular(&g);
    assert!(is_isomorphic(&r, &r, 0).unwrap().is_yes());
    assert!(is_isomorphic(&k, &r, 0).unwrap().is_no());
    let kk = direct_sum(&g, &[&k, &k]).module;
    match is_isomorphic(&kk, &r, 0).unwrap() {
        IsoVerdict::No(reason) => assert!(reason.contains("dimension") || reason.contains("radical")),
        v => panic!("{v:?}"),
    }
}

#[test]
fn simple_multiplicities_add_up() {
    for name in ["A3", "nakayama", "F7[S3]", "M2(F2[x]/x^2)"] {
        let a = alg(name);
        let s = classes(&a);
        for (_, m) in standard_modules(&a).unwrap() {
            let mult = simple_multiplicities(&m).unwrap();
            let total: usize = mult.iter().zip(&s.classes).map(|(k, c)| k * c.simple.dim()).sum();
            assert_eq!(total, m.dim(), "{name}");
        }
    }
}

#[test]
fn invalid_module_is_rejected() {
    let a = alg("A2");
    let f = a.field();
    // e1 acting as zero breaks the unit law.
    let bad = vec![Mat::zeros(f, 1, 1), Mat::zeros(f, 1, 1), Mat::zeros(f, 1, 1)];
    assert!(Module::new(a.clone(), bad).is_err());
    let m = Module::regular(&a);
    let not_a_map = Mat::unit_vector(f, 3, 0).kron(&Mat::from_i64(f, 1, 3, &[0, 1, 0]));
    assert!(ModHom::new(m.clone(), m, not_a_map).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn factorization_dimensions_add_up(seed in any::<u64>(), name in prop::sample::select(vec!["A2", "F2[C2]", "nakayama", "F3[C3]"])) {
        let a = alg(name);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module(&a, 2, 1, &mut rng);
        let n = random_module(&a, 2, 1, &mut rng);
        let basis = hom_space(&m, &n).unwrap();
        prop_assume!(!basis.is_empty());
        let coeffs: Vec<_> = basis.iter().map(|_| crate::exactlin::random_scalar(a.field(), &mut rng)).collect();
        let mats: Vec<&Mat> = basis.iter().map(|h| h.matrix()).collect();
        let x = Mat::linear_combination(a.field(), n.dim(), m.dim(), &coeffs, &mats);
        let f = ModHom::new(m.clone(), n.clone(), x).unwrap();
        let fact = hom_factorization(&f);
        prop_assert_eq!(m.dim(), fact.kernel.dim() + fact.image.dim());
        prop_assert_eq!(n.dim(), fact.image.dim() + fact.cokernel.dim());
        prop_assert!(is_short_exact(&fact.kernel_inclusion, &fact.coimage_map));
        prop_assert!(is_short_exact(&fact.image_inclusion, &fact.cokernel_projection));
        // Duality reverses the sequence and keeps it exact.
        prop_assert!(is_short_exact(&fact.cokernel_projection.dual(), &fact.image_inclusion.dual()));
    }

    #[test]
    fn cover_of_random_module(seed in any::<u64>(), name in prop::sample::select(vec!["A3", "nakayama", "A2[x]/x^2"])) {
        let a = alg(name);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module(&a, 2, 2, &mut rng);
        let (p, pi) = cover(&m).unwrap();
        prop_assert!(pi.is_surjective());
        prop_assert_eq!(p.rank(), m.top().0.dim());
        prop_assert!(p.module.radical_basis().spans(&pi.matrix().kernel()));
    }
}
