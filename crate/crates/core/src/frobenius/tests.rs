use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::algebra::{field_algebra, Algebra};
use crate::corpus::{morita_pair, named_algebra, named_extension, random_module, standard_modules, EXTENSION_NAMES};
use crate::error::Error;
use crate::exactlin::{FieldSpec, Mat};
use crate::modrep::{
    direct_sum, hom_factorization, hom_space, is_isomorphic, is_short_exact, structural_modules, ModHom, Module,
};

fn ext(name: &str) -> RingExtension {
    named_extension(name).unwrap().extension().unwrap()
}

fn alg(name: &str) -> Arc<Algebra> {
    named_algebra(name).unwrap()
}

fn iso(m: &Module, n: &Module) -> bool {
    is_isomorphic(m, n, 0).unwrap().is_yes()
}

fn non_projective_simple(a: &Arc<Algebra>) -> Module {
    structural_modules(a)
        .unwrap()
        .classes
        .iter()
        .find(|c| c.simple.dim() != c.projective.dim())
        .unwrap()
        .simple
        .clone()
}

fn f2() -> FieldSpec {
    FieldSpec::prime(2)
}

#[test]
fn extension_validation() {
    let a = alg("A2");
    assert!(RingExtension::new(a.clone(), a.clone(), Mat::identity(f2(), 3)).is_ok());
    let k = field_algebra(f2());
    let not_unital = Mat::unit_vector(f2(), 3, 0);
    assert!(matches!(
        RingExtension::new(k.clone(), a.clone(), not_unital),
        Err(Error::InvalidAlgebra(_))
    ));
    let wrong_shape = Mat::identity(f2(), 2);
    assert!(matches!(
        RingExtension::new(a.clone(), a.clone(), wrong_shape),
        Err(Error::InputShape(_))
    ));
    // Swapping the vertices of A2 is not multiplicative because the arrow goes one way.
    let mut swap = Mat::zeros(f2(), 3, 3);
    swap.set(0, 1, &f2().one());
    swap.set(1, 0, &f2().one());
    swap.set(2, 2, &f2().one());
    assert!(RingExtension::new(a.clone(), a, swap).is_err());
    for name in EXTENSION_NAMES {
        assert!(named_extension(name).unwrap().extension().is_ok(), "{name}");
    }
}

#[test]
fn induction_examples() {
    let e = ext("F2-F2[C2]");
    let k = Module::regular(e.base());
    let ind = induce(&e, &k).unwrap();
    assert_eq!(ind.dim(), 2);
    assert!(iso(&ind, &Module::regular(e.total())));

    let e = ext("A2-A2[x]/x^2");
    assert!(iso(
        &induce(&e, &Module::regular(e.base())).unwrap(),
        &Module::regular(e.total())
    ));

    let e = ext("F2-F2[x]/x^3");
    let x = Module::free(e.base(), 2);
    assert_eq!(induce(&e, &x).unwrap().dim(), 6);
}

#[test]
fn restriction_examples() {
    let e = RingExtension::identity(&alg("A3"));
    for (_, m) in standard_modules(e.total()).unwrap() {
        let r = restrict(&e, &m).unwrap();
        assert_eq!(r.actions(), m.actions());
    }
    for (name, t) in [("F2-F2[x]/x^2", 2), ("F2-F2[x]/x^3", 3), ("A2-A2[x]/x^2", 2)] {
        let e = ext(name);
        let r = restrict(&e, &Module::regular(e.total())).unwrap();
        assert!(iso(&r, &Module::free(e.base(), t)), "{name}");
    }
    let e = ext("F3-F3[C3]");
    for (_, m) in standard_modules(e.total()).unwrap() {
        assert_eq!(restrict(&e, &m).unwrap().dim(), m.dim());
    }
}

#[test]
fn coinduction_examples() {
    let e = RingExtension::identity(&alg("A2"));
    for (_, m) in standard_modules(e.base()).unwrap() {
        assert!(iso(&coinduce(&e, &m).unwrap(), &m));
    }
    let e = ext("F2-F2[x]/x^3");
    let k = Module::regular(e.base());
    assert_eq!(coinduce(&e, &k).unwrap().dim(), 3);
    let e = ext("A2-A2[x]/x^2");
    for (_, m) in standard_modules(e.base()).unwrap() {
        assert_eq!(coinduce(&e, &m).unwrap().dim(), 2 * m.dim());
    }
}

#[test]
fn unit_and_counit_examples() {
    let e = RingExtension::identity(&alg("A2"));
    let pair = IndRes { ext: e.clone() };
    for (_, m) in standard_modules(e.base()).unwrap() {
        // Identities up to the canonical presentation of S (x)_S m.
        assert!(pair.unit(&m).unwrap().is_isomorphism());
        assert!(pair.counit(&m).unwrap().is_isomorphism());
        let coind = ResCoind { ext: e.clone() };
        assert!(coind.unit(&m).unwrap().is_isomorphism());
        assert!(coind.counit(&m).unwrap().is_isomorphism());
    }

    let e = ext("F2-F2[C2]");
    let pair = IndRes { ext: e.clone() };
    let k = Module::regular(e.base());
    let eta = pair.unit(&k).unwrap();
    assert!(eta.is_injective());

    // The counit on the regular module is split by w -> 1 (x) w as a map of base modules.
    let s = Module::regular(e.total());
    let eps = pair.counit(&s).unwrap();
    assert!(eps.is_surjective());
    let split = pair.unit(&restrict(&e, &s).unwrap()).unwrap();
    assert!((eps.matrix() * split.matrix()).is_identity());
}

#[test]
fn triangle_identities_for_every_extension() {
    for name in EXTENSION_NAMES {
        let e = ext(name);
        let ra = standard_modules(e.base()).unwrap();
        let sa = standard_modules(e.total()).unwrap();
        let ind = IndRes { ext: e.clone() };
        let coind = ResCoind { ext: e.clone() };
        for i in 0..ra.len().max(sa.len()) {
            let x = &ra[i % ra.len()].1;
            let y = &sa[i % sa.len()].1;
            assert!(check_triangles(&ind, x, y).unwrap().holds(), "{name} ind/res");
            assert!(check_triangles(&coind, y, x).unwrap().holds(), "{name} res/coind");
        }
    }
    let m = morita_pair().unwrap();
    let ra = standard_modules(m.source()).unwrap();
    let sa = standard_modules(m.target()).unwrap();
    for (x, y) in ra.iter().zip(sa.iter()) {
        assert!(check_triangles(&m, &x.1, &y.1).unwrap().holds());
    }
}

#[test]
fn frobenius_extension_verdicts() {
    let yes = [
        "identity-A2",
        "F2-F2[x]/x^2",
        "F2-F2[x]/x^3",
        "F2-F2[C2]",
        "F3-F3[C3]",
        "A2-A2[x]/x^2",
    ];
    for name in yes {
        let e = ext(name);
        let v = is_frobenius_extension(&e, 0).unwrap();
        let FrobeniusVerdict::Yes { witness } = &v else {
            panic!("{name}: {v:?}");
        };
        assert!(witness.is_isomorphism() && witness.intertwines());
        for (m, x) in standard_modules(e.base()).unwrap() {
            assert!(ind_coind_witness(&e, &x, 0).unwrap().is_yes(), "{name} {m}");
        }
    }
    assert!(is_frobenius_extension(&ext("F2-A2"), 0).unwrap().is_no());
}

#[test]
fn frobenius_bimodule_verdicts() {
    let k = field_algebra(f2());
    let one = Mat::identity(f2(), 1);
    let m = Bimodule::new(k.clone(), k.clone(), vec![one.clone()], vec![one]).unwrap();
    assert!(is_frobenius_bimodule(&m, 0).unwrap().is_yes());

    for name in ["F2-F2[C2]", "A2-A2[x]/x^2"] {
        let e = ext(name);
        assert!(
            is_frobenius_bimodule(&e.total_as_bimodule(), 0).unwrap().is_yes(),
            "{name}"
        );
    }

    let a = alg("A2");
    let s1 = non_projective_simple(&a);
    let m = Bimodule::new(a, k, s1.actions().to_vec(), vec![Mat::identity(f2(), 1)]).unwrap();
    let v = is_frobenius_bimodule(&m, 0).unwrap();
    assert!(matches!(&v, FrobeniusVerdict::No { reason } if reason.contains("left")));
}

#[test]
fn bimodule_rejects_non_commuting_actions() {
    let a = alg("F2[x]/x^2");
    // Right multiplication commutes with left multiplication; the transposed action does not.
    let left = a.left_all().to_vec();
    let right = vec![Mat::identity(f2(), 2), Mat::from_i64(f2(), 2, 2, &[0, 1, 0, 0])];
    assert!(Bimodule::new(a.clone(), a.clone(), left.clone(), right).is_err());
    let right = (0..2).map(|i| a.right_mult(&a.basis_vector(i))).collect();
    assert!(Bimodule::new(a.clone(), a, left, right).is_ok());
}

#[test]
fn column_bimodule_is_frobenius() {
    let m = morita_pair().unwrap();
    assert!(is_frobenius_bimodule(&m.bimodule, 0).unwrap().is_yes());
}

#[test]
fn faithfulness_reports() {
    for name in ["identity-A2", "F2-F2[C2]"] {
        let e = ext(name);
        let pair = IndRes { ext: e.clone() };
        let r = faithfulness_report(
            &pair,
            &standard_modules(e.base()).unwrap(),
            &standard_modules(e.total()).unwrap(),
        )
        .unwrap();
        assert!(r.all_pass(), "{name}: {r:?}");
        assert!(r.source_projectives_generated && r.target_projectives_generated);
    }
}

#[test]
fn gpd_transfer_tables() {
    let e = RingExtension::identity(&alg("A2"));
    let rows = verify_gpd_transfer(
        &e,
        &standard_modules(e.total()).unwrap(),
        &standard_modules(e.base()).unwrap(),
        20,
        0,
    )
    .unwrap();
    assert!(rows.iter().all(TransferRow::agrees));

    let e = ext("F2-F2[C2]");
    let corpus = vec![
        ("k".to_string(), non_projective_simple(e.total())),
        ("regular".to_string(), Module::regular(e.total())),
    ];
    let rows = verify_gpd_transfer(&e, &corpus, &[], 20, 0).unwrap();
    assert!(rows.iter().all(|r| r.gpd_module == Some(0) && r.gpd_image == Some(0)));

    let e = ext("A2-A2[x]/x^2");
    let rows = verify_gpd_transfer(
        &e,
        &standard_modules(e.total()).unwrap(),
        &standard_modules(e.base()).unwrap(),
        20,
        0,
    )
    .unwrap();
    assert!(rows.len() >= 8);
    assert!(rows.iter().any(|r| r.gpd_module == Some(1)));
    assert!(rows.iter().any(|r| r.side == "base"));

    let err = verify_gpd_transfer(&ext("F2-A2"), &[], &[], 20, 0).unwrap_err();
    assert!(matches!(err, Error::PreconditionFailed(_)));
}

#[test]
fn global_dimension_transfer() {
    let t = global_gdim_transfer(&RingExtension::identity(&alg("A3")), 20, 0).unwrap();
    assert!(t.equal());
    let t = global_gdim_transfer(&ext("F3-F3[C3]"), 20, 0).unwrap();
    assert_eq!((t.base, t.total), (Some(0), Some(0)));
    let t = global_gdim_transfer(&ext("A2-A2[x]/x^2"), 20, 0).unwrap();
    assert_eq!((t.base, t.total), (Some(1), Some(1)));
}

#[test]
fn product_counterexample() {
    let k = field_algebra(f2());
    let a2 = alg("A2");
    let s1 = non_projective_simple(&a2);
    let r = counterexample_product(&k, &a2, &s1, 20).unwrap();
    assert!(r.certifies_failure(), "{r:?}");
    assert_eq!(r.projected_dim, 0);
    assert_eq!(r.product_dim, 4);

    let p1 = structural_modules(&a2).unwrap().classes[0].projective.clone();
    assert!(matches!(
        counterexample_product(&k, &a2, &p1, 20),
        Err(Error::PreconditionFailed(_))
    ));
    let kk = Module::regular(&k);
    assert!(matches!(
        counterexample_product(&k, &k, &kk, 20),
        Err(Error::PreconditionFailed(_))
    ));
}

#[test]
fn tri_equivalence_conditions() {
    let e = RingExtension::identity(&alg("A2"));
    let pair = IndRes { ext: e.clone() };
    let r = tri_equiv_conditions(
        &pair,
        &standard_modules(e.base()).unwrap(),
        &standard_modules(e.total()).unwrap(),
        20,
    )
    .unwrap();
    assert!(r.all_pass(), "{r:?}");
    assert!(r.rows.iter().all(|row| row.defect_dim == 0));

    let m = morita_pair().unwrap();
    let r = tri_equiv_conditions(
        &m,
        &standard_modules(m.source()).unwrap(),
        &standard_modules(m.target()).unwrap(),
        20,
    )
    .unwrap();
    assert!(r.all_pass(), "{r:?}");
    assert!(r.rows.iter().all(|row| row.defect_dim == 0));

    let e = ext("F2-F2[C2]");
    let pair = IndRes { ext: e.clone() };
    let k = non_projective_simple(e.total());
    let r = tri_equiv_conditions(
        &pair,
        &standard_modules(e.base()).unwrap(),
        &[("k".to_string(), k.clone())],
        20,
    )
    .unwrap();
    let row = r.rows.iter().find(|row| row.side == "target").unwrap();
    assert_eq!(row.defect_dim, 1);
    assert!(!r.defects_projective);
    assert!(!r.stable_hom_preserved());
    let ker = hom_factorization(&pair.counit(&k).unwrap()).kernel;
    assert!(iso(&ker, &k));
}

/// Short exact sequences `ker -> X -> im` and `im -> Y -> cok` from maps between corpus modules.
fn corpus_sequences(a: &Arc<Algebra>) -> Vec<(ModHom, ModHom)> {
    let mods = standard_modules(a).unwrap();
    let mut out = Vec::new();
    for (_, x) in mods.iter().take(4) {
        for (_, y) in mods.iter().take(4) {
            for f in hom_space(x, y).unwrap().into_iter().take(2) {
                let h = hom_factorization(&f);
                out.push((h.kernel_inclusion.clone(), h.coimage_map.clone()));
                out.push((h.image_inclusion.clone(), h.cokernel_projection.clone()));
            }
        }
    }
    out
}

#[test]
fn functors_are_exact() {
    for name in ["F2-F2[C2]", "A2-A2[x]/x^2"] {
        let e = ext(name);
        let pair = IndRes { ext: e.clone() };
        for (f, g) in corpus_sequences(e.base()) {
            assert!(is_short_exact(&f, &g));
            let (ff, fg) = (pair.left_map(&f).unwrap(), pair.left_map(&g).unwrap());
            assert!(is_short_exact(&ff, &fg), "{name} induction");
        }
        for (f, g) in corpus_sequences(e.total()) {
            let (rf, rg) = (pair.right_map(&f).unwrap(), pair.right_map(&g).unwrap());
            assert!(is_short_exact(&rf, &rg), "{name} restriction");
        }
    }
}

#[test]
fn functors_preserve_projectives() {
    for name in EXTENSION_NAMES {
        let e = ext(name);
        for c in &structural_modules(e.base()).unwrap().classes {
            assert!(
                is_projective_certified(&induce(&e, &c.projective).unwrap()).unwrap(),
                "{name}"
            );
        }
        if name != &"F2-A2" {
            for c in &structural_modules(e.total()).unwrap().classes {
                assert!(
                    is_projective_certified(&restrict(&e, &c.projective).unwrap()).unwrap(),
                    "{name}"
                );
            }
        }
    }
}

#[test]
fn unit_and_counit_are_natural() {
    for name in ["F2-F2[C2]", "A2-A2[x]/x^2", "F2-A2"] {
        let e = ext(name);
        let pair = IndRes { ext: e.clone() };
        let mods = standard_modules(e.base()).unwrap();
        for (_, x) in mods.iter().take(5) {
            for (_, y) in mods.iter().take(5) {
                for a in hom_space(x, y).unwrap() {
                    let gfa = pair.right_map(&pair.left_map(&a).unwrap()).unwrap();
                    let lhs = gfa.matrix() * pair.unit(x).unwrap().matrix();
                    let rhs = pair.unit(y).unwrap().matrix() * a.matrix();
                    assert_eq!(lhs, rhs, "{name} unit");
                }
            }
        }
        let mods = standard_modules(e.total()).unwrap();
        for (_, x) in mods.iter().take(5) {
            for (_, y) in mods.iter().take(5) {
                for b in hom_space(x, y).unwrap() {
                    let fgb = pair.left_map(&pair.right_map(&b).unwrap()).unwrap();
                    let lhs = pair.counit(y).unwrap().matrix() * fgb.matrix();
                    let rhs = b.matrix() * pair.counit(x).unwrap().matrix();
                    assert_eq!(lhs, rhs, "{name} counit");
                }
            }
        }
    }
}

#[test]
fn summand_test() {
    let a = alg("A2");
    let s = structural_modules(&a).unwrap();
    let p0 = &s.classes[0].projective;
    let p1 = &s.classes[1].projective;
    let sum = direct_sum(&a, &[p0, p1]).module;
    assert!(is_summand(p0, &sum).unwrap());
    assert!(is_summand(p1, &sum).unwrap());
    let s1 = non_projective_simple(&a);
    let other = s.classes.iter().find(|c| c.simple.dim() == c.projective.dim()).unwrap();
    assert!(!is_summand(&other.projective, &s1).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn triangles_on_random_modules(seed in 0u64..1000, rank in 1usize..3, rels in 0usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = ext("A2-A2[x]/x^2");
        let x = random_module(e.base(), rank, rels, &mut rng);
        let y = random_module(e.total(), 1, rels, &mut rng);
        let ind = IndRes { ext: e.clone() };
        let coind = ResCoind { ext: e };
        prop_assert!(check_triangles(&ind, &x, &y).unwrap().holds());
        prop_assert!(check_triangles(&coind, &y, &x).unwrap().holds());
    }

    #[test]
    fn projectivity_certificates_agree(seed in 0u64..1000, rank in 1usize..3, rels in 0usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = alg("nakayama");
        let m = random_module(&a, rank, rels, &mut rng);
        is_projective_certified(&m).unwrap();
    }
}
