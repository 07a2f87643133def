use std::path::PathBuf;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::corpus::{named_extension, random_module};

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn parse_field(e: Error) -> (String, String) {
    match e {
        Error::Parse { file, field, .. } => (file, field),
        other => panic!("expected a parse error, got {other}"),
    }
}

#[test]
fn corpus_files_in_sync() {
    let dir = corpus_dir();
    let regenerate = std::env::var("FROBGP_REGENERATE").is_ok_and(|v| v == "1");
    for (name, text) in corpus_files().unwrap() {
        let path = dir.join(&name);
        if regenerate {
            std::fs::write(&path, &text).unwrap();
        }
        let on_disk = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing corpus file {name}"));
        assert_eq!(on_disk, text, "{name} is stale; rerun with FROBGP_REGENERATE=1");
    }
}

#[test]
fn corpus_files_load_back() {
    let dir = corpus_dir();
    let loader = Loader::new();
    for (name, file) in CORPUS_ALGEBRA_FILES {
        let a = loader.algebra(&dir.join(file)).unwrap();
        let b = named_algebra(name).unwrap();
        assert!(a.structurally_equal(&b), "{file}");
        assert_eq!(a.labels(), b.labels());
        assert_eq!(
            a.idempotents().map(|s| s.len()),
            b.idempotents().map(|s| s.len()),
            "{file}"
        );
    }
    for (name, file) in CORPUS_EXTENSION_FILES {
        let e = loader.extension(&dir.join(file)).unwrap();
        let c = named_extension(name).unwrap();
        assert!(e.base().structurally_equal(&c.base), "{file}");
        assert!(e.total().structurally_equal(&c.total), "{file}");
        assert_eq!(e.embedding(), &c.embedding);
    }
    let (s1, p1) = a2_simple_and_cover().unwrap();
    let m = loader.module(&dir.join("a2_s1.mod")).unwrap();
    assert_eq!(m.actions(), s1.actions());
    assert_eq!(loader.module(&dir.join("a2_p1.mod")).unwrap().actions(), p1.actions());
    // One Arc per algebra file.
    let a2 = loader.algebra(&dir.join("a2.alg")).unwrap();
    assert!(Arc::ptr_eq(m.algebra(), &a2));

    for (q, name) in [("a2.quiver", "A2"), ("nakayama.quiver", "nakayama")] {
        let a = loader.algebra(&dir.join(q)).unwrap();
        assert!(a.structurally_equal(&named_algebra(name).unwrap()), "{q}");
    }

    let b = loader.bimodule(&dir.join("morita_column.bimod")).unwrap();
    assert_eq!(b.dim(), crate::corpus::morita_pair().unwrap().bimodule.dim());

    let c = loader.complex(&dir.join("a2_stalk_s1.cpx")).unwrap();
    assert_eq!(c.support(), (0, 0));
    assert_eq!(c.component(0).actions(), s1.actions());
    let k = loader.complex(&dir.join("k_cone.cpx")).unwrap();
    assert_eq!(k.support(), (0, 1));
    assert!(crate::dgcplx::is_contractible(&k).unwrap().is_yes());
    let g = loader.graded(&dir.join("a2_graded.gr")).unwrap();
    assert_eq!(g.support(), (0, 1));
}

#[test]
fn written_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (name, text) in corpus_files().unwrap() {
        write(dir.path(), &name, &text);
    }
    let loader = Loader::new();
    for (_, file) in CORPUS_ALGEBRA_FILES {
        let a = loader.algebra(&dir.path().join(file)).unwrap();
        assert_eq!(
            to_file_text(&algebra_json(&a)),
            std::fs::read_to_string(dir.path().join(file)).unwrap()
        );
    }
}

#[test]
fn corpus_references_and_integers() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(
        dir.path(),
        "s.mod",
        r#"{"algebra": "corpus:F2[x]/x^2", "dim": 1, "action": [[[1]], [[0]]]}"#,
    );
    let m = Loader::new().module(&p).unwrap();
    assert_eq!(m.dim(), 1);
    let inline = write(
        dir.path(),
        "k.mod",
        r#"{"algebra": {"field": {"char": 3}, "basis": ["1"], "table": [[["1"]]], "unit": ["1"]},
            "dim": 2, "action": [[["1", "0"], ["0", "1"]]]}"#,
    );
    assert_eq!(Loader::new().module(&inline).unwrap().dim(), 2);
}

#[test]
fn relation_spellings_agree() {
    let dir = tempfile::tempdir().unwrap();
    let spellings = [r#"["a", "b"]"#, r#"[["a", "b"], "1"]"#, r#"[[["a", "b"], "1"]]"#];
    let mut algebras = Vec::new();
    for (i, rel) in spellings.iter().enumerate() {
        let text =
            format!(r#"{{"vertices": 2, "arrows": [[1, 2, "a"], [2, 1, "b"]], "relations": [{rel}, ["b", "a"]]}}"#);
        let p = write(dir.path(), &format!("q{i}.quiver"), &text);
        algebras.push(Loader::new().algebra(&p).unwrap());
    }
    for a in &algebras[1..] {
        assert!(a.structurally_equal(&algebras[0]));
    }
    // Commutativity relation a b - c d on a square is a two-term relation.
    let square = write(
        dir.path(),
        "square.quiver",
        r#"{"field": {"char": 3}, "vertices": 4,
            "arrows": [[1, 2, "a"], [2, 4, "b"], [1, 3, "c"], [3, 4, "d"]],
            "relations": [[[["a", "b"], "1"], [["c", "d"], "-1"]]]}"#,
    );
    assert_eq!(Loader::new().algebra(&square).unwrap().dim(), 4 + 4 + 1);
}

#[test]
fn malformed_inputs_name_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[(&str, &str, &str)] = &[
        ("bad.alg", "{ not json", "(line 1, column 3)"),
        (
            "nobasis.alg",
            r#"{"field": {"char": 2}, "table": [], "unit": []}"#,
            "basis",
        ),
        (
            "short.alg",
            r#"{"field": {"char": 2}, "basis": ["1", "x"], "table": [[["1","0"],["0","1"]],[["0","1"]]], "unit": ["1","0"]}"#,
            "table[1]",
        ),
        (
            "scalar.alg",
            r#"{"field": {"char": 2}, "basis": ["1"], "table": [[["1/0"]]], "unit": ["1"]}"#,
            "table[0][0][0]",
        ),
        (
            "char.alg",
            r#"{"field": {"char": 4}, "basis": ["1"], "table": [[["1"]]], "unit": ["1"]}"#,
            "field.char",
        ),
        (
            "assoc.alg",
            r#"{"field": {"char": 2}, "basis": ["1"], "table": [[["0"]]], "unit": ["1"]}"#,
            "table",
        ),
        (
            "arrow.quiver",
            r#"{"vertices": 1, "arrows": [[1, 2, "a"]]}"#,
            "arrows[0]",
        ),
        (
            "free.quiver",
            r#"{"vertices": 1, "arrows": [[1, 1, "a"]], "relations": []}"#,
            "relations",
        ),
        (
            "mod.mod",
            r#"{"algebra": "corpus:F2", "dim": 2, "action": [[["1"]]]}"#,
            "action[0]",
        ),
        (
            "missing.mod",
            r#"{"algebra": "nowhere.alg", "dim": 1, "action": []}"#,
            "algebra",
        ),
        (
            "unknown.mod",
            r#"{"algebra": "corpus:nope", "dim": 1, "action": []}"#,
            "algebra",
        ),
        (
            "embed.ext",
            r#"{"base": "corpus:F2[x]/x^2", "total": "corpus:F2[x]/x^2", "embedding": [["1","0"],["0","0"]]}"#,
            "embedding",
        ),
        (
            "support.cpx",
            r#"{"algebra": "corpus:F2", "support": [0, 1], "components": [{"dim": 1, "action": [[["1"]]]}], "differentials": []}"#,
            "components",
        ),
        (
            "dsq.cpx",
            r#"{"algebra": "corpus:F2", "support": [0, 2],
                "components": [{"dim": 1, "action": [[["1"]]]}, {"dim": 1, "action": [[["1"]]]}, {"dim": 1, "action": [[["1"]]]}],
                "differentials": [[["1"]], [["1"]]]}"#,
            "differentials",
        ),
    ];
    for (name, text, field) in cases {
        let p = write(dir.path(), name, text);
        let loader = Loader::new();
        let err = match p.extension().unwrap().to_str().unwrap() {
            "alg" | "quiver" => loader.algebra(&p).map(|_| ()),
            "mod" => loader.module(&p).map(|_| ()),
            "ext" => loader.extension(&p).map(|_| ()),
            "cpx" => loader.complex(&p).map(|_| ()),
            _ => unreachable!(),
        }
        .expect_err(name);
        let (file, f) = parse_field(err);
        assert!(file.ends_with(name), "{file}");
        assert_eq!(&f, field, "{name}");
    }
    assert!(matches!(
        Loader::new().algebra(&dir.path().join("absent.alg")),
        Err(Error::Io(_))
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn module_files_round_trip(seed in any::<u64>(), which in 0usize..4, rank in 1usize..3) {
        let name = ["A2", "F2[C2]", "F3[C3]", "nakayama"][which];
        let a = named_algebra(name).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module(&a, rank, 2, &mut rng);
        let dir = tempfile::tempdir().unwrap();
        let p = write(dir.path(), "m.mod", &to_file_text(&module_json(&m, &format!("corpus:{name}"))));
        let back = Loader::new().module(&p).unwrap();
        prop_assert_eq!(back.actions(), m.actions());
    }
}
