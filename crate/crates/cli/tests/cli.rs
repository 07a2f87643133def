use std::path::PathBuf;
use std::process::{Command, Output};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn frobgp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_frobgp"))
        .args(args)
        .current_dir(root())
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn profile_of_a2() {
    let o = frobgp(&["profile", "corpus/a2.alg"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "spdi=1 sidp=1 gorensteinDim=1\n");
    let o = frobgp(&["profile", "corpus:F2[x]/x^3"]);
    assert_eq!(stdout(&o), "spdi=0 sidp=0 gorensteinDim=0\n");
}

#[test]
fn quiver_and_table_files_agree() {
    let a = frobgp(&["algebra-info", "corpus/a2.alg"]);
    let q = frobgp(&["algebra-info", "corpus/a2.quiver"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&q));
}

#[test]
fn malformed_algebra_names_file_and_field() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.alg");
    std::fs::write(
        &p,
        r#"{"field": {"char": 2}, "basis": ["1"], "table": [[["1", "0"]]], "unit": ["1"]}"#,
    )
    .unwrap();
    let o = frobgp(&["profile", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("bad.alg") && err.contains("table[0][0]"), "{err}");
}

#[test]
fn missing_file_and_wrong_kind_are_input_errors() {
    assert_eq!(frobgp(&["gpd", "corpus/nope.mod"]).status.code(), Some(2));
    let o = frobgp(&["frobenius-verify", "corpus/a2.alg"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("a2.alg"));
    assert_eq!(frobgp(&["transfer-check", "corpus/f2_a2.ext"]).status.code(), Some(2));
}

#[test]
fn bound_must_be_positive() {
    assert_eq!(
        frobgp(&["--bound", "0", "profile", "corpus/a2.alg"]).status.code(),
        Some(2)
    );
    // A bound of n certifies dimensions below n only.
    let o = frobgp(&["profile", "corpus/a2.alg", "--bound", "1"]);
    assert_eq!(stdout(&o), "spdi=>=1 sidp=>=1 gorensteinDim=none\n");
    let o = frobgp(&["profile", "corpus/a2.alg", "--bound", "2"]);
    assert_eq!(stdout(&o), "spdi=1 sidp=1 gorensteinDim=1\n");
}

#[test]
fn transfer_table_for_truncated_a2() {
    let o = frobgp(&["transfer-check", "corpus/a2_trunc.ext"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.starts_with("module"));
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert!(rows.len() >= 8);
    assert!(rows.iter().all(|r| r.ends_with("yes")));
    assert!(rows.iter().any(|r| r.split_whitespace().rev().nth(1) == Some("1")));
}

#[test]
fn module_dimensions() {
    let o = frobgp(&["gpd", "corpus/a2_s1.mod"]);
    assert_eq!(stdout(&o), "gpd=1 pd=1\n");
    let o = frobgp(&["gpd", "corpus/a2_p1.mod"]);
    assert_eq!(stdout(&o), "gpd=0 pd=0\n");
    let o = frobgp(&["totalize", "corpus/a2_s1.mod"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("gpd=1\n"));
    let o = frobgp(&["resolve", "corpus/f2_c2_trivial.mod", "--bound", "3"]);
    assert_eq!(stdout(&o).lines().count(), 1 + 4);
}

#[test]
fn frobenius_verdicts() {
    for (file, verdict) in [
        ("corpus/f2_c2.ext", "yes"),
        ("corpus/identity_a2.ext", "yes"),
        ("corpus/f2_a2.ext", "no"),
        ("corpus/morita_column.bimod", "yes"),
    ] {
        let o = frobgp(&["frobenius-verify", file]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).starts_with(&format!("verdict={verdict} ")), "{file}");
    }
}

#[test]
fn property_failures_exit_one() {
    let o = frobgp(&["triequiv-check", "corpus/f2_c2.ext"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("unit-and-counit-defects-projective"));
    assert_eq!(
        frobgp(&["triequiv-check", "corpus/morita_column.bimod"]).status.code(),
        Some(0)
    );
}

#[test]
fn counterexample_and_complexes() {
    let o = frobgp(&[
        "counterexample-product",
        "corpus/f2.alg",
        "corpus/a2.alg",
        "corpus/a2_s1.mod",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("projectedGp=yes moduleGp=no"));
    let o = frobgp(&[
        "counterexample-product",
        "corpus/f2.alg",
        "corpus/a2.alg",
        "corpus/a2_p1.mod",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = frobgp(&[
        "complex-check",
        "corpus/a2_stalk_s1.cpx",
        "corpus/k_cone.cpx",
        "corpus/a2_graded.gr",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("corpus/k_cone.cpx       [0,1]    yes"));
}

#[test]
fn formats_and_reproducibility() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let o = frobgp(&[
            "transfer-check",
            "corpus/f2_trunc3.ext",
            "--format",
            "json",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
        assert!(o.stdout.is_empty());
    }
    let ta = std::fs::read(&a).unwrap();
    assert_eq!(ta, std::fs::read(&b).unwrap());
    let v: serde_json::Value = serde_json::from_slice(&ta).unwrap();
    assert_eq!(v["command"], "transfer-check");
    assert_eq!(v["passed"], true);

    let o = frobgp(&["glgdim-check", "corpus/f3_c3.ext", "--format", "csv"]);
    assert_eq!(stdout(&o), "base,total,equal\n0,0,yes\n");
}

#[test]
fn suite_passes_and_is_deterministic() {
    let first = frobgp(&["suite"]);
    assert_eq!(first.status.code(), Some(0), "{}", stdout(&first));
    let lines: Vec<String> = stdout(&first).lines().map(str::to_string).collect();
    assert_eq!(lines.len(), 10);
    assert!(lines[1..].iter().all(|l| l.contains("PASS")));
    let second = frobgp(&["suite"]);
    assert_eq!(first.stdout, second.stdout);
}
