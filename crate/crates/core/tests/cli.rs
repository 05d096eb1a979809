use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bciwb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bciwb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .display()
        .to_string()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p: PathBuf = dir.join(name);
    fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn check_exit_codes() {
    let out = bciwb(&["check", &data("powerset2.table")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["kind"], "check");

    let dir = tempfile::tempdir().unwrap();
    let zero = write(dir.path(), "zero.table", "2\n0\n0 0\n0 0\n");
    let out = bciwb(&["check", &zero]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["bci"], false);
    assert_eq!(v["conditions"]["clause"], 4);
    assert_eq!(v["conditions"]["counterexample"], serde_json::json!([0, 1]));

    let short = write(dir.path(), "short.table", "2\n0\n0 0\n1\n");
    let out = bciwb(&["check", &short]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 4"));
}

#[test]
fn classify_examples() {
    let v = json(&bciwb(&["classify", &data("powerset2.table")]));
    assert_eq!(v["bck"], true);
    assert_eq!(v["p_semisimple"], false);
    let sat = v["fenyves"]["satisfied"].as_array().unwrap();
    for f in ["F5", "F42", "F54"] {
        assert!(sat.iter().any(|s| s == f));
    }

    let v = json(&bciwb(&["classify", &data("z2.table")]));
    assert_eq!(v["associative"], true);
    assert_eq!(v["boolean_group"], true);
    assert_eq!(v["fenyves"]["hex"], "fffffffffffffff");

    let v = json(&bciwb(&["classify", &data("chain2.table")]));
    assert_eq!(v["associative"], false);

    let dir = tempfile::tempdir().unwrap();
    let zero = write(dir.path(), "zero.table", "2\n0\n0 0\n0 0\n");
    assert_eq!(bciwb(&["classify", &zero]).status.code(), Some(1));
}

#[test]
fn holomorph_examples() {
    let out = bciwb(&["holomorph", &data("z3.table")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let subs = v["subgroups"].as_array().unwrap();
    assert_eq!(subs.len(), 2);
    assert_eq!(subs[0]["holomorph_bci"], true);
    assert_eq!(subs[1]["holomorph_bci"], false);
    assert_eq!(
        subs[1]["theorem9"]["condition"]["counterexample"],
        serde_json::json!([0, 0, 1, 0, 1])
    );

    let dir = tempfile::tempdir().unwrap();
    let out = bciwb(&[
        "holomorph",
        &data("powerset2.table"),
        "--subgroups",
        "trivial",
        "--emit-table",
        &dir.path().display().to_string(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["subgroups"][0]["theorem10"]["diagonal_isomorphic"], true);
    let text = fs::read_to_string(dir.path().join("holomorph-0.table")).unwrap();
    assert!(text.starts_with("# holomorph of an order-4 base by 1 automorphism(s)\n"));
    let h = bci_workbench::tablefile::parse_table(&text).unwrap();
    assert_eq!(
        h.table(),
        bci_workbench::FiniteAlgebra::powerset(2).unwrap().table()
    );

    let out = bciwb(&[
        "holomorph",
        &data("chain2.table"),
        "--subgroups",
        "[swap(0,1)]",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_examples() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("corpus");
    let out = bciwb(&["enumerate", "2", "--out", &out_dir.display().to_string()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["count"], 2);
    let manifest = fs::read_to_string(out_dir.join("MANIFEST")).unwrap();
    assert_eq!(manifest.lines().count(), 3);
    assert_eq!(fs::read_dir(&out_dir).unwrap().count(), 3);

    assert_eq!(json(&bciwb(&["enumerate", "1"]))["count"], 1);
    assert_eq!(bciwb(&["enumerate", "7"]).status.code(), Some(2));
    assert_eq!(bciwb(&["enumerate", "5"]).status.code(), Some(2));
    let v = json(&bciwb(&["enumerate", "3", "--require", "bck"]));
    assert_eq!(v["count"], 3);
}

#[test]
fn verify_theorems_examples() {
    let out = bciwb(&["verify-theorems", "--order-max", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["kind"], "theorem_matrix");
    assert!(v["rows"].as_array().unwrap().iter().all(|r| r["fail"] == 0));

    assert_eq!(bciwb(&["verify-theorems"]).status.code(), Some(0));
    assert_eq!(
        bciwb(&["verify-theorems", "--order-max", "12"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        bciwb(&["verify-theorems", "--order-max", "5"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn reports_are_byte_stable() {
    let a = bciwb(&["verify-theorems", "--order-max", "3"]);
    let b = bciwb(&["verify-theorems", "--order-max", "3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn catalog_lists_sixty() {
    let out = bciwb(&["catalog"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 60);
    assert!(text
        .lines()
        .any(|l| l.starts_with("F2 ") && l.ends_with("Moufang identity")));
    let v = json(&bciwb(&["catalog", "--json"]));
    assert_eq!(v["identities"].as_array().unwrap().len(), 60);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(bciwb(&[]).status.code(), Some(2));
    assert_eq!(bciwb(&["check"]).status.code(), Some(2));
    assert_eq!(
        bciwb(&["check", "/nonexistent/file"]).status.code(),
        Some(2)
    );
}
