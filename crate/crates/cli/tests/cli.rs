//! End-to-end runs of the `leibniz` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use leibniz::format::{parse_table, serialize_table};
use leibniz_core::{int, AlgebraTable};
use proptest::prelude::*;
use tempfile::TempDir;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_leibniz"));
    c.env_remove("LEIBNIZ_SAMPLE_SEED");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

/// Build a catalog table into `dir` and return its path.
fn built(dir: &Path, name: &str, args: &[&str]) -> PathBuf {
    let p = dir.join(name);
    let mut full = vec!["catalog", "build"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", p.to_str().unwrap()]);
    let o = run(&full);
    assert_eq!(code(&o), 0, "{}{}", stdout(&o), String::from_utf8_lossy(&o.stderr));
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn nilradical_satisfies_both_identities() {
    let d = TempDir::new().unwrap();
    let f = built(d.path(), "l4_5.json", &["l4", "--n", "5"]);
    let o = run(&["check", s(&f), "both"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS  right Leibniz identity"));
    assert!(stdout(&o).contains("PASS  left Leibniz identity"));
}

#[test]
fn right_family_fails_left_identity_with_witness() {
    let d = TempDir::new().unwrap();
    let f = built(d.path(), "g62.json", &["g_6_2", "--param", "b=1"]);
    assert_eq!(code(&run(&["check", s(&f), "right"])), 0);
    let o = run(&["check", s(&f), "left"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("FAIL"));
    assert!(stdout(&o).contains("defect"), "{}", stdout(&o));
}

#[test]
fn abelian_algebra_is_lie_and_central() {
    let d = TempDir::new().unwrap();
    let f = write(d.path(), "z3.json", r#"{"dim":3,"field":"Q","brackets":[]}"#);
    assert_eq!(code(&run(&["check", s(&f), "lie"])), 0);
    assert_eq!(code(&run(&["check", s(&f), "assoc"])), 0);
    let o = run(&["analyze", s(&f), "center"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("center dim 3"));
}

#[test]
fn nilradical_is_not_lie() {
    let d = TempDir::new().unwrap();
    let f = built(d.path(), "l4_4.json", &["l4", "--n", "4"]);
    assert_eq!(code(&run(&["check", s(&f), "lie"])), 1);
    assert_eq!(code(&run(&["check", s(&f), "assoc"])), 0);
    let g = built(d.path(), "l4_6.json", &["l4", "--n", "6"]);
    assert_eq!(code(&run(&["check", s(&g), "assoc"])), 1);
}

#[test]
fn parameter_conditions() {
    let d = TempDir::new().unwrap();
    let f = built(d.path(), "g55.json", &["g_5_5", "--param", "a=2", "b=1"]);
    assert_eq!(code(&run(&["check", s(&f), "right"])), 0);
    assert_eq!(code(&run(&["check", s(&f), "left"])), 1);
    // b = -1 also satisfies the left identity
    let g = built(d.path(), "g55b.json", &["g_5_5", "--param", "a=2", "b=-1"]);
    assert_eq!(code(&run(&["check", s(&g), "both"])), 0);
    let o = run(&["catalog", "build", "g_5_5", "--param", "a=1", "b=-1"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("FAIL"));
    // missing, unknown and malformed parameters are usage errors
    assert_eq!(code(&run(&["catalog", "build", "g_5_5", "--param", "a=2"])), 2);
    assert_eq!(code(&run(&["catalog", "build", "g_5_5", "--param", "a=2", "b=1", "z=3"])), 2);
    assert_eq!(code(&run(&["catalog", "build", "g_5_5", "--param", "a=x", "b=1"])), 2);
    assert_eq!(code(&run(&["catalog", "build", "nope"])), 2);
    assert_eq!(code(&run(&["catalog", "build", "g_n1_1", "--param", "a=1"])), 2);
}

#[test]
fn epsilon_alias_and_flags() {
    let d = TempDir::new().unwrap();
    let a = built(d.path(), "a.json", &["g_n1_4", "--n", "5", "--param", "d=1", "f=0", "ε=1"]);
    let b = built(d.path(), "b.json", &["g_n1_4", "--n", "5", "--param", "d=1", "f=0", "eps=1"]);
    assert_eq!(std::fs::read_to_string(a).unwrap(), std::fs::read_to_string(b).unwrap());
    let o = run(&["catalog", "build", "g_n1_4", "--n", "5", "--param", "d=1", "f=0", "eps=2"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn listing_by_side_and_codimension() {
    let o = run(&["catalog", "list", "--side", "right", "--codim", "1"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("g_")).count(), 8);
    assert!(out.contains("8 families"));
    let o = run(&["catalog", "list", "--side", "left", "--codim", "2"]);
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("l_")).count(), 4);
    let o = run(&["catalog", "list", "--side", "right", "--codim", "1", "--n", "5"]);
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("g_")).count(), 4);
    let o = run(&["catalog", "list", "--codim", "3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("0 families"), "{}", stdout(&o));
}

#[test]
fn series_of_l4_6() {
    let d = TempDir::new().unwrap();
    let f = built(d.path(), "l4_6.json", &["l4", "--n", "6"]);
    let o = run(&["analyze", s(&f), "series"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("DS=[6,4,0]"), "{out}");
    assert!(out.contains("LS=[6,4,2,1,0]"), "{out}");
}

#[test]
fn analyses_of_an_extension() {
    let d = TempDir::new().unwrap();
    let f = built(d.path(), "g57.json", &["g_5_7", "--param", "a=2", "d=1", "f=0", "eps=0"]);
    let o = run(&["analyze", s(&f), "nilradical", "--n", "4"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let e = d.path().join("g57e.json");
    let o = run(&["catalog", "build", "g_5_7", "--param", "a=2", "d=1", "f=0", "eps=0", "--extension", "--out", s(&e)]);
    assert_eq!(code(&o), 0);
    // extension documents carry n themselves
    assert_eq!(code(&run(&["analyze", s(&e), "nilradical"])), 0);
    assert_eq!(code(&run(&["analyze", s(&e), "conditions"])), 0);
    assert_eq!(code(&run(&["check", s(&e), "both"])), 0);
    for what in ["derive", "fingerprint", "series", "center"] {
        assert_eq!(code(&run(&["analyze", s(&f), what])), 0, "{what}");
    }
}

#[test]
fn transformation_round_trip() {
    let d = TempDir::new().unwrap();
    let f = built(d.path(), "g55.json", &["g_5_5", "--param", "a=2", "b=1"]);
    let id = write(
        d.path(),
        "id.json",
        r#"{"dim":5,"matrix":[["1","0","0","0","0"],["0","1","0","0","0"],["0","0","1","0","0"],["0","0","0","1","0"],["0","0","0","0","1"]]}"#,
    );
    let o = run(&["transform", s(&f), "--matrix", s(&id), "--expect", s(&f)]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    // rescaling e5 changes the table
    let half = write(
        d.path(),
        "half.json",
        r#"{"dim":5,"matrix":[["1","0","0","0","0"],["0","1","0","0","0"],["0","0","1","0","0"],["0","0","0","1","0"],["0","0","0","0","1/2"]]}"#,
    );
    let out = d.path().join("out.json");
    assert_eq!(code(&run(&["transform", s(&f), "--matrix", s(&half), "--expect", s(&f)])), 1);
    assert_eq!(code(&run(&["transform", s(&f), "--matrix", s(&half), "--out", s(&out)])), 0);
    let two = write(
        d.path(),
        "two.json",
        r#"{"dim":5,"matrix":[["1","0","0","0","0"],["0","1","0","0","0"],["0","0","1","0","0"],["0","0","0","1","0"],["0","0","0","0","2"]]}"#,
    );
    assert_eq!(code(&run(&["transform", s(&out), "--matrix", s(&two), "--expect", s(&f)])), 0);
    let singular = write(d.path(), "sing.json", r#"{"dim":5,"matrix":[["1","0","0","0","0"],["0","1","0","0","0"],["0","0","1","0","0"],["0","0","0","1","0"],["0","0","0","0","0"]]}"#);
    assert_eq!(code(&run(&["transform", s(&f), "--matrix", s(&singular)])), 1);
    let wrong = write(d.path(), "wrong.json", r#"{"dim":2,"matrix":[["1","0"],["0","1"]]}"#);
    assert_eq!(code(&run(&["transform", s(&f), "--matrix", s(&wrong)])), 2);
}

#[test]
fn malformed_input_exits_2() {
    let d = TempDir::new().unwrap();
    let cases = [
        ("trunc.json", r#"{"dim":3"#),
        ("field.json", r#"{"dim":2,"field":"R","brackets":[]}"#),
        ("index.json", r#"{"dim":2,"field":"Q","brackets":[{"left":1,"right":3,"out":{"1":"1"}}]}"#),
        ("rat.json", r#"{"dim":2,"field":"Q","brackets":[{"left":1,"right":1,"out":{"2":"1/0"}}]}"#),
        ("dup.json", r#"{"dim":2,"field":"Q","brackets":[{"left":1,"right":1,"out":{"2":"1"}},{"left":1,"right":1,"out":{"2":"2"}}]}"#),
        ("zero.json", r#"{"dim":2,"field":"Q","brackets":[{"left":1,"right":1,"out":{"2":"0"}}]}"#),
    ];
    for (name, text) in cases {
        let f = write(d.path(), name, text);
        let o = run(&["check", s(&f), "both"]);
        assert_eq!(code(&o), 2, "{name}: {}", stdout(&o));
        assert!(!o.stderr.is_empty(), "{name}");
    }
    assert_eq!(code(&run(&["check", "/nonexistent/x.json", "both"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
}

#[test]
fn json_and_text_verdicts_agree() {
    let d = TempDir::new().unwrap();
    let f = built(d.path(), "g62.json", &["g_6_2", "--param", "b=1"]);
    for kind in ["right", "left", "both", "lie", "assoc"] {
        let text = run(&["check", s(&f), kind]);
        let json = run(&["--json", "check", s(&f), kind]);
        assert_eq!(code(&text), code(&json), "{kind}");
        let v: serde_json::Value = serde_json::from_slice(&json.stdout).expect("valid JSON");
        assert_eq!(v["exit_code"], code(&json));
        let text_out = stdout(&text);
        for c in v["checks"].as_array().unwrap() {
            let tag = if c["passed"].as_bool().unwrap() { "PASS" } else { "FAIL" };
            assert!(text_out.contains(&format!("{tag}  {}", c["name"].as_str().unwrap())), "{kind}");
        }
    }
}

#[test]
fn verify_single_suite() {
    let o = run(&["verify-paper", "--suite", "l4"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains(" 0 failed"));
    assert_eq!(code(&run(&["verify-paper", "--suite", "bogus"])), 2);
}

#[test]
fn verify_everything_within_a_minute() {
    let start = Instant::now();
    let o = run(&["--json", "verify-paper", "--suite", "all"]);
    assert!(start.elapsed() < Duration::from_secs(60));
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["failed"], 0);
    assert!(v["checks"].as_array().unwrap().len() > 100);
}

#[test]
fn sample_seed_override() {
    let o = bin().env("LEIBNIZ_SAMPLE_SEED", "7").args(["verify-paper", "--suite", "right-codim1"]).output().unwrap();
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let o = bin().env("LEIBNIZ_SAMPLE_SEED", "7").args(["verify-paper", "--suite", "conditions"]).output().unwrap();
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let o = bin().env("LEIBNIZ_SAMPLE_SEED", "seven").args(["verify-paper", "--suite", "l4"]).output().unwrap();
    assert_eq!(code(&o), 2);
}

#[test]
fn build_without_out_prints_a_parseable_document() {
    let o = run(&["catalog", "build", "l4", "--n", "7"]);
    assert_eq!(code(&o), 0);
    let t = parse_table(&stdout(&o)).unwrap();
    assert_eq!(t, leibniz_core::catalog::build_l4(7).unwrap());
}

fn arb_table() -> impl Strategy<Value = AlgebraTable> {
    (1usize..=5).prop_flat_map(|n| {
        proptest::collection::vec((1..=n, 1..=n, 1..=n, -6i64..=6, 1i64..=4), 0..12).prop_map(move |terms| {
            let mut t = AlgebraTable::new(n);
            for (i, j, k, p, q) in terms {
                t.add_term(i, j, k, &(int(p) / int(q))).unwrap();
            }
            t
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn serialisation_round_trips(t in arb_table()) {
        let text = serialize_table(&t);
        let back = parse_table(&text).unwrap();
        prop_assert_eq!(&back, &t);
        prop_assert_eq!(serialize_table(&back), text);
    }
}
