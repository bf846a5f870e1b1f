use std::path::Path;
use std::process::{Command, Output};

use multfree_core::{pieri_tensor, FormalSum, IrrepLabel, Partition, SweepRow, Verdict};
use serde_json::Value;

fn run_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_multfree"))
        .args(args)
        .current_dir(dir)
        .env_remove("MULTFREE_CACHE")
        .output()
        .expect("binary runs")
}

fn run(args: &[&str]) -> Output {
    let dir = tempfile::tempdir().unwrap();
    let mut full = vec!["--no-cache"];
    full.extend_from_slice(args);
    run_in(dir.path(), &full)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn first_line(o: &Output) -> String {
    stdout(o).lines().next().unwrap_or_default().to_string()
}

#[test]
fn pieri_command() {
    let o = run(&["pieri", "1", "--s", "1", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(first_line(&o), "(2) + (1,1) + ()");
    assert_eq!(first_line(&run(&["pieri", "2", "1", "--s", "0", "--n", "3"])), "(2,1)");

    let o = run(&["pieri", "2", "1", "--s", "2", "--n", "2", "--json"]);
    let got: FormalSum<IrrepLabel> = serde_json::from_str(&stdout(&o)).unwrap();
    let eta = Partition::new(vec![2, 1]).unwrap();
    let want = pieri_tensor(&eta, 2, 2).unwrap().terms.map(|p| IrrepLabel::sp_partition(2, p).unwrap());
    assert_eq!(got, want);
    assert_eq!(got, multfree_core::decompose_product(&[IrrepLabel::sp(2, &[2, 1]).unwrap(), IrrepLabel::sp(2, &[2]).unwrap()]).unwrap());

    assert_eq!(run(&["pieri", "1", "2", "--s", "1", "--n", "2"]).status.code(), Some(2));
    assert_eq!(run(&["pieri", "1", "-1", "--s", "1", "--n", "2"]).status.code(), Some(2));
}

#[test]
fn tensor_command() {
    assert_eq!(first_line(&run(&["tensor", "sp", "2", "--", "1", "--", "1"])), "(2) + (1,1) + ()");
    assert_eq!(first_line(&run(&["tensor", "su", "2", "--", "1", "--", "1"])), "ν2 + ν0");
    assert_eq!(first_line(&run(&["tensor", "u", "2", "--", "1,0", "--", "1,0"])), "(2,0) + (1,1)");
    assert_eq!(
        first_line(&run(&["tensor", "sp", "2", "--oracle-only", "--", "2,1", "--", "2"])),
        first_line(&run(&["tensor", "sp", "2", "--", "2,1", "--", "2"]))
    );
    assert_eq!(first_line(&run(&["tensor", "sp", "2", "--", "2,1", "--", "2"])), "(4,1) + (3,2) + (3) + 2·(2,1) + (1)");
    assert_eq!(run(&["tensor", "sp", "2", "--", "1,1,1", "--", "1"]).status.code(), Some(2));
    assert_eq!(run(&["tensor", "u", "2", "--", "0,1", "--", "1"]).status.code(), Some(2));
    assert_eq!(run(&["tensor", "xx", "2", "--", "1"]).status.code(), Some(2));
}

#[test]
fn classify_command() {
    let o = run(&["classify", "I", "--n", "2", "--tau", "su2=1,sp=1", "--degree", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(first_line(&o).starts_with("MULTIPLICITY at (χ1; η(1)) — NOT commutative"), "{}", stdout(&o));

    let o = run(&["classify", "I", "--n", "2", "--tau", "sp=1,1", "--degree", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let line = first_line(&o);
    assert!(line.starts_with("multiplicity-free up to degree 6 — commutative"), "{line}");
    assert!(line.contains("degree 6"));

    let o = run(&["classify", "IX", "--n", "1", "--tau", "u=3", "--degree", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(first_line(&o).contains("commutative"));
    assert!(!first_line(&o).contains("NOT"));
}

#[test]
fn classify_witness_routes() {
    let o = run(&["classify", "I", "--n", "2", "--tau", "su2=1,sp=1", "--witness"]);
    let text = stdout(&o);
    assert!(text.contains("[s=0, i=0]"), "{text}");
    assert!(text.contains("[s=2, i=1]"), "{text}");
}

#[test]
fn exit_codes() {
    // expected non-commutative, no repetition at degree 0
    let o = run(&["classify", "I", "--n", "2", "--tau", "su2=1,sp=1", "--degree", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("INCONCLUSIVE"));
    // repetition where the classification expects commutativity
    let o = run(&["classify", "VII", "--k", "2", "--n", "1", "--tau", "u=1,0", "--degree", "5"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(first_line(&o).starts_with("MULTIPLICITY at (χ0; υ(2,1); η())"));
    for bad in [
        vec!["classify", "I", "--tau", "sp=1"],
        vec!["classify", "I", "--n", "2", "--tau", "nope=1"],
        vec!["classify", "I", "--n", "2", "--tau", "sp=1,2"],
        vec!["classify", "X", "--n", "2"],
        vec!["classify", "V", "--n", "2"],
        vec!["classify", "VIII", "--m", "2"],
    ] {
        assert_eq!(run(&bad).status.code(), Some(2), "{bad:?}");
    }
}

#[test]
fn verify_command() {
    let o = run(&["verify-theorem1", "--bound", "0", "--degree", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows: Vec<SweepRow> = serde_json::from_value(v["rows"].clone()).unwrap();
    assert!(!rows.is_empty());
    for r in &rows {
        assert!(r.tau.is_trivial());
        assert_eq!(r.verdict, Verdict::MultiplicityFreeUpTo { degree: 2 });
    }

    let o = run(&["verify-theorem1", "--bound", "2", "--degree", "6", "--cases", "IX", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows: Vec<SweepRow> = serde_json::from_value(v["rows"].clone()).unwrap();
    assert!(rows.iter().all(|r| !r.verdict.is_multiplicity_found()));

    // Case VII with k = 2 repeats υ-labels inside υ(r) ⊗ υ(s) ⊗ υ.
    let o = run(&["verify-theorem1", "--bound", "2", "--degree", "6", "--cases", "I,IV,VII", "--json"]);
    assert_eq!(o.status.code(), Some(3));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows: Vec<SweepRow> = serde_json::from_value(v["rows"].clone()).unwrap();
    for r in &rows {
        let k2 = matches!(r.params, multfree_core::CaseSpec::VII { k: 2, .. });
        let expected_free = r.expected.outcome == multfree_core::Expectation::Commutative;
        let one_dim = r.tau.labels().iter().all(|l| l.dimension() == 1.into());
        let bad = r.consistency != multfree_core::Consistency::Consistent;
        assert_eq!(bad, k2 && expected_free && !one_dim, "{} {}", r.params, r.tau);
    }
    assert_eq!(v["summary"]["inconsistent"], 10);
    assert_eq!(v["summary"]["inconclusive"], 0);
}

fn strings(v: &Value, out: &mut Vec<String>) {
    match v {
        Value::String(s) => out.push(s.clone()),
        Value::Array(a) => a.iter().for_each(|x| strings(x, out)),
        Value::Object(m) => m.values().for_each(|x| strings(x, out)),
        _ => {}
    }
}

#[test]
fn json_has_no_prose_and_round_trips() {
    let cases: [&[&str]; 3] = [
        &["classify", "I", "--n", "2", "--tau", "su2=1,sp=1", "--json"],
        &["classify", "VIII", "--m", "3", "--blocks", "1:1", "--tau", "s1_1=2,u_1=1", "--degree", "3", "--json"],
        &["verify-theorem1", "--bound", "1", "--degree", "3", "--cases", "II,III", "--json"],
    ];
    for args in cases {
        let o = run(args);
        let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        let mut s = Vec::new();
        strings(&v, &mut s);
        assert!(s.iter().all(|x| !x.contains(' ')), "{args:?}: {s:?}");
    }
    let o = run(cases[0]);
    let row: SweepRow = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(serde_json::to_string(&row).unwrap(), stdout(&o).trim_end());
}

#[test]
fn cache_does_not_change_output() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.json");
    let c = cache.to_str().unwrap();
    let args = ["classify", "VII", "--k", "2", "--n", "1", "--tau", "su2=1,u=1,sp=1", "--degree", "4", "--json"];
    let cold = run_in(dir.path(), &[&["--no-cache"], &args[..]].concat());
    let first = run_in(dir.path(), &[&["--cache", c], &args[..]].concat());
    let warm = run_in(dir.path(), &[&["--cache", c], &args[..]].concat());
    assert_eq!(cold.stdout, first.stdout);
    assert_eq!(cold.stdout, warm.stdout);
    let file: Value = serde_json::from_str(&std::fs::read_to_string(&cache).unwrap()).unwrap();
    assert_eq!(file["schema"], 1);
    assert!(!file["products"].as_array().unwrap().is_empty());

    // a stale schema is ignored
    std::fs::write(&cache, r#"{"schema":0,"products":[{"bogus":true}]}"#).unwrap();
    let stale = run_in(dir.path(), &[&["--cache", c], &args[..]].concat());
    assert_eq!(stale.stdout, cold.stdout);
    assert_eq!(stale.status.code(), cold.status.code());
}

#[test]
fn cache_location_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["tensor", "sp", "2", "--", "1", "--", "1,1"];
    run_in(dir.path(), &args);
    assert!(dir.path().join(".multfree-cache.json").exists());

    let env_path = dir.path().join("env.json");
    let o = Command::new(env!("CARGO_BIN_EXE_multfree"))
        .args(args)
        .current_dir(dir.path())
        .env("MULTFREE_CACHE", &env_path)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(env_path.exists());

    let flag_path = dir.path().join("flag.json");
    let o = Command::new(env!("CARGO_BIN_EXE_multfree"))
        .args(["--cache", flag_path.to_str().unwrap()])
        .args(args)
        .current_dir(dir.path())
        .env("MULTFREE_CACHE", dir.path().join("unused.json"))
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(flag_path.exists());
    assert!(!dir.path().join("unused.json").exists());
}

#[test]
fn config_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    std::fs::write(&cfg, r#"{"degree": 3, "cache": "from-config.json", "threads": 2}"#).unwrap();
    let c = cfg.to_str().unwrap();
    let o = run_in(dir.path(), &["--config", c, "classify", "I", "--n", "2", "--tau", "sp=1,1", "--json"]);
    let row: SweepRow = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(row.verdict, Verdict::MultiplicityFreeUpTo { degree: 3 });
    assert!(dir.path().join("from-config.json").exists());

    let o = run_in(dir.path(), &["--config", c, "--no-cache", "classify", "I", "--n", "2", "--tau", "sp=1,1", "--degree", "5", "--json"]);
    let row: SweepRow = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(row.verdict, Verdict::MultiplicityFreeUpTo { degree: 5 });

    std::fs::write(&cfg, r#"{"depth": 3}"#).unwrap();
    assert_eq!(run_in(dir.path(), &["--config", c, "pieri", "--s", "1", "--n", "1"]).status.code(), Some(2));
}

#[test]
fn series_command() {
    let o = run(&["series", "I", "--n", "2", "--degree", "2"]);
    assert_eq!(first_line(&o), "(χ2; η(2)) + (χ1; η(1)) + (χ0; η())");
    let o = run(&["series", "IV", "--n", "2", "--degree", "1", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["truncated_at"], 1);
    assert_eq!(v["terms"].as_array().unwrap().len(), 3);
}
