use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    let p: PathBuf = Path::new(env!("CARGO_MANIFEST_DIR")).join(format!("../core/fixtures/{name}.txt"));
    p.to_str().unwrap().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tricyclic")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn check_reports() {
    let out = run(&["check", &fixture("W4")]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["three_cyclic"], true);
    assert!(r["diwheel"].is_object());
    assert_eq!(r["annular"], false);
    assert_eq!(r["annular_reason"]["kind"], "diwheel");
    assert_eq!(r["arc_count_identity"]["holds"], false);
    assert_eq!(r["strongly_2connected"], false);

    let r = json(&run(&["check", &fixture("C6")]));
    assert_eq!(r["three_cyclic"], false);
    assert_eq!(r["certificate"]["kind"], "long_cycle");
    assert_eq!(r["ring"]["parts"].as_array().unwrap().len(), 3);

    let r = json(&run(&["check", &fixture("FAN2"), "--l", "2"]));
    assert!(r["ring"].is_null());
    assert_eq!(r["ring_witness"].as_array().unwrap().len(), 3);
}

#[test]
fn check_many_files_in_order() {
    let files = [fixture("T3"), fixture("B1"), fixture("C2"), fixture("GLUE6")];
    let mut args = vec!["--jobs", "3", "check"];
    args.extend(files.iter().map(String::as_str));
    let r = json(&run(&args));
    let names: Vec<&str> = r.as_array().unwrap().iter().map(|x| x["file"].as_str().unwrap()).collect();
    assert_eq!(names, files.iter().map(String::as_str).collect::<Vec<_>>());
    assert_eq!(r[1]["annular"], false);
    assert_eq!(r[3]["annular"], true);
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "a b\nc\n").unwrap();
    let out = run(&["check", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(run(&["decompose", "/nonexistent/file"]).status.code(), Some(2));
    assert_eq!(run(&["generate", "--kind", "safe", "--n", "2"]).status.code(), Some(2));
}

#[test]
fn negative_verdicts_exit_one() {
    let out = run(&["weight", &fixture("DC3"), "--zero-one"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["k"], 3);
    assert!(!out.stderr.is_empty());
    let out = run(&["draw", &fixture("B1")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("brancher"));
    assert_eq!(run(&["decompose", &fixture("C6")]).status.code(), Some(1));
    assert_eq!(run(&["build", &fixture("W4")]).status.code(), Some(1));
}

#[test]
fn artifacts_validate_when_fed_back() {
    let dir = tempfile::tempdir().unwrap();
    let at = |name: &str| dir.path().join(name).to_str().unwrap().to_string();
    let cases = [
        ("GLUE6", vec!["decompose"], "tree"),
        ("FAN4", vec!["build", "--replay"], "script"),
        ("FAN2", vec!["draw"], "drawing"),
        ("W4", vec!["weight"], "weighting"),
        ("C6", vec!["weight", "--integer"], "weighting"),
        ("B2", vec!["weight", "--zero-one"], "weighting"),
        ("DC4", vec!["weight"], "obstruction"),
    ];
    for (name, cmd, kind) in cases {
        let file = fixture(name);
        let out_path = at(&format!("{name}-{kind}.json"));
        let mut args = cmd.clone();
        args.extend([file.as_str(), "--output", out_path.as_str()]);
        run(&args);
        let out = run(&["validate", &file, "--kind", kind, &out_path]);
        assert_eq!(out.status.code(), Some(0), "{name} {kind}: {}", String::from_utf8_lossy(&out.stderr));
    }
    let cert = at("cert.json");
    let report = json(&run(&["check", &fixture("C6")]));
    std::fs::write(&cert, report["certificate"].to_string()).unwrap();
    assert_eq!(run(&["validate", &fixture("C6"), "--kind", "certificate", &cert]).status.code(), Some(0));
    assert_eq!(run(&["validate", &fixture("T3"), "--kind", "certificate", &cert]).status.code(), Some(1));
}

#[test]
fn drawing_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("g.svg");
    let out = run(&["draw", &fixture("GLUE6"), "--svg", svg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<?xml") && text.contains("<svg"));
    assert_eq!(json(&out)["ring"]["l"], 3);
}

#[test]
fn generation_is_seeded() {
    let a = run(&["generate", "--kind", "safe", "--n", "10", "--seed", "1"]);
    let b = run(&["generate", "--kind", "safe", "--n", "10", "--seed", "1"]);
    let c = run(&["generate", "--kind", "safe", "--n", "10", "--seed", "2"]);
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
    assert_eq!(String::from_utf8_lossy(&a.stdout).lines().count(), 17);
}

#[test]
fn oracle_lists_cycles() {
    let r = json(&run(&["oracle", &fixture("DC3")]));
    assert_eq!(r["cycles"].as_array().unwrap().len(), 5);
    assert_eq!(r["l_cyclic"], false);
    assert_eq!(r["weightable"], false);
    let out = run(&["oracle", &fixture("C6"), "--max-cycles", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("more than 0 directed cycles"));
}
