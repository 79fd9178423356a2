//! End-to-end tests of the compidx binary: output formats, determinism,
//! seed resolution, and the exit code contract (0 ok, 1 claim failures,
//! 2 usage errors).

use std::path::Path;
use std::process::{Command, Output};

fn run_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_compidx"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary launches")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn gen_then_analyze_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["gen", "transitive", "--n", "5", "-o", "t.txt"]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(dir.path().join("t.txt")).unwrap();
    assert!(text.starts_with("digraph 5"));

    let report = stdout_json(&run_in(dir.path(), &["analyze", "t.txt"]));
    assert_eq!(report["n"], 5);
    assert_eq!(report["sink_sequence"]["zeta"], 4);
    assert_eq!(report["profile"]["cindex"], 4);
    assert_eq!(report["profile"]["cperiod"], 1);
    assert_eq!(report["primitivity"]["primitive"], false);
}

#[test]
fn analyze_output_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    run_in(dir.path(), &["gen", "sink-cycle", "--sizes", "2,3", "--seed", "6", "-o", "d.txt"]);
    let a = run_in(dir.path(), &["analyze", "d.txt"]);
    let b = run_in(dir.path(), &["analyze", "d.txt"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn seed_flag_env_and_default_resolution() {
    let dir = tempfile::tempdir().unwrap();
    let gen = |extra_env: Option<(&str, &str)>, args: &[&str]| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_compidx"));
        cmd.current_dir(dir.path()).args(args);
        if let Some((k, v)) = extra_env {
            cmd.env(k, v);
        }
        cmd.output().expect("binary launches")
    };
    let base = ["gen", "random-kpartite", "--sizes", "2,3"];
    let flag = gen(None, &[&base[..], &["--seed", "7", "-o", "a.txt"]].concat());
    let env = gen(Some(("COMPIDX_SEED", "7")), &[&base[..], &["-o", "b.txt"]].concat());
    // the flag wins over the environment
    let both = gen(
        Some(("COMPIDX_SEED", "99")),
        &[&base[..], &["--seed", "7", "-o", "c.txt"]].concat(),
    );
    assert!(flag.status.success() && env.status.success() && both.status.success());
    let read = |p: &str| std::fs::read(dir.path().join(p)).unwrap();
    assert_eq!(read("a.txt"), read("b.txt"));
    assert_eq!(read("a.txt"), read("c.txt"));

    let bad = gen(Some(("COMPIDX_SEED", "not-a-number")), &[&base[..], &["-o", "x.txt"]].concat());
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two_and_help_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run_in(dir.path(), &["analyze", "missing.txt"]).status.code(), Some(2));
    assert_eq!(run_in(dir.path(), &["frobnicate"]).status.code(), Some(2));
    assert_eq!(run_in(dir.path(), &["--help"]).status.code(), Some(0));
    assert_eq!(run_in(dir.path(), &["--version"]).status.code(), Some(0));
    assert_eq!(run_in(dir.path(), &["verify"]).status.code(), Some(2));

    run_in(dir.path(), &["gen", "transitive", "--n", "4", "-o", "t.txt"]);
    assert_eq!(run_in(dir.path(), &["power", "t.txt", "-m", "0"]).status.code(), Some(2));

    // malformed digraph file
    std::fs::write(dir.path().join("junk.txt"), "digraph nope\n").unwrap();
    assert_eq!(run_in(dir.path(), &["analyze", "junk.txt"]).status.code(), Some(2));
}

#[test]
fn gen_family_arguments() {
    let dir = tempfile::tempdir().unwrap();
    let ok = run_in(dir.path(), &["gen", "acyclic-kpartite", "--spec", "2,1,2:0,1,0", "-o", "a.txt"]);
    assert!(ok.status.success());
    assert_eq!(
        run_in(dir.path(), &["gen", "acyclic-kpartite", "--spec", "2,1,2"]).status.code(),
        Some(2)
    );
    // consecutive layers in the same class are a generator error
    assert_eq!(
        run_in(dir.path(), &["gen", "acyclic-kpartite", "--spec", "2,2:0,0"]).status.code(),
        Some(2)
    );
    assert_eq!(run_in(dir.path(), &["gen", "zeta", "--n", "6", "--i", "2"]).status.code(), Some(0));
    // zeta = n-2 is unachievable
    assert_eq!(run_in(dir.path(), &["gen", "zeta", "--n", "6", "--i", "4"]).status.code(), Some(2));
}

#[test]
fn power_emits_dot() {
    let dir = tempfile::tempdir().unwrap();
    run_in(dir.path(), &["gen", "zeta", "--n", "6", "--i", "2", "-o", "z.txt"]);
    let out = run_in(dir.path(), &["power", "z.txt", "-m", "2"]);
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("graph G {"), "got: {dot}");

    let to_file = run_in(dir.path(), &["power", "z.txt", "-m", "2", "--dot", "p.dot"]);
    assert!(to_file.status.success());
    assert_eq!(std::fs::read_to_string(dir.path().join("p.dot")).unwrap(), dot);

    // enormous m goes through the periodicity window, not m multiplications
    let big = run_in(dir.path(), &["power", "z.txt", "-m", "1000000007"]);
    assert!(big.status.success());
}

#[test]
fn analyze_dot_directory() {
    let dir = tempfile::tempdir().unwrap();
    run_in(dir.path(), &["gen", "transitive", "--n", "4", "-o", "t.txt"]);
    let out = run_in(
        dir.path(),
        &["analyze", "t.txt", "--dot", "dots", "--mmax", "3", "--json", "r.json"],
    );
    assert!(out.status.success());
    assert!(out.stdout.is_empty(), "report went to the file, not stdout");
    for name in ["digraph.dot", "c1.dot", "c2.dot", "c3.dot"] {
        assert!(dir.path().join("dots").join(name).exists(), "missing {name}");
    }
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("r.json")).unwrap()).unwrap();
    assert_eq!(report["n"], 4);
}

#[test]
fn verify_suite_clean_run() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("suite.json"),
        r#"{"corpus": [{"kind": "transitive", "n": 5}, {"kind": "all_tournaments", "n": 4}]}"#,
    )
    .unwrap();
    let out = run_in(dir.path(), &["verify", "suite.json", "--jobs", "2", "--report", "rep.json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("rep.json")).unwrap())
            .unwrap();
    assert_eq!(report["schema"], 1);
    assert_eq!(report["instances"], 65);
    assert_eq!(report["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_failure_and_replay_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("crippled.json"),
        r#"{
  "corpus": [{"kind": "random_sink_cycle", "ks": [2], "max_n": 6, "count": 2, "seed": 5}],
  "caps": {"pump_cap": 0}
}"#,
    )
    .unwrap();
    let out = run_in(dir.path(), &["verify", "crippled.json", "--report", "rep.json"]);
    assert_eq!(out.status.code(), Some(1), "a crippled cap must surface as exit 1");
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("rep.json")).unwrap())
            .unwrap();
    let failures = report["failures"].as_array().unwrap();
    assert!(!failures.is_empty());
    std::fs::write(
        dir.path().join("bad.txt"),
        failures[0]["digraph"].as_str().unwrap(),
    )
    .unwrap();

    // same caps reproduce the verdict; honest caps clear it
    let replay = run_in(dir.path(), &["verify", "crippled.json", "--replay", "bad.txt"]);
    assert_eq!(replay.status.code(), Some(1));
    let clean = run_in(dir.path(), &["verify", "--replay", "bad.txt"]);
    assert_eq!(clean.status.code(), Some(0));
    let results: serde_json::Value = serde_json::from_slice(&clean.stdout).unwrap();
    assert!(results.as_array().unwrap().iter().any(|r| r["claim"] == "L3.5"));
}

#[test]
fn verify_rejects_bad_config() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.json"), r#"{"corpus": [{"kind": "mystery"}]}"#).unwrap();
    assert_eq!(run_in(dir.path(), &["verify", "bad.json"]).status.code(), Some(2));
    std::fs::write(
        dir.path().join("infeasible.json"),
        r#"{"corpus": [{"kind": "random_sink_cycle", "ks": [7], "max_n": 6, "count": 1, "seed": 1}]}"#,
    )
    .unwrap();
    assert_eq!(run_in(dir.path(), &["verify", "infeasible.json"]).status.code(), Some(2));
}

#[test]
fn gen_to_stdout_and_analyze_json_dash() {
    let dir = tempfile::tempdir().unwrap();
    let gen = run_in(dir.path(), &["gen", "transitive", "--n", "3"]);
    assert!(gen.status.success());
    let text = String::from_utf8(gen.stdout).unwrap();
    assert!(text.starts_with("digraph 3"));
    std::fs::write(dir.path().join("t.txt"), &text).unwrap();
    let dash = run_in(dir.path(), &["analyze", "t.txt", "--json", "-"]);
    let default = run_in(dir.path(), &["analyze", "t.txt"]);
    assert_eq!(dash.stdout, default.stdout);
}
