use std::fs;
use std::process::{Command, Output};

fn turan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_turan"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn certify_json() {
    let o = turan(&["certify", "--poly", "1958 4872 3010", "--method", "both"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["hyperbolic"], true);
    assert_eq!(v["method"], "both");
    let bad = turan(&["certify", "--poly", "1575 3916 2436", "--method", "sturm"]);
    let v: serde_json::Value = serde_json::from_slice(&bad.stdout).unwrap();
    assert_eq!(v["hyperbolic"], false);
}

#[test]
fn threshold_laguerre() {
    let o = turan(&["threshold", "--family", "laguerre", "--j", "2", "--nmax", "400"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("laguerre_zero(j=2,ge0),184,0,396,verified_window,183,"));
    assert!(stderr(&o).contains("N=184"));
}

#[test]
fn threshold_anchor_all_and_strictness() {
    let o = turan(&["threshold", "--family", "turan", "--j", "2", "--anchor", "all", "--nmax", "200"]);
    let out = stdout(&o);
    assert!(out.contains("turan(j=2,k=1,anchor=backward,gt0),27,"));
    assert!(out.contains("turan(j=2,k=1,anchor=centered,gt0),26,"));
    assert!(out.contains("turan(j=2,k=1,anchor=start,gt0),25,"));
    let ge = turan(&["threshold", "--family", "turan", "--j", "1", "--strict", "ge", "--nmax", "50"]);
    assert!(stdout(&ge).contains("turan(j=1,k=1,anchor=backward,ge0),1,1,50,holds_from_start"));
    let jensen = turan(&["threshold", "--family", "jensen", "--d", "2", "--strict", "gt", "--nmax", "50"]);
    assert_eq!(jensen.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        vec!["bogus"],
        vec!["turan", "--j"],
        vec!["turan", "--j", "2", "--nmax", "50", "--anchor", "middle"],
        vec!["threshold", "--family", "nothing", "--j", "1"],
        vec!["certify", "--poly", "1 x 2"],
        vec!["table1", "--strict", "ge"],
        vec!["seq", "--seq", "builtin:unknown", "--nmax", "5"],
    ] {
        let o = turan(&args);
        assert_eq!(o.status.code(), Some(1), "{args:?}: {}", stderr(&o));
    }
    assert_eq!(turan(&["--help"]).status.code(), Some(0));
}

#[test]
fn insufficient_ceiling_is_a_contract_error() {
    let o = turan(&["table2", "--jmax", "2", "--nmax", "300"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("384"), "{}", stderr(&o));
}

#[test]
fn mismatch_exits_two() {
    let o = turan(&["table1", "--jmax", "1", "--kmax", "1", "--seq", "builtin:constant"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("mismatch at (1,1)"));
}

#[test]
fn small_tables_in_every_format() {
    let csv = turan(&["table1", "--jmax", "2", "--kmax", "2"]);
    assert_eq!(csv.status.code(), Some(0));
    assert!(stdout(&csv).contains("2,2,centered,true,222,222,true"));
    let md = turan(&["table2", "--jmax", "2", "--format", "markdown"]);
    assert!(stdout(&md).contains("| onset | 25 | 184 |"));
    let json = turan(&["table1", "--jmax", "1", "--kmax", "4", "--format", "json", "--ratios"]);
    assert!(stdout(&json).contains("\"all_match\": true"));
    assert!(stdout(&json).contains("1,1,undefined"));
    assert!(stdout(&json).contains("1,4,3.6"));
}

#[test]
fn seq_file_roundtrip_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.seq");
    let cache = dir.path().join("cache");
    let p = path.to_str().unwrap();
    let c = cache.to_str().unwrap();
    let first = turan(&["seq", "--nmax", "30", "--out", p, "--cache", c]);
    assert_eq!(first.status.code(), Some(0));
    assert!(stdout(&first).contains("\n25,1958\n"));
    assert_eq!(fs::read_dir(&cache).unwrap().count(), 1);
    let second = turan(&["seq", "--nmax", "30", "--cache", c]);
    assert_eq!(first.stdout, second.stdout);
    let file_arg = format!("file:{p}");
    let from_file = turan(&["turan", "--j", "2", "--seq", &file_arg, "--from", "25", "--to", "26"]);
    assert_eq!(
        stdout(&from_file),
        "index,anchor,value,sign\n25,centered,-2936,-\n26,centered,40516,+\n"
    );
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    fs::write(&cfg, "format=json\nnmax=40\nseed=3\n").unwrap();
    let c = cfg.to_str().unwrap();
    let o = turan(&["seq", "--config", c]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["terms"].as_array().unwrap().len(), 41);
    assert!(stderr(&o).contains("nmax=40"));
    assert!(stderr(&o).contains("seed=3"));
    let o = turan(&["seq", "--config", c, "--nmax", "5", "--format", "csv"]);
    assert_eq!(stdout(&o), "index,value\n0,1\n1,1\n2,2\n3,3\n4,5\n5,7\n");
    fs::write(&cfg, "colour=blue\n").unwrap();
    assert_eq!(turan(&["seq", "--config", c]).status.code(), Some(1));
}

#[test]
fn deterministic_outputs() {
    let args = ["multseq", "witness", "--d", "3", "--shift", "50", "--trials", "30", "--seed", "9"];
    let a = turan(&args);
    let b = turan(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["verdict"], "counterexample_found");
    assert_eq!(v["failures"][0]["trial"], 0);
    let threads = turan(&["turan", "--j", "3", "--k", "2", "--nmax", "200", "--threads", "2"]);
    let single = turan(&["turan", "--j", "3", "--k", "2", "--nmax", "200", "--threads", "1"]);
    assert_eq!(threads.stdout, single.stdout);
}

#[test]
fn other_subcommands() {
    let j = turan(&["jensen", "--d", "3", "--from", "92", "--to", "95"]);
    assert_eq!(
        stdout(&j),
        "shift,hyperbolic,sign_profile\n92,true,all_nonpositive\n93,false,undetermined\n94,true,all_nonpositive\n95,true,all_nonpositive\n"
    );
    let l = turan(&["laguerre", "--k", "1", "--from", "24", "--to", "25"]);
    assert_eq!(stdout(&l), "n,k,value,sign\n24,1,-2936,-\n25,1,40516,+\n");
    let it = turan(&["laguerre", "--k", "1", "--iterations", "2", "--from", "0", "--to", "0"]);
    assert_eq!(stdout(&it), "n,k,iterations,value,sign\n0,1,2,0,0\n");
    let g = turan(&["multseq", "gamma", "--shift", "25", "--poly", "1 2 1"]);
    let v: serde_json::Value = serde_json::from_slice(&g.stdout).unwrap();
    assert_eq!(v["output"], "1958 4872 3010");
    let s = turan(&["multseq", "schur", "--f1", "1 0 -1", "--f2", "1 2 1"]);
    let v: serde_json::Value = serde_json::from_slice(&s.stdout).unwrap();
    assert_eq!(v["composition"], "1 0 -1");
    let h = turan(&["multseq", "hadamard", "--with", "builtin:signflip", "--nmax", "5"]);
    assert_eq!(stdout(&h), "index,value\n0,1\n1,-1\n2,2\n3,-3\n4,5\n5,-7\n");
    let st = turan(&["multseq", "structure", "--from", "0", "--to", "50"]);
    let v: serde_json::Value = serde_json::from_slice(&st.stdout).unwrap();
    assert_eq!(v["pattern"], "constant_sign");
    let check = turan(&["check"]);
    assert_eq!(check.status.code(), Some(0));
    assert_eq!(stdout(&check).lines().filter(|l| l.starts_with("PASS")).count(), 9);
}
