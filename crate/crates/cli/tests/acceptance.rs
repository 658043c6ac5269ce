//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so every line is printed under `cargo test`.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use serde_json::Value;
use turan_core::checks;
use turan_core::seqcore::partition_sequence;
use turan_core::thresholds::{threshold_search, PredicateSpec, ThresholdStatus};

const TABLE1: [[u64; 4]; 4] = [
    [2, 8, 26, 68],
    [26, 222, 640, 1292],
    [94, 522, 1232, 2094],
    [206, 991, 2040, 3005],
];
const TABLE2: [u64; 10] = [25, 184, 531, 1102, 1923, 3014, 4391, 6070, 8063, 10382];

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn run_cli(args: &[&str]) -> (i32, Value, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_turan"))
        .args(args)
        .output()
        .expect("binary runs");
    let elapsed = start.elapsed();
    let json = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap_or(-1), json, elapsed)
}

fn table1(evidence: &mut Option<Value>) -> Outcome {
    let (code, v, t) = run_cli(&["table1", "--jmax", "4", "--kmax", "4", "--nmax", "3300", "--format", "json"]);
    let cells = v["cells"].as_array().cloned().unwrap_or_default();
    let mut matched = 0;
    let mut wrong = Vec::new();
    for c in &cells {
        let (j, k) = (c["j"].as_u64().unwrap_or(0), c["k"].as_u64().unwrap_or(0));
        if !(1..=4).contains(&j) || !(1..=4).contains(&k) {
            continue;
        }
        let want = TABLE1[j as usize - 1][k as usize - 1];
        let anchor = c["anchor"].as_str().unwrap_or("");
        let default_anchor = match j {
            1 => "backward",
            2 => "centered",
            _ => "start",
        };
        let anchor_ok = (j >= 3 && k >= 2) || anchor == default_anchor;
        if c["onset"].as_u64() == Some(want) && anchor_ok {
            matched += 1;
        } else {
            wrong.push(format!("({j},{k})={}", c["onset"]));
        }
    }
    *evidence = Some(v);
    outcome(
        code == 0 && matched == 16 && t < Duration::from_secs(300),
        format!("{matched}/16 cells, exit {code}, {:.1}s {}", t.as_secs_f64(), wrong.join(" "))
            .trim_end()
            .to_string(),
    )
}

fn table2(_: &mut Option<Value>) -> Outcome {
    let (code, v, t) = run_cli(&["table2", "--jmax", "10", "--nmax", "10600", "--format", "json"]);
    let got: Vec<Option<u64>> = v["rows"]
        .as_array()
        .map(|rows| rows.iter().map(|r| r["onset"].as_u64()).collect())
        .unwrap_or_default();
    let want: Vec<Option<u64>> = TABLE2.iter().map(|&n| Some(n)).collect();
    outcome(
        code == 0 && got == want && t < Duration::from_secs(600),
        format!("onsets {got:?}, exit {code}, {:.1}s", t.as_secs_f64()),
    )
}

fn jensen_onsets(_: &mut Option<Value>) -> Outcome {
    let start = Instant::now();
    let p = partition_sequence(600);
    let got: Vec<Option<usize>> = (2..=5)
        .map(|d| threshold_search(PredicateSpec::jensen(d), &p, 600 - d).ok().and_then(|r| r.onset))
        .collect();
    let t = start.elapsed();
    outcome(
        got == vec![Some(25), Some(94), Some(206), Some(381)] && t < Duration::from_secs(60),
        format!("d=2..5 onsets {got:?}, {:.1}s", t.as_secs_f64()),
    )
}

fn suite(result: turan_core::Result<checks::SuiteResult>, min_cases: usize) -> Outcome {
    match result {
        Ok(s) => outcome(s.passed() && s.cases >= min_cases, s.summary_line()),
        Err(e) => outcome(false, format!("error: {e}")),
    }
}

fn identity_suites(_: &mut Option<Value>) -> Outcome {
    let parts = [
        checks::jensen_derivative_identities(200, 11),
        checks::degree_reduction(400, 12),
        checks::schur_szego_closure(500, 13),
    ];
    let mut ok = true;
    let mut lines = Vec::new();
    for p in parts {
        match p {
            Ok(s) => {
                ok &= s.passed();
                lines.push(format!("{}:{}/{}", s.name, s.violations, s.cases));
            }
            Err(e) => {
                ok = false;
                lines.push(format!("error {e}"));
            }
        }
    }
    outcome(ok, format!("violations/cases {}", lines.join(" ")))
}

/// Conjectures are not claimed: the artifact only emits finite-window
/// evidence. Checks that the anchor map is present and that scans report a
/// verified window with its ceiling rather than an unbounded claim.
fn evidence_only(table1_json: &mut Option<Value>) -> Outcome {
    let scanned = table1_json
        .as_ref()
        .and_then(|v| v["cells"].as_array().cloned())
        .map(|cells| {
            cells
                .iter()
                .filter(|c| c["anchor_scan"].as_array().is_some_and(|a| a.len() == 3))
                .count()
        })
        .unwrap_or(0);
    let p = partition_sequence(1200);
    let extended: Vec<bool> = [PredicateSpec::turan(2, 2), PredicateSpec::laguerre(2), PredicateSpec::jensen(3)]
        .into_iter()
        .map(|pred| {
            threshold_search(pred, &p, 1190)
                .map(|r| r.status == ThresholdStatus::VerifiedWindow && r.n_max == 1190)
                .unwrap_or(false)
        })
        .collect();
    let suites_ok = checks::run_all(0).map(|v| v.iter().all(|s| s.passed())).unwrap_or(false);
    outcome(
        scanned == 6 && extended.iter().all(|&b| b) && suites_ok,
        format!(
            "not claimed; evidence: anchor map for {scanned} cells, extended scans {extended:?} to 1190, all property suites pass"
        ),
    )
}

fn oracle_equivalence(_: &mut Option<Value>) -> Outcome {
    suite(checks::sturm_hankel_agreement(1000, 2024), 1000)
}

fn laguerre_identity(_: &mut Option<Value>) -> Outcome {
    suite(checks::laguerre_identity(200, 7), 600)
}

fn iterated_laguerre(_: &mut Option<Value>) -> Outcome {
    suite(checks::iterated_laguerre_closed_form(100, 5), 101)
}

fn sequence_oracles(_: &mut Option<Value>) -> Outcome {
    suite(checks::sequence_oracles(), 28)
}

type Criterion = fn(&mut Option<Value>) -> Outcome;

fn main() -> ExitCode {
    // criterion 9 reads the table-1 output captured by criterion 1
    let criteria: [(&str, Criterion); 9] = [
        ("table1 reproduction", table1),
        ("table2 reproduction", table2),
        ("Jensen onsets", jensen_onsets),
        ("Sturm/Hankel oracle equivalence", oracle_equivalence),
        ("Laguerre expansion identity", laguerre_identity),
        ("Iterated Laguerre closed form", iterated_laguerre),
        ("Brute-force sequence oracles", sequence_oracles),
        ("Identity suites", identity_suites),
        ("Conjectures beyond the tables", evidence_only),
    ];
    let mut evidence = None;
    let mut failures = 0;
    for (i, (name, run)) in criteria.into_iter().enumerate() {
        let result = run(&mut evidence);
        let tag = if result.ok { "PASS" } else { "FAIL" };
        if !result.ok {
            failures += 1;
        }
        println!("{tag} [{}] {name}: {}", i + 1, result.detail);
    }
    if failures == 0 {
        println!("acceptance: all 9 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failures} criteria failed");
        ExitCode::FAILURE
    }
}
