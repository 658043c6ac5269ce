use anyhow::{anyhow, bail, Context, Result};
use serde_json::json;

use turan_core::jensen::jensen_window_report;
use turan_core::laguerre::{laguerre_iterate_at_zero, laguerre_window};
use turan_core::multseq::{
    gamma_apply, hadamard_product, order_d_witness_test, schur_szego, window_structure_check, MultiplierType,
    WitnessVerdict,
};
use turan_core::number::{format_rational, sign};
use turan_core::rootcert::certify_hyperbolic;
use turan_core::seqcore::{
    builtin_sequence, load_sequence, parse_builtin, partition_sequence, plane_partition_sequence, save_sequence,
    SequenceCache,
};
use turan_core::thresholds::{
    asymptotic_ratios, max_evaluable_index, reproduce_table1, reproduce_table2, table1_required_ceiling,
    table2_required_ceiling, threshold_search, PredicateSpec, ThresholdReport,
};
use turan_core::turan::{turan_iterate, AnchorConvention};
use turan_core::{checks, CertMethod, Polynomial, Provenance, Rational, Sequence};

use crate::config::{OutputFormat, RunConfig};
use crate::render::{pretty, Table};
use crate::{Command, MultAction};

pub enum Outcome {
    Ok,
    /// The computation ran but a reference table value was not reproduced.
    Mismatch,
}

fn sign_str(v: &Rational) -> &'static str {
    match sign(v) {
        1 => "+",
        -1 => "-",
        _ => "0",
    }
}

fn parse_poly(text: &str) -> Result<Polynomial> {
    Polynomial::parse(text).map_err(|e| anyhow!("invalid polynomial `{text}`: {e}"))
}

/// Resolves a `--seq` value to a sequence covering `0..=ceiling` (files are
/// read whole and cut at `ceiling` when it is given).
fn resolve_sequence(spec: &str, ceiling: Option<usize>, cfg: &RunConfig) -> Result<Sequence> {
    if let Some(path) = spec.strip_prefix("file:") {
        let s = load_sequence(path)?;
        return match ceiling {
            Some(c) if c < s.last_index() => Ok(s.truncated(c)?),
            _ => Ok(s),
        };
    }
    let n = ceiling.ok_or_else(|| anyhow!("this command needs --nmax for a generated sequence"))?;
    let (provenance, generate): (Provenance, Box<dyn FnOnce() -> turan_core::Result<Sequence>>) = match spec {
        "partition" => (Provenance::Partition, Box::new(move || Ok(partition_sequence(n)))),
        "planepartition" => (Provenance::PlanePartition, Box::new(move || plane_partition_sequence(n))),
        other => {
            let inner = other
                .strip_prefix("builtin:")
                .ok_or_else(|| anyhow!("unknown sequence `{other}`"))?;
            let (name, params) = parse_builtin(inner)?;
            let prov = Provenance::Builtin {
                name: name.clone(),
                params: params.clone(),
            };
            (prov, Box::new(move || builtin_sequence(&name, &params, n)))
        }
    };
    match &cfg.cache {
        Some(dir) => Ok(SequenceCache::new(dir).get_or_generate(&provenance, n, generate)?),
        None => Ok(generate()?),
    }
}

fn sequence(cfg: &RunConfig, default_ceiling: Option<usize>) -> Result<Sequence> {
    let spec = cfg.seq.as_deref().unwrap_or("partition");
    resolve_sequence(spec, cfg.nmax.or(default_ceiling), cfg)
}

fn anchors(cfg: &RunConfig, j: usize) -> Result<Vec<AnchorConvention>> {
    match cfg.anchor.as_deref() {
        None => Ok(vec![AnchorConvention::default_for(j)]),
        Some("all") => Ok(AnchorConvention::ALL.to_vec()),
        Some(a) => AnchorConvention::parse(a)
            .map(|a| vec![a])
            .ok_or_else(|| anyhow!("unknown anchor `{a}` (expected backward, centered, start or all)")),
    }
}

pub fn run(cmd: &Command, cfg: &RunConfig) -> Result<Outcome> {
    match cmd {
        Command::Seq { out } => cmd_seq(cfg, out.as_deref()),
        Command::Jensen { d, from, to } => cmd_jensen(cfg, *d, *from, *to),
        Command::Certify { poly, method } => cmd_certify(cfg, poly, method),
        Command::Turan { j, k, from, to } => cmd_turan(cfg, *j, *k, *from, *to),
        Command::Laguerre { k, from, to, iterations } => cmd_laguerre(cfg, *k, *from, *to, *iterations),
        Command::Multseq { action } => cmd_multseq(cfg, action),
        Command::Threshold { family, j, k, d } => cmd_threshold(cfg, family, *j, *k, *d),
        Command::Table1 { ratios } => cmd_table1(cfg, *ratios),
        Command::Table2 => cmd_table2(cfg),
        Command::Check => cmd_check(cfg),
    }
}

fn cmd_seq(cfg: &RunConfig, out: Option<&std::path::Path>) -> Result<Outcome> {
    let s = sequence(cfg, Some(100))?;
    if let Some(path) = out {
        save_sequence(&s, path)?;
        eprintln!("saved {} terms to {}", s.len(), path.display());
    }
    let format = cfg.format_or(OutputFormat::Csv)?;
    if format == OutputFormat::Json {
        print!(
            "{}",
            pretty(&json!({
                "provenance": s.provenance().to_string(),
                "offset": s.offset(),
                "terms": s.terms().iter().map(format_rational).collect::<Vec<_>>(),
            }))
        );
        return Ok(Outcome::Ok);
    }
    let mut t = Table::new(&["index", "value"]);
    for (k, v) in s.terms().iter().enumerate() {
        t.push(vec![(s.offset() + k).to_string(), format_rational(v)]);
    }
    print!("{}", t.render(format));
    Ok(Outcome::Ok)
}

fn cmd_jensen(cfg: &RunConfig, d: usize, from: usize, to: usize) -> Result<Outcome> {
    let s = sequence(cfg, Some(to + d))?;
    let r = jensen_window_report(&s, d, from, to)?;
    let mut t = Table::new(&["shift", "hyperbolic", "sign_profile"]);
    for v in &r.verdicts {
        t.push(vec![v.shift.to_string(), v.hyperbolic.to_string(), v.sign_profile.name().into()]);
    }
    print!("{}", t.render(cfg.format_or(OutputFormat::Csv)?));
    eprintln!(
        "onset on [{from}, {to}]: {}",
        r.onset.map_or("none".into(), |n| n.to_string())
    );
    Ok(Outcome::Ok)
}

fn cmd_certify(cfg: &RunConfig, poly: &str, method: &str) -> Result<Outcome> {
    let f = parse_poly(poly)?;
    let m = CertMethod::parse(method).ok_or_else(|| anyhow!("unknown method `{method}`"))?;
    let cert = certify_hyperbolic(&f, m)?;
    let v = cert.to_json();
    match cfg.format_or(OutputFormat::Json)? {
        OutputFormat::Json => print!("{}", pretty(&v)),
        other => {
            let mut t = Table::new(&["field", "value"]);
            for (k, val) in v.as_object().expect("object") {
                let shown = match val {
                    serde_json::Value::String(s) => s.clone(),
                    x => x.to_string(),
                };
                t.push(vec![k.clone(), shown]);
            }
            print!("{}", t.render(other));
        }
    }
    Ok(Outcome::Ok)
}

fn cmd_turan(cfg: &RunConfig, j: usize, k: usize, from: Option<usize>, to: Option<usize>) -> Result<Outcome> {
    let anchors = anchors(cfg, j)?;
    let max_after = anchors.iter().map(|a| k * a.reach_after(j)).max().unwrap_or(0);
    let default_ceiling = to.map(|t| t + max_after);
    if cfg.nmax.is_none() && default_ceiling.is_none() && !cfg.seq.as_deref().unwrap_or("").starts_with("file:") {
        bail!("give --to or --nmax");
    }
    let s = sequence(cfg, default_ceiling)?;
    let mut t = Table::new(&["index", "anchor", "value", "sign"]);
    for a in anchors {
        let it = turan_iterate(&s, j, k, a)?;
        let (lo, hi) = it.domain();
        let from = from.unwrap_or(lo);
        let to = to.unwrap_or(hi);
        if from < lo || to > hi || from > to {
            bail!("requested [{from}, {to}] but T_{j}^({k}) under the {a} anchor is defined on [{lo}, {hi}]");
        }
        for i in from..=to {
            let v = it.get(i)?;
            t.push(vec![i.to_string(), a.to_string(), format_rational(v), sign_str(v).into()]);
        }
    }
    print!("{}", t.render(cfg.format_or(OutputFormat::Csv)?));
    Ok(Outcome::Ok)
}

fn cmd_laguerre(cfg: &RunConfig, k: usize, from: usize, to: usize, iterations: usize) -> Result<Outcome> {
    let s = sequence(cfg, Some(to + 2 * k * iterations.max(1)))?;
    let format = cfg.format_or(OutputFormat::Csv)?;
    if iterations <= 1 {
        let vals = laguerre_window(&s, k, from, to)?;
        let mut t = Table::new(&["n", "k", "value", "sign"]);
        for v in &vals {
            t.push(vec![v.shift.to_string(), v.k.to_string(), format_rational(&v.value), sign_str(&v.value).into()]);
        }
        print!("{}", t.render(format));
        return Ok(Outcome::Ok);
    }
    let mut t = Table::new(&["n", "k", "iterations", "value", "sign"]);
    for n in from..=to {
        let v = laguerre_iterate_at_zero(&s, k, iterations, n)?;
        t.push(vec![n.to_string(), k.to_string(), iterations.to_string(), format_rational(&v), sign_str(&v).into()]);
    }
    print!("{}", t.render(format));
    Ok(Outcome::Ok)
}

fn cmd_multseq(cfg: &RunConfig, action: &MultAction) -> Result<Outcome> {
    let format = cfg.format_or(OutputFormat::Json)?;
    match action {
        MultAction::Gamma { shift, poly } => {
            let f = parse_poly(poly)?;
            let s = sequence(cfg, Some(shift + f.degree().unwrap_or(0)))?;
            let g = gamma_apply(&s, *shift, &f)?;
            emit_kv(format, &[("input", f.to_string()), ("shift", shift.to_string()), ("output", g.to_string())]);
        }
        MultAction::Witness { d, shift, trials, type_ii } => {
            let s = sequence(cfg, Some(shift + d))?;
            let ty = if *type_ii { MultiplierType::TypeII } else { MultiplierType::TypeI };
            let r = order_d_witness_test(&s, *d, *shift, *trials, cfg.seed(), ty)?;
            match format {
                OutputFormat::Json => print!("{}", pretty(&r.to_json())),
                other => {
                    let mut t = Table::new(&["trial", "input", "output"]);
                    for f in &r.failures {
                        t.push(vec![f.trial.to_string(), f.input.to_string(), f.output.to_string()]);
                    }
                    print!("{}", t.render(other));
                }
            }
            eprintln!("verdict: {} ({} trials, seed {})", r.verdict, r.trials, r.rng_seed);
            if r.verdict == WitnessVerdict::CounterexampleFound {
                eprintln!("first counterexample at trial {}", r.failures[0].trial);
            }
        }
        MultAction::Schur { f1, f2 } => {
            let (a, b) = (parse_poly(f1)?, parse_poly(f2)?);
            let g = schur_szego(&a, &b)?;
            emit_kv(format, &[("f1", a.to_string()), ("f2", b.to_string()), ("composition", g.to_string())]);
        }
        MultAction::Hadamard { with } => {
            let a = sequence(cfg, Some(100))?;
            let b = resolve_sequence(with, Some(cfg.nmax.unwrap_or(100)), cfg)?;
            let h = hadamard_product(&a, &b)?;
            let mut t = Table::new(&["index", "value"]);
            for (k, v) in h.terms().iter().enumerate() {
                t.push(vec![(h.offset() + k).to_string(), format_rational(v)]);
            }
            print!("{}", t.render(cfg.format_or(OutputFormat::Csv)?));
        }
        MultAction::Structure { from, to } => {
            let s = sequence(cfg, Some(*to))?;
            let r = window_structure_check(&s, *from, *to)?;
            let violations: Vec<String> = r.violations.iter().map(|v| v.to_string()).collect();
            emit_kv(
                format,
                &[
                    ("from", r.lo.to_string()),
                    ("to", r.hi.to_string()),
                    ("pattern", r.pattern.name().into()),
                    ("violations", violations.join(" ")),
                ],
            );
        }
    }
    Ok(Outcome::Ok)
}

fn emit_kv(format: OutputFormat, pairs: &[(&str, String)]) {
    match format {
        OutputFormat::Json => {
            let m: serde_json::Map<String, serde_json::Value> =
                pairs.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
            print!("{}", pretty(&serde_json::Value::Object(m)));
        }
        other => {
            let mut t = Table::new(&["field", "value"]);
            for (k, v) in pairs {
                t.push(vec![k.to_string(), v.clone()]);
            }
            print!("{}", t.render(other));
        }
    }
}

fn predicates(cfg: &RunConfig, family: &str, j: Option<usize>, k: Option<usize>, d: Option<usize>) -> Result<Vec<PredicateSpec>> {
    let strict = cfg.strictness()?;
    let need = |v: Option<usize>, name: &str| v.ok_or_else(|| anyhow!("--{name} is required for family {family}"));
    match family {
        "turan" => {
            let j = need(j, "j")?;
            let k = k.unwrap_or(1);
            Ok(anchors(cfg, j)?
                .into_iter()
                .map(|anchor| PredicateSpec::Turan {
                    j,
                    k,
                    anchor,
                    strict: strict.unwrap_or(true),
                })
                .collect())
        }
        "laguerre" => Ok(vec![PredicateSpec::LaguerreZero {
            j: need(j, "j")?,
            strict: strict.unwrap_or(false),
        }]),
        "jensen" => {
            if strict.is_some() {
                bail!("--strict does not apply to the jensen family");
            }
            Ok(vec![PredicateSpec::JensenHyperbolic { d: need(d.or(j), "d")? }])
        }
        other => bail!("unknown family `{other}` (expected turan, laguerre or jensen)"),
    }
}

fn threshold_table(reports: &[ThresholdReport]) -> Table {
    let mut t = Table::new(&["predicate", "onset", "n_min", "n_max", "status", "witness_index", "witness_value"]);
    for r in reports {
        let (wi, wv) = r
            .failure_witness
            .as_ref()
            .map_or((String::new(), String::new()), |w| (w.index.to_string(), w.value.clone()));
        t.push(vec![
            r.predicate.to_string(),
            r.onset.map_or("none".into(), |n| n.to_string()),
            r.n_min.to_string(),
            r.n_max.to_string(),
            r.status.name().into(),
            wi,
            wv,
        ]);
    }
    t
}

fn cmd_threshold(cfg: &RunConfig, family: &str, j: Option<usize>, k: Option<usize>, d: Option<usize>) -> Result<Outcome> {
    let preds = predicates(cfg, family, j, k, d)?;
    let s = sequence(cfg, Some(1000))?;
    let mut reports = Vec::new();
    for p in preds {
        let n_max = max_evaluable_index(&p, &s)
            .ok_or_else(|| anyhow!("sequence too short for {p}"))?;
        reports.push(threshold_search(p, &s, n_max).with_context(|| format!("searching {p}"))?);
    }
    match cfg.format_or(OutputFormat::Csv)? {
        OutputFormat::Json => print!("{}", pretty(&json!(reports.iter().map(|r| r.to_json()).collect::<Vec<_>>()))),
        other => print!("{}", threshold_table(&reports).render(other)),
    }
    for r in &reports {
        eprintln!("N={} for {}", r.onset.map_or("none".into(), |n| n.to_string()), r.predicate);
    }
    Ok(Outcome::Ok)
}

fn reject_table_overrides(cfg: &RunConfig) -> Result<()> {
    if cfg.strict.is_some() {
        bail!("table strictness is fixed (table 1 uses > 0, table 2 uses >= 0)");
    }
    if cfg.anchor.as_deref().is_some_and(|a| a != "all") {
        bail!("table 1 picks anchors itself; use `turan` or `threshold` for a single anchor");
    }
    Ok(())
}

fn cmd_table1(cfg: &RunConfig, ratios: bool) -> Result<Outcome> {
    reject_table_overrides(cfg)?;
    let (jm, km) = (cfg.jmax.unwrap_or(4), cfg.kmax.unwrap_or(4));
    if !(1..=4).contains(&jm) || !(1..=4).contains(&km) {
        bail!("table 1 has j, k in 1..=4");
    }
    let ceiling = cfg.nmax.unwrap_or_else(|| table1_required_ceiling(jm, km));
    let s = sequence(cfg, Some(ceiling))?;
    let table = reproduce_table1(jm, km, ceiling, &s)?;
    match cfg.format_or(OutputFormat::Csv)? {
        OutputFormat::Csv => {
            print!("{}", table.to_csv());
            print!("\n# anchor map\n{}", table.anchor_map_csv());
        }
        OutputFormat::Markdown => print!("{}", table.to_markdown()),
        OutputFormat::Json => print!("{}", pretty(&table.to_json())),
    }
    if ratios {
        println!("\n# onset / ((6/pi^2)(jk)^2 (log jk)^2)\nj,k,ratio");
        for (j, k, r) in asymptotic_ratios(&table) {
            println!("{j},{k},{}", r.map_or("undefined".into(), |x| format!("{x:.4}")));
        }
    }
    report_cells(
        table
            .cells
            .iter()
            .map(|c| (format!("({},{})", c.j, c.k), c.onset, c.reference)),
    )
}

fn report_cells(cells: impl Iterator<Item = (String, Option<usize>, usize)>) -> Result<Outcome> {
    let mut mismatches = 0;
    for (label, onset, reference) in cells {
        if onset != Some(reference) {
            mismatches += 1;
            eprintln!(
                "mismatch at {label}: computed {}, expected {reference}",
                onset.map_or("none".into(), |n| n.to_string())
            );
        }
    }
    if mismatches == 0 {
        eprintln!("all cells reproduced");
        Ok(Outcome::Ok)
    } else {
        eprintln!("{mismatches} cell(s) not reproduced");
        Ok(Outcome::Mismatch)
    }
}

fn cmd_table2(cfg: &RunConfig) -> Result<Outcome> {
    reject_table_overrides(cfg)?;
    let jm = cfg.jmax.unwrap_or(10);
    if !(1..=10).contains(&jm) {
        bail!("table 2 has j in 1..=10");
    }
    let ceiling = cfg.nmax.unwrap_or_else(|| table2_required_ceiling(jm));
    let s = sequence(cfg, Some(ceiling))?;
    let table = reproduce_table2(jm, ceiling, &s)?;
    match cfg.format_or(OutputFormat::Csv)? {
        OutputFormat::Csv => print!("{}", table.to_csv()),
        OutputFormat::Markdown => print!("{}", table.to_markdown()),
        OutputFormat::Json => print!("{}", pretty(&table.to_json())),
    }
    report_cells(
        table
            .onsets()
            .into_iter()
            .zip(turan_core::thresholds::REFERENCE_TABLE2)
            .enumerate()
            .map(|(i, (o, r))| (format!("j={}", i + 1), o, r)),
    )
}

fn cmd_check(cfg: &RunConfig) -> Result<Outcome> {
    let suites = checks::run_all(cfg.seed())?;
    let mut failed = 0;
    for s in &suites {
        println!("{}", s.summary_line());
        if !s.passed() {
            failed += 1;
        }
    }
    if failed > 0 {
        bail!("{failed} suite(s) failed");
    }
    Ok(Outcome::Ok)
}
