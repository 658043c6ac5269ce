//! Minimal-onset searches on a finite window and the two partition tables.
//!
//! An onset `N` for a predicate on `[n_min, n_max]` is the least `n` such
//! that the predicate holds at every index of `[n, n_max]`. Nothing is
//! claimed beyond `n_max`.

use std::fmt;

use num_traits::Signed;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::jensen::{jensen_verdict, suffix_onset};
use crate::laguerre::laguerre_at_zero;
use crate::number::{format_rational, Rational};
use crate::seqcore::Sequence;
use crate::turan::{turan_iterate, AnchorConvention};

/// Onsets for `T_j^{(k)}(p(n)) > 0`, rows `j = 1..4`, columns `k = 1..4`.
pub const REFERENCE_TABLE1: [[usize; 4]; 4] = [
    [2, 8, 26, 68],
    [26, 222, 640, 1292],
    [94, 522, 1232, 2094],
    [206, 991, 2040, 3005],
];

/// Onsets for `L_j(φ_p^{(n)})(0) >= 0`, `j = 1..10`.
pub const REFERENCE_TABLE2: [usize; 10] = [25, 184, 531, 1102, 1923, 3014, 4391, 6070, 8063, 10382];

/// Slack kept above the largest expected onset when checking ceilings.
pub const TABLE_MARGIN: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PredicateSpec {
    Turan {
        j: usize,
        k: usize,
        anchor: AnchorConvention,
        strict: bool,
    },
    LaguerreZero {
        j: usize,
        strict: bool,
    },
    JensenHyperbolic {
        d: usize,
    },
}

impl PredicateSpec {
    /// Strict positivity at the default anchor.
    pub fn turan(j: usize, k: usize) -> Self {
        PredicateSpec::Turan {
            j,
            k,
            anchor: AnchorConvention::default_for(j),
            strict: true,
        }
    }

    /// Non-strict.
    pub fn laguerre(j: usize) -> Self {
        PredicateSpec::LaguerreZero { j, strict: false }
    }

    pub fn jensen(d: usize) -> Self {
        PredicateSpec::JensenHyperbolic { d }
    }

    /// Terms needed after `n` to evaluate at `n`.
    fn reach_after(&self) -> usize {
        match *self {
            PredicateSpec::Turan { j, k, anchor, .. } => k * anchor.reach_after(j),
            PredicateSpec::LaguerreZero { j, .. } => 2 * j,
            PredicateSpec::JensenHyperbolic { d } => d,
        }
    }

    fn reach_before(&self) -> usize {
        match *self {
            PredicateSpec::Turan { j, k, anchor, .. } => k * anchor.reach_before(j),
            _ => 0,
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = match *self {
            PredicateSpec::Turan { j, k, .. } => j == 0 || k == 0,
            PredicateSpec::LaguerreZero { .. } => false,
            PredicateSpec::JensenHyperbolic { d } => d == 0,
        };
        if bad {
            return Err(Error::InvalidParameter(format!("invalid predicate {self}")));
        }
        Ok(())
    }
}

impl fmt::Display for PredicateSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = |strict: bool| if strict { "gt0" } else { "ge0" };
        match *self {
            PredicateSpec::Turan { j, k, anchor, strict } => {
                write!(f, "turan(j={j},k={k},anchor={anchor},{})", rel(strict))
            }
            PredicateSpec::LaguerreZero { j, strict } => write!(f, "laguerre_zero(j={j},{})", rel(strict)),
            PredicateSpec::JensenHyperbolic { d } => write!(f, "jensen_hyperbolic(d={d})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThresholdStatus {
    VerifiedWindow,
    HoldsFromStart,
    NoOnsetFound,
}

impl ThresholdStatus {
    pub fn name(self) -> &'static str {
        match self {
            ThresholdStatus::VerifiedWindow => "verified_window",
            ThresholdStatus::HoldsFromStart => "holds_from_start",
            ThresholdStatus::NoOnsetFound => "no_onset_found",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FailureWitness {
    pub index: usize,
    /// Exact value, or the verdict for predicates without a scalar value.
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdReport {
    pub predicate: PredicateSpec,
    pub onset: Option<usize>,
    pub n_min: usize,
    pub n_max: usize,
    pub failure_witness: Option<FailureWitness>,
    pub status: ThresholdStatus,
}

impl ThresholdReport {
    pub fn to_json(&self) -> Value {
        json!({
            "predicate": self.predicate.to_string(),
            "onset": self.onset,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "status": self.status.name(),
            "failure_witness": self.failure_witness.as_ref().map(|w| json!({
                "index": w.index,
                "value": w.value,
            })),
        })
    }
}

/// Per-index outcomes on `[n_min, n_max]` plus a way to render the value at
/// a failing index.
struct Scan {
    n_min: usize,
    passes: Vec<bool>,
    values: Option<Vec<Rational>>,
}

fn passes(v: &Rational, strict: bool) -> bool {
    if strict {
        v.is_positive()
    } else {
        !v.is_negative()
    }
}

fn scan(pred: &PredicateSpec, seq: &Sequence, n_max: usize) -> Result<Scan> {
    pred.validate()?;
    let required = n_max + pred.reach_after();
    if seq.last_index() < required {
        return Err(Error::InsufficientCeiling {
            required,
            given: seq.last_index(),
        });
    }
    let n_min = seq.first_index() + pred.reach_before();
    if n_min > n_max {
        return Err(Error::EmptyDomain);
    }
    let seq = seq.truncated(required)?;
    match *pred {
        PredicateSpec::Turan { j, k, anchor, strict } => {
            let it = turan_iterate(&seq, j, k, anchor)?;
            debug_assert_eq!(it.domain(), (n_min, n_max));
            let values = it.values.terms().to_vec();
            Ok(Scan {
                n_min,
                passes: values.par_iter().map(|v| passes(v, strict)).collect(),
                values: Some(values),
            })
        }
        PredicateSpec::LaguerreZero { j, strict } => {
            let values = (n_min..=n_max)
                .into_par_iter()
                .map(|n| laguerre_at_zero(&seq, j, n))
                .collect::<Result<Vec<_>>>()?;
            Ok(Scan {
                n_min,
                passes: values.iter().map(|v| passes(v, strict)).collect(),
                values: Some(values),
            })
        }
        PredicateSpec::JensenHyperbolic { d } => {
            let passes = (n_min..=n_max)
                .into_par_iter()
                .map(|n| jensen_verdict(&seq, d, n).map(|v| v.hyperbolic))
                .collect::<Result<Vec<_>>>()?;
            Ok(Scan {
                n_min,
                passes,
                values: None,
            })
        }
    }
}

fn report_from_scan(pred: PredicateSpec, n_max: usize, s: Scan) -> ThresholdReport {
    let onset = suffix_onset(s.passes.iter().enumerate().map(|(k, &ok)| (s.n_min + k, ok)));
    let (status, witness_index) = match onset {
        None => (ThresholdStatus::NoOnsetFound, Some(n_max)),
        Some(n) if n == s.n_min => (ThresholdStatus::HoldsFromStart, None),
        Some(n) => (ThresholdStatus::VerifiedWindow, Some(n - 1)),
    };
    let failure_witness = witness_index.map(|index| FailureWitness {
        index,
        value: match &s.values {
            Some(v) => format_rational(&v[index - s.n_min]),
            None => "not_hyperbolic".into(),
        },
    });
    ThresholdReport {
        predicate: pred,
        onset,
        n_min: s.n_min,
        n_max,
        failure_witness,
        status,
    }
}

/// Onset of `pred` on the window ending at `n_max`. The sequence must reach
/// `n_max` plus the predicate's forward window.
pub fn threshold_search(pred: PredicateSpec, seq: &Sequence, n_max: usize) -> Result<ThresholdReport> {
    let s = scan(&pred, seq, n_max)?;
    Ok(report_from_scan(pred, n_max, s))
}

/// Largest `n_max` the sequence supports for `pred`.
pub fn max_evaluable_index(pred: &PredicateSpec, seq: &Sequence) -> Option<usize> {
    seq.last_index().checked_sub(pred.reach_after())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnchorOnset {
    pub anchor: AnchorConvention,
    pub onset: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table1Cell {
    pub j: usize,
    pub k: usize,
    pub anchor: AnchorConvention,
    pub onset: Option<usize>,
    pub reference: usize,
    pub matches: bool,
    /// Onsets under every anchor, present for cells where the anchor is
    /// scanned.
    pub anchor_scan: Vec<AnchorOnset>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table1 {
    pub j_max: usize,
    pub k_max: usize,
    pub ceiling: usize,
    pub cells: Vec<Table1Cell>,
}

fn table_header(kind: &str, ceiling: usize) -> String {
    format!("# {kind} ceiling={ceiling}\n")
}

impl Table1 {
    pub fn all_match(&self) -> bool {
        self.cells.iter().all(|c| c.matches)
    }

    pub fn cell(&self, j: usize, k: usize) -> Option<&Table1Cell> {
        self.cells.iter().find(|c| c.j == j && c.k == k)
    }

    pub fn to_csv(&self) -> String {
        let mut out = table_header("table1 strict=gt0", self.ceiling);
        out.push_str("j,k,anchor,strict,onset,reference,match\n");
        for c in &self.cells {
            out.push_str(&format!(
                "{},{},{},true,{},{},{}\n",
                c.j,
                c.k,
                c.anchor,
                c.onset.map_or("none".into(), |n| n.to_string()),
                c.reference,
                c.matches
            ));
        }
        out
    }

    pub fn anchor_map_csv(&self) -> String {
        let mut out = String::from("j,k,anchor,onset,reference,match\n");
        for c in self.cells.iter().filter(|c| !c.anchor_scan.is_empty()) {
            for a in &c.anchor_scan {
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    c.j,
                    c.k,
                    a.anchor,
                    a.onset.map_or("none".into(), |n| n.to_string()),
                    c.reference,
                    a.onset == Some(c.reference)
                ));
            }
        }
        out
    }

    pub fn to_markdown(&self) -> String {
        let mut out = format!("Onsets of T_j^(k)(p(n)) > 0 (ceiling {})\n\n| j \\ k |", self.ceiling);
        for k in 1..=self.k_max {
            out.push_str(&format!(" {k} |"));
        }
        out.push_str("\n|---|");
        out.push_str(&"---:|".repeat(self.k_max));
        out.push('\n');
        for j in 1..=self.j_max {
            out.push_str(&format!("| {j} |"));
            for k in 1..=self.k_max {
                let c = self.cell(j, k).expect("complete grid");
                let shown = c.onset.map_or("none".into(), |n| n.to_string());
                if c.matches {
                    out.push_str(&format!(" {shown} ({}) |", c.anchor));
                } else {
                    out.push_str(&format!(" {shown} ({}, expected {}) |", c.anchor, c.reference));
                }
            }
            out.push('\n');
        }
        let scanned: Vec<&Table1Cell> = self.cells.iter().filter(|c| !c.anchor_scan.is_empty()).collect();
        if !scanned.is_empty() {
            out.push_str("\nAnchor map\n\n| j | k | backward | centered | start | expected |\n|---|---|---:|---:|---:|---:|\n");
            for c in scanned {
                out.push_str(&format!("| {} | {} |", c.j, c.k));
                for a in &c.anchor_scan {
                    out.push_str(&format!(" {} |", a.onset.map_or("none".into(), |n| n.to_string())));
                }
                out.push_str(&format!(" {} |\n", c.reference));
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "ceiling": self.ceiling,
            "strict": true,
            "all_match": self.all_match(),
            "cells": self.cells.iter().map(|c| json!({
                "j": c.j,
                "k": c.k,
                "anchor": c.anchor.name(),
                "onset": c.onset,
                "reference": c.reference,
                "match": c.matches,
                "anchor_scan": c.anchor_scan.iter().map(|a| json!({
                    "anchor": a.anchor.name(),
                    "onset": a.onset,
                })).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Ceiling needed to reproduce the requested part of the first table.
pub fn table1_required_ceiling(j_max: usize, k_max: usize) -> usize {
    (1..=j_max)
        .flat_map(|j| (1..=k_max).map(move |k| REFERENCE_TABLE1[j - 1][k - 1]))
        .max()
        .unwrap_or(0)
        + TABLE_MARGIN
}

fn check_table1_bounds(j_max: usize, k_max: usize) -> Result<()> {
    if !(1..=4).contains(&j_max) || !(1..=4).contains(&k_max) {
        return Err(Error::InvalidParameter(format!(
            "table 1 has j, k in 1..=4 (got j_max={j_max}, k_max={k_max})"
        )));
    }
    Ok(())
}

/// Onsets of `T_j^{(k)} > 0` for `j <= j_max`, `k <= k_max`, using terms up
/// to `ceiling`.
///
/// Iterates are computed once per `j` at the start anchor. Under another
/// anchor the `k`-th iterate is the same sequence with indices moved up by
/// `k · reach_before(j)`, so every anchor's onset comes from one scan.
pub fn reproduce_table1(j_max: usize, k_max: usize, ceiling: usize, seq: &Sequence) -> Result<Table1> {
    check_table1_bounds(j_max, k_max)?;
    let required = table1_required_ceiling(j_max, k_max);
    if seq.last_index() < ceiling || ceiling < required {
        return Err(Error::InsufficientCeiling {
            required,
            given: ceiling.min(seq.last_index()),
        });
    }
    let seq = seq.truncated(ceiling)?;
    let mut cells = Vec::new();
    for j in 1..=j_max {
        let mut level = seq.clone();
        for k in 1..=k_max {
            level = crate::turan::turan_apply(&level, j, AnchorConvention::Start)?;
            let start_onset = suffix_onset(
                level
                    .terms()
                    .iter()
                    .enumerate()
                    .map(|(m, v)| (level.offset() + m, v.is_positive())),
            );
            let shifted = |a: AnchorConvention| start_onset.map(|n| n + k * a.reach_before(j));
            let reference = REFERENCE_TABLE1[j - 1][k - 1];
            let default = AnchorConvention::default_for(j);
            let (anchor, anchor_scan) = if j >= 3 && k >= 2 {
                let scan: Vec<AnchorOnset> = AnchorConvention::ALL
                    .iter()
                    .map(|&a| AnchorOnset {
                        anchor: a,
                        onset: shifted(a),
                    })
                    .collect();
                let chosen = scan
                    .iter()
                    .find(|a| a.onset == Some(reference))
                    .map_or(default, |a| a.anchor);
                (chosen, scan)
            } else {
                (default, vec![])
            };
            let onset = shifted(anchor);
            cells.push(Table1Cell {
                j,
                k,
                anchor,
                onset,
                reference,
                matches: onset == Some(reference),
                anchor_scan,
            });
        }
    }
    Ok(Table1 {
        j_max,
        k_max,
        ceiling,
        cells,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table2 {
    pub ceiling: usize,
    pub reports: Vec<ThresholdReport>,
}

impl Table2 {
    pub fn onsets(&self) -> Vec<Option<usize>> {
        self.reports.iter().map(|r| r.onset).collect()
    }

    pub fn all_match(&self) -> bool {
        self.onsets()
            .iter()
            .zip(REFERENCE_TABLE2)
            .all(|(o, r)| *o == Some(r))
    }

    pub fn to_csv(&self) -> String {
        let mut out = table_header("table2 strict=ge0", self.ceiling);
        out.push_str("j,onset,reference,match,witness_index,witness_value\n");
        for (i, r) in self.reports.iter().enumerate() {
            let (wi, wv) = r
                .failure_witness
                .as_ref()
                .map_or((String::new(), String::new()), |w| (w.index.to_string(), w.value.clone()));
            out.push_str(&format!(
                "{},{},{},{},{wi},{wv}\n",
                i + 1,
                r.onset.map_or("none".into(), |n| n.to_string()),
                REFERENCE_TABLE2[i],
                r.onset == Some(REFERENCE_TABLE2[i])
            ));
        }
        out
    }

    pub fn to_markdown(&self) -> String {
        let n = self.reports.len();
        let mut out = format!("Onsets of L_j(phi_p^(n))(0) >= 0 (ceiling {})\n\n| j |", self.ceiling);
        for j in 1..=n {
            out.push_str(&format!(" {j} |"));
        }
        out.push_str("\n|---|");
        out.push_str(&"---:|".repeat(n));
        out.push_str("\n| onset |");
        for (i, r) in self.reports.iter().enumerate() {
            let shown = r.onset.map_or("none".into(), |n| n.to_string());
            if r.onset == Some(REFERENCE_TABLE2[i]) {
                out.push_str(&format!(" {shown} |"));
            } else {
                out.push_str(&format!(" {shown} (expected {}) |", REFERENCE_TABLE2[i]));
            }
        }
        out.push('\n');
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "ceiling": self.ceiling,
            "strict": false,
            "all_match": self.all_match(),
            "rows": self.reports.iter().enumerate().map(|(i, r)| {
                let mut v = r.to_json();
                v["j"] = json!(i + 1);
                v["reference"] = json!(REFERENCE_TABLE2[i]);
                v
            }).collect::<Vec<_>>(),
        })
    }
}

pub fn table2_required_ceiling(j_max: usize) -> usize {
    REFERENCE_TABLE2[..j_max].iter().copied().max().unwrap_or(0) + TABLE_MARGIN
}

/// Onsets of `L_j(φ_p^{(n)})(0) >= 0` for `j <= j_max`, using terms up to
/// `ceiling`.
pub fn reproduce_table2(j_max: usize, ceiling: usize, seq: &Sequence) -> Result<Table2> {
    if !(1..=10).contains(&j_max) {
        return Err(Error::InvalidParameter(format!("table 2 has j in 1..=10 (got {j_max})")));
    }
    let required = table2_required_ceiling(j_max);
    if seq.last_index() < ceiling || ceiling < required {
        return Err(Error::InsufficientCeiling {
            required,
            given: ceiling.min(seq.last_index()),
        });
    }
    let reports = (1..=j_max)
        .map(|j| threshold_search(PredicateSpec::laguerre(j), seq, ceiling - 2 * j))
        .collect::<Result<Vec<_>>>()?;
    Ok(Table2 { ceiling, reports })
}

/// `onset / ((6/π²) (jk)² (ln jk)²)`; `None` where `jk = 1` or the onset is
/// missing.
pub fn asymptotic_ratio(j: usize, k: usize, onset: Option<usize>) -> Option<f64> {
    let jk = (j * k) as f64;
    let scale = 6.0 / (std::f64::consts::PI * std::f64::consts::PI) * jk * jk * jk.ln() * jk.ln();
    match onset {
        Some(n) if scale > 0.0 => Some(n as f64 / scale),
        _ => None,
    }
}

/// Ratio grid for a computed first table, row-major.
pub fn asymptotic_ratios(table: &Table1) -> Vec<(usize, usize, Option<f64>)> {
    table
        .cells
        .iter()
        .map(|c| (c.j, c.k, asymptotic_ratio(c.j, c.k, c.onset)))
        .collect()
}
