//! Direct probes of the two conjectures and of individual records, outside
//! the scale presets.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::records::{conjecture_1, run_lengths};
use super::{evaluate, registry, Counterexample, FormOutcome, Relation, Scale, Value};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub name: String,
    pub bounds: BTreeMap<String, i64>,
    pub points: usize,
    pub failures: usize,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_counterexample: Option<Counterexample>,
    /// Whether every failure lies outside the restricted range, if one is
    /// known.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub holds_when_restricted: Option<bool>,
}

fn probe(
    name: &str,
    params: &[&str],
    bounds: &[i64],
    points: Vec<Vec<i64>>,
    eval: fn(&[i64]) -> Vec<Value>,
    restricted: Option<fn(&[i64]) -> bool>,
) -> ConjectureReport {
    let failed: Vec<Option<Vec<Value>>> = points
        .par_iter()
        .map(|p| {
            let values = eval(p);
            (!Relation::Equal.holds(&values)).then_some(values)
        })
        .collect();
    let failing: Vec<(&Vec<i64>, Vec<Value>)> = points
        .iter()
        .zip(failed)
        .filter_map(|(p, f)| f.map(|values| (p, values)))
        .collect();
    let first_counterexample = failing.first().map(|(p, values)| Counterexample {
        point: params
            .iter()
            .map(|s| s.to_string())
            .zip(p.iter().copied())
            .collect(),
        values: values.iter().map(Value::to_string).collect(),
    });
    ConjectureReport {
        name: name.to_string(),
        bounds: params
            .iter()
            .map(|s| format!("max_{s}"))
            .zip(bounds.iter().copied())
            .collect(),
        points: points.len(),
        failures: failing.len(),
        holds: failing.is_empty(),
        first_counterexample,
        holds_when_restricted: restricted.map(|keep| failing.iter().all(|(p, _)| !keep(p))),
    }
}

/// The closed form for `a_s(r,n)` over `1 ≤ s,r,n` up to the given bounds.
pub fn check_conjecture_1(max_s: i64, max_r: i64, max_n: i64) -> ConjectureReport {
    let mut points = Vec::new();
    for s in 1..=max_s {
        for r in 1..=max_r {
            for n in 1..=max_n {
                points.push(vec![s, r, n]);
            }
        }
    }
    probe(
        "cumulative-closed-form",
        &["s", "r", "n"],
        &[max_s, max_r, max_n],
        points,
        conjecture_1,
        Some(|p| p[0] <= p[1] + 1),
    )
}

/// Runs of exactly `l` copies of `k`, against enumeration, for `kl ≤ n ≤ max_n`.
pub fn check_runs_conjecture(max_n: i64) -> ConjectureReport {
    let mut points = Vec::new();
    for n in 1..=max_n {
        for k in 1..=n {
            for l in 1..=n / k {
                points.push(vec![n, k, l]);
            }
        }
    }
    probe(
        "run-lengths",
        &["n", "k", "l"],
        &[max_n],
        points,
        run_lengths,
        None,
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeReport {
    pub id: String,
    pub citation: String,
    pub scale: Scale,
    /// The printed form first, then the correction and candidates.
    pub forms: Vec<FormOutcome>,
}

/// Every reading of one record, evaluated whether or not the printed form
/// holds.
pub fn erratum_probe(id: &str, scale: Scale) -> Option<ProbeReport> {
    let record = registry().iter().find(|r| r.id == id)?;
    let forms = std::iter::once(&record.printed)
        .chain(&record.correction)
        .chain(&record.candidates)
        .map(|f| evaluate(f, record.params, scale).0)
        .collect();
    Some(ProbeReport {
        id: record.id.to_string(),
        citation: record.citation.to_string(),
        scale,
        forms,
    })
}
