//! A registry of the identities, propositions and conjectures about the
//! tiling sequences, each encoded as a checkable predicate over a finite
//! parameter grid.
//!
//! A record's printed form is evaluated at every grid point. An identity
//! whose printed form fails is reported `fails-as-printed` only when its
//! corrected form holds on the corrected domain; otherwise it is
//! `unresolved`. Conjectures are never `verified`: they hold up to a recorded
//! bound or are `refuted`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::LazyLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use regex::Regex;
use serde::{Deserialize, Serialize};

use crate::sequences::NonIntegral;
use crate::tiling::OracleError;

mod probes;
mod records;

pub use probes::{
    check_conjecture_1, check_runs_conjecture, erratum_probe, ConjectureReport, ProbeReport,
};
pub use records::registry;

/// The value of one side of a claim at one point.
#[derive(Clone, Debug)]
pub enum Value {
    Num(BigRational),
    /// No value: a divergent sum, a series that cannot be expanded, or an
    /// oracle refusal. Never equal to anything.
    Undefined(String),
}

impl Value {
    pub fn undefined(why: impl Into<String>) -> Self {
        Value::Undefined(why.into())
    }
}

impl PartialEq for Value {
    fn eq(&self, other: &Self) -> bool {
        matches!((self, other), (Value::Num(a), Value::Num(b)) if a == b)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Num(q) => write!(f, "{q}"),
            Value::Undefined(why) => write!(f, "undefined ({why})"),
        }
    }
}

impl From<BigRational> for Value {
    fn from(q: BigRational) -> Self {
        Value::Num(q)
    }
}

impl From<BigInt> for Value {
    fn from(n: BigInt) -> Self {
        Value::Num(BigRational::from_integer(n))
    }
}

impl From<i64> for Value {
    fn from(n: i64) -> Self {
        BigInt::from(n).into()
    }
}

impl From<Result<BigInt, NonIntegral>> for Value {
    fn from(r: Result<BigInt, NonIntegral>) -> Self {
        match r {
            Ok(n) => n.into(),
            Err(NonIntegral(q)) => q.into(),
        }
    }
}

impl From<Result<BigInt, OracleError>> for Value {
    fn from(r: Result<BigInt, OracleError>) -> Self {
        match r {
            Ok(n) => n.into(),
            Err(e) => Value::undefined(e.to_string()),
        }
    }
}

/// How the values produced at a point must relate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    /// All values equal (a chain `x = y = z`).
    Equal,
    /// Values nondecreasing (a chain `x ≤ y ≤ z`).
    Nondecreasing,
}

impl Relation {
    fn holds(self, values: &[Value]) -> bool {
        values.windows(2).all(|w| match self {
            Relation::Equal => w[0] == w[1],
            Relation::Nondecreasing => {
                matches!((&w[0], &w[1]), (Value::Num(a), Value::Num(b)) if a <= b)
            }
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scale {
    Small,
    Default,
    Large,
}

impl Scale {
    /// Parameter bound for formula-only checks.
    pub fn bound(self) -> i64 {
        match self {
            Scale::Small => 8,
            Scale::Default => 12,
            Scale::Large => 24,
        }
    }

    /// Parameter bound for checks that enumerate objects.
    pub fn oracle_bound(self) -> i64 {
        match self {
            Scale::Small => 8,
            Scale::Default => 12,
            Scale::Large => 16,
        }
    }
}

impl std::str::FromStr for Scale {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "small" => Ok(Scale::Small),
            "default" => Ok(Scale::Default),
            "large" => Ok(Scale::Large),
            _ => Err(format!(
                "unknown scale `{s}` (expected small, default or large)"
            )),
        }
    }
}

impl fmt::Display for Scale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scale::Small => "small",
            Scale::Default => "default",
            Scale::Large => "large",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Verified,
    FailsAsPrinted,
    Conjecture,
    Refuted,
    Unresolved,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Verified => "verified",
            Status::FailsAsPrinted => "fails-as-printed",
            Status::Conjecture => "conjecture",
            Status::Refuted => "refuted",
            Status::Unresolved => "unresolved",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Identity,
    Conjecture,
}

pub type Domain = fn(Scale) -> Vec<Vec<i64>>;
pub type Eval = fn(&[i64]) -> Vec<Value>;

/// A claim evaluated over a domain: the values at each point must satisfy
/// the relation.
#[derive(Clone)]
pub struct Form {
    pub name: &'static str,
    /// The claim in LaTeX, in our own notation.
    pub statement: &'static str,
    pub domain: Domain,
    pub eval: Eval,
    pub relation: Relation,
}

#[derive(Clone)]
pub struct IdentityRecord {
    pub id: &'static str,
    /// A fragment of the displayed formula this record encodes, verbatim.
    pub citation: &'static str,
    pub kind: Kind,
    pub params: &'static [&'static str],
    pub printed: Form,
    pub correction: Option<Form>,
    /// Further readings probed against the oracle when the printed form
    /// fails. They may fail too.
    pub candidates: Vec<Form>,
    pub note: Option<&'static str>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub point: BTreeMap<String, i64>,
    pub values: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormOutcome {
    pub name: String,
    pub statement: String,
    pub holds: bool,
    pub points: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

fn evaluate(form: &Form, params: &[&str], scale: Scale) -> (FormOutcome, i64) {
    let points = (form.domain)(scale);
    let failures: Vec<Option<Vec<Value>>> = points
        .par_iter()
        .map(|p| {
            let values = (form.eval)(p);
            (!form.relation.holds(&values)).then_some(values)
        })
        .collect();
    let counterexample = points
        .iter()
        .zip(failures)
        .find_map(|(p, fail)| fail.map(|values| (p, values)))
        .map(|(p, values)| Counterexample {
            point: params
                .iter()
                .zip(p)
                .map(|(name, &v)| (name.to_string(), v))
                .collect(),
            values: values.iter().map(Value::to_string).collect(),
        });
    let bound = points.iter().flatten().copied().max().unwrap_or(0);
    (
        FormOutcome {
            name: form.name.to_string(),
            statement: form.statement.to_string(),
            holds: counterexample.is_none(),
            points: points.len(),
            counterexample,
        },
        bound,
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecordReport {
    pub id: String,
    pub citation: String,
    pub kind: Kind,
    pub expected: Option<Status>,
    pub status: Status,
    pub points: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    /// Largest parameter value checked; reported for conjectures.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub correction: Option<FormOutcome>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub candidates: Vec<FormOutcome>,
    /// Names of the readings that hold, when the printed form does not.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub resolution: Option<String>,
    pub matches_expected: bool,
}

impl IdentityRecord {
    pub fn evaluate(&self, scale: Scale, expected: Option<Status>) -> RecordReport {
        let (printed, bound) = evaluate(&self.printed, self.params, scale);
        let fails = !printed.holds;
        let correction = self
            .correction
            .as_ref()
            .filter(|_| fails)
            .map(|f| evaluate(f, self.params, scale).0);
        let candidates: Vec<FormOutcome> = if fails {
            self.candidates
                .iter()
                .map(|f| evaluate(f, self.params, scale).0)
                .collect()
        } else {
            Vec::new()
        };
        let corrected = correction.as_ref().is_some_and(|c| c.holds);
        let status = match (self.kind, fails, corrected) {
            (Kind::Identity, false, _) => Status::Verified,
            (Kind::Identity, true, true) => Status::FailsAsPrinted,
            (Kind::Identity, true, false) => Status::Unresolved,
            (Kind::Conjecture, false, _) => Status::Conjecture,
            (Kind::Conjecture, true, _) => Status::Refuted,
        };
        let resolution = fails.then(|| {
            let names: Vec<&str> = correction
                .iter()
                .chain(&candidates)
                .filter(|f| f.holds)
                .map(|f| f.name.as_str())
                .collect();
            if names.is_empty() {
                "none".to_string()
            } else {
                names.join(", ")
            }
        });
        RecordReport {
            id: self.id.to_string(),
            citation: self.citation.to_string(),
            kind: self.kind,
            expected,
            status,
            points: printed.points,
            counterexample: printed.counterexample,
            bound: (self.kind == Kind::Conjecture).then_some(bound),
            note: self.note.map(str::to_string),
            correction,
            candidates,
            resolution,
            matches_expected: expected == Some(status),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub records: usize,
    pub matched: usize,
    pub mismatched: Vec<String>,
    pub verified: usize,
    pub fails_as_printed: usize,
    pub conjecture: usize,
    pub refuted: usize,
    pub unresolved: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub scale: Scale,
    pub filter: Option<String>,
    pub records: Vec<RecordReport>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn all_match(&self) -> bool {
        self.summary.mismatched.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Deserialize)]
struct ExpectedManifest {
    #[allow(dead_code)]
    schema: u32,
    #[allow(dead_code)]
    verified_through: Scale,
    statuses: BTreeMap<String, Status>,
}

static EXPECTED: LazyLock<BTreeMap<String, Status>> = LazyLock::new(|| {
    let manifest: ExpectedManifest =
        serde_json::from_str(include_str!("../../fixtures/expected_status.json"))
            .expect("expected-status manifest parses");
    manifest.statuses
});

/// Expected statuses from the versioned manifest.
pub fn expected_statuses() -> &'static BTreeMap<String, Status> {
    &EXPECTED
}

/// Translates a shell-style glob (`*`, `?`) into an anchored regex.
pub fn glob_regex(glob: &str) -> Regex {
    let mut pattern = String::from("^");
    for c in glob.chars() {
        match c {
            '*' => pattern.push_str(".*"),
            '?' => pattern.push('.'),
            c => pattern.push_str(&regex::escape(&c.to_string())),
        }
    }
    pattern.push('$');
    Regex::new(&pattern).expect("escaped glob is a valid regex")
}

/// Evaluates every record whose id matches `filter`, in parallel. Records
/// come out sorted by id.
pub fn run_registry(scale: Scale, filter: Option<&str>) -> VerificationReport {
    let matcher = filter.map(glob_regex);
    let expected = expected_statuses();
    let mut records: Vec<RecordReport> = registry()
        .par_iter()
        .filter(|r| matcher.as_ref().map_or(true, |m| m.is_match(r.id)))
        .map(|r| r.evaluate(scale, expected.get(r.id).copied()))
        .collect();
    records.sort_by(|a, b| a.id.cmp(&b.id));
    let count = |s: Status| records.iter().filter(|r| r.status == s).count();
    let summary = Summary {
        records: records.len(),
        matched: records.iter().filter(|r| r.matches_expected).count(),
        mismatched: records
            .iter()
            .filter(|r| !r.matches_expected)
            .map(|r| r.id.clone())
            .collect(),
        verified: count(Status::Verified),
        fails_as_printed: count(Status::FailsAsPrinted),
        conjecture: count(Status::Conjecture),
        refuted: count(Status::Refuted),
        unresolved: count(Status::Unresolved),
    };
    VerificationReport {
        schema: 1,
        scale,
        filter: filter.map(str::to_string),
        records,
        summary,
    }
}

#[cfg(test)]
mod tests;
