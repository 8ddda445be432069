//! Check reports: named sub-check results with first-failure witnesses.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::linalg::{split_index, Chain, LinMap, LinalgError, Vector};

/// Outcome of one sub-check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// A hypothesis was not met, so the check was not evaluated.
    Skipped,
    /// Evaluated and reported, but not a claim: does not affect the verdict.
    Recorded {
        holds: bool,
    },
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
            Status::Recorded { .. } => "recorded",
        }
    }

    /// Whether the underlying identity held.
    pub fn holds(&self) -> bool {
        matches!(self, Status::Pass | Status::Recorded { holds: true })
    }
}

/// A concrete counterexample: the grades and basis indices of the input
/// tensor, and the two sides evaluated on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub grades: Vec<usize>,
    pub basis: Vec<usize>,
    pub lhs: Vector,
    pub rhs: Vector,
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub suite: String,
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub note: Option<String>,
    /// An earlier sub-check in the same report failed.
    pub tainted: bool,
    pub witness: Option<Witness>,
}

/// Ordered list of sub-check results for one suite.
#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    pub suite: String,
    pub results: Vec<CheckResult>,
}

/// Result of comparing two sides of an identity over all inputs.
#[derive(Clone, Debug)]
pub enum Outcome {
    Holds,
    Witness(Witness),
    /// The two sides could not even be compared (inconsistent dimensions).
    Mismatch(String),
}

impl Outcome {
    pub fn holds(&self) -> bool {
        matches!(self, Outcome::Holds)
    }
}

impl From<LinalgError> for Outcome {
    fn from(e: LinalgError) -> Self {
        Outcome::Mismatch(e.to_string())
    }
}

/// Compares `lhs` and `rhs` as maps out of `⊗ src_dims`; on the first differing
/// column the witness records the split basis index and both image columns.
pub fn compare(grades: &[usize], src_dims: &[usize], lhs: Result<LinMap, LinalgError>, rhs: Result<LinMap, LinalgError>) -> Outcome {
    let (lhs, rhs) = match (lhs, rhs) {
        (Ok(l), Ok(r)) => (l, r),
        (Err(e), _) | (_, Err(e)) => return e.into(),
    };
    if lhs.src_dim() != rhs.src_dim() || lhs.dst_dim() != rhs.dst_dim() {
        return Outcome::Mismatch(format!("sides have shapes {}x{} and {}x{}", lhs.dst_dim(), lhs.src_dim(), rhs.dst_dim(), rhs.src_dim()));
    }
    match lhs.first_difference(&rhs) {
        None => Outcome::Holds,
        Some(col) => Outcome::Witness(Witness {
            grades: grades.to_vec(),
            basis: split_index(col, src_dims),
            lhs: lhs.column(col),
            rhs: rhs.column(col),
        }),
    }
}

/// Compares two composite maps out of `⊗ src_dims` whose codomains are the
/// components `lhs_grades` and `rhs_grades`. Different target components are
/// reported as a mismatch rather than compared entrywise.
pub fn compare_chains(
    grades: &[usize],
    src_dims: &[usize],
    lhs_grades: &[usize],
    lhs: &Chain,
    rhs_grades: &[usize],
    rhs: &Chain,
) -> Outcome {
    if lhs_grades != rhs_grades {
        return Outcome::Mismatch(format!("at grades {grades:?} the sides land in components {lhs_grades:?} and {rhs_grades:?}"));
    }
    compare(grades, src_dims, lhs.build(), rhs.build())
}

/// Evaluates `eval` on every tuple and returns the first failure in tuple order.
pub fn first_failure<T, F>(tuples: &[T], eval: F) -> Outcome
where
    T: Sync,
    F: Fn(&T) -> Outcome + Sync + Send,
{
    tuples.par_iter().map(eval).find_first(|o| !o.holds()).unwrap_or(Outcome::Holds)
}

/// [`first_failure`] over all `k`-tuples of `0..n`.
pub fn over<F>(n: usize, k: usize, eval: F) -> Outcome
where
    F: Fn(&[usize]) -> Outcome + Sync + Send,
{
    first_failure(&tuples(n, k), |t| eval(t))
}

/// All tuples in `0..n` of length `k`, lexicographically.
pub fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

impl CheckReport {
    pub fn new(suite: &str) -> Self {
        CheckReport { suite: suite.to_string(), results: Vec::new() }
    }

    fn push(&mut self, id: &str, anchor: &str, status: Status, note: Option<String>, witness: Option<Witness>) {
        let tainted = self.results.iter().any(|r| r.status == Status::Fail);
        self.results.push(CheckResult {
            suite: self.suite.clone(),
            id: id.to_string(),
            anchor: anchor.to_string(),
            status,
            note,
            tainted,
            witness,
        });
    }

    /// Records an identity check as pass or fail.
    pub fn record(&mut self, id: &str, anchor: &str, outcome: Outcome) {
        match outcome {
            Outcome::Holds => self.push(id, anchor, Status::Pass, None, None),
            Outcome::Witness(w) => self.push(id, anchor, Status::Fail, None, Some(w)),
            Outcome::Mismatch(m) => self.push(id, anchor, Status::Fail, Some(m), None),
        }
    }

    /// Records an identity that is reported but not asserted.
    pub fn observe(&mut self, id: &str, anchor: &str, outcome: Outcome) {
        match outcome {
            Outcome::Holds => self.push(id, anchor, Status::Recorded { holds: true }, None, None),
            Outcome::Witness(w) => self.push(id, anchor, Status::Recorded { holds: false }, None, Some(w)),
            Outcome::Mismatch(m) => self.push(id, anchor, Status::Recorded { holds: false }, Some(m), None),
        }
    }

    /// Records a boolean claim with an explanatory note.
    pub fn assert(&mut self, id: &str, anchor: &str, ok: bool, note: impl Into<String>) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.push(id, anchor, status, Some(note.into()), None);
    }

    pub fn skip(&mut self, id: &str, anchor: &str, reason: impl Into<String>) {
        self.push(id, anchor, Status::Skipped, Some(reason.into()), None);
    }

    /// Appends another report's results, keeping their suite names.
    pub fn extend(&mut self, other: CheckReport) {
        let failed_before = self.results.iter().any(|r| r.status == Status::Fail);
        for mut r in other.results {
            r.tainted |= failed_before;
            self.results.push(r);
        }
    }

    /// No sub-check failed.
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn get(&self, id: &str) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.id == id)
    }

    /// Whether the named sub-check holds (passed or recorded as holding).
    pub fn holds(&self, id: &str) -> bool {
        self.get(id).is_some_and(|r| r.status.holds())
    }

    pub fn to_json(&self) -> Vec<CheckJson> {
        self.results.iter().map(CheckJson::from).collect()
    }
}

/// Serialized form of a witness; scalars are rendered as strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub grades: Vec<usize>,
    pub basis: Vec<usize>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckJson {
    pub suite: String,
    pub id: String,
    pub anchor: String,
    pub status: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default)]
    pub tainted: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
}

impl From<&CheckResult> for CheckJson {
    fn from(r: &CheckResult) -> Self {
        let strings = |v: &Vector| v.entries().iter().map(|s| s.to_string()).collect();
        CheckJson {
            suite: r.suite.clone(),
            id: r.id.clone(),
            anchor: r.anchor.clone(),
            status: r.status.label().to_string(),
            pass: r.status.holds(),
            note: r.note.clone(),
            tainted: r.tainted,
            witness: r.witness.as_ref().map(|w| WitnessJson {
                grades: w.grades.clone(),
                basis: w.basis.clone(),
                lhs: strings(&w.lhs),
                rhs: strings(&w.rhs),
            }),
        }
    }
}

/// Reproducibility header embedded in every report file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub inputs: Vec<String>,
    pub field: String,
    pub suites: Vec<String>,
    pub seed: u64,
    pub timestamp: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    pub manifest: RunManifest,
    pub checks: Vec<CheckJson>,
}

impl ReportFile {
    pub fn new(manifest: RunManifest, reports: &[CheckReport]) -> Self {
        ReportFile { manifest, checks: reports.iter().flat_map(CheckReport::to_json).collect() }
    }

    /// Any check with status `fail`.
    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == "fail")
    }
}

#[derive(Debug, thiserror::Error)]
#[error("malformed report: {0}")]
pub struct MalformedReport(pub String);

/// Renders a report file as a plain-text table, one line per check.
pub fn render(json: &str) -> Result<String, MalformedReport> {
    let file: ReportFile = serde_json::from_str(json).map_err(|e| MalformedReport(e.to_string()))?;
    for c in &file.checks {
        if !matches!(c.status.as_str(), "pass" | "fail" | "skipped" | "recorded") {
            return Err(MalformedReport(format!("unknown status {:?} in check {}", c.status, c.id)));
        }
    }
    let m = &file.manifest;
    let mut out = String::new();
    let _ = writeln!(out, "command: {}  field: {}  seed: {}  at: {}", m.command, m.field, m.seed, m.timestamp);
    if !m.inputs.is_empty() {
        let _ = writeln!(out, "inputs: {}", m.inputs.join(", "));
    }
    let _ = writeln!(out, "{:<8} {:<22} {:<34} anchor", "status", "suite", "check");
    for c in &file.checks {
        let status = match c.status.as_str() {
            "recorded" if c.pass => "holds",
            "recorded" => "differs",
            s => s,
        };
        let taint = if c.tainted { " [tainted]" } else { "" };
        let _ = writeln!(out, "{:<8} {:<22} {:<34} {}{}", status.to_uppercase(), c.suite, c.id, c.anchor, taint);
        if let Some(note) = &c.note {
            let _ = writeln!(out, "         note: {note}");
        }
        if let Some(w) = &c.witness {
            let _ = writeln!(
                out,
                "         witness grades={:?} basis={:?}\n           lhs=[{}]\n           rhs=[{}]",
                w.grades,
                w.basis,
                w.lhs.join(", "),
                w.rhs.join(", ")
            );
        }
    }
    Ok(out)
}
