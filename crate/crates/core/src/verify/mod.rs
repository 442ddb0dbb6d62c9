//! Re-deriving closed-form results by exact search.
//!
//! A [`TheoremCase`] names a statement and a sweep of instances; running it
//! solves every instance and compares against the formula. Budget overruns
//! mark single checks as skipped, never as failures. Reports are assembled
//! in registry order and carry no timing data in their JSON form, so two
//! runs with the same options serialize identically.

mod properties;
mod registry;

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::random::InstanceRng;
use crate::solver::{self, SolverConfig};

pub use properties::{brute_force_infection_number, property_cases, property_suite};
pub use registry::theorem_registry;

const MAX_FAILURE_RECORDS: usize = 10;
const MAX_SKIP_REASONS: usize = 5;

/// Solver access for checks.
#[derive(Debug, Clone, Copy)]
pub struct Ctx {
    pub config: SolverConfig,
}

impl Ctx {
    pub fn i(&self, h: &Hypergraph) -> Result<usize> {
        self.im(h, 1)
    }

    pub fn im(&self, h: &Hypergraph, m: usize) -> Result<usize> {
        Ok(solver::infection_number_with(h, m, &self.config)?.infection_number)
    }

    pub fn z(&self, g: &Hypergraph) -> Result<usize> {
        Ok(solver::zero_forcing_number_with(g, &self.config)?.infection_number)
    }
}

/// Outcome of one check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check {
    Pass(Option<String>),
    Fail(String),
}

impl Check {
    pub fn eq(what: &str, actual: usize, expected: usize) -> Check {
        if actual == expected {
            Check::Pass(Some(format!("{what} = {actual}")))
        } else {
            Check::Fail(format!("{what}: got {actual}, expected {expected}"))
        }
    }

    pub fn le(what: &str, lhs: usize, rhs: usize) -> Check {
        if lhs <= rhs {
            Check::Pass(None)
        } else {
            Check::Fail(format!("{what}: {lhs} > {rhs}"))
        }
    }

    pub fn holds(cond: bool, detail: impl FnOnce() -> String) -> Check {
        if cond {
            Check::Pass(None)
        } else {
            Check::Fail(detail())
        }
    }

    /// First failure wins; observations are joined.
    pub fn all(checks: impl IntoIterator<Item = Check>) -> Check {
        let mut notes = Vec::new();
        for c in checks {
            match c {
                Check::Fail(_) => return c,
                Check::Pass(Some(s)) => notes.push(s),
                Check::Pass(None) => {}
            }
        }
        Check::Pass((!notes.is_empty()).then(|| notes.join("; ")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FailureRecord {
    pub label: String,
    pub detail: String,
    /// The hypergraphs involved, in the JSON file format.
    pub instances: Vec<Value>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseReport {
    pub id: &'static str,
    pub tags: Vec<&'static str>,
    pub statement: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
    pub status: Status,
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub observations: Vec<String>,
    pub failures: Vec<FailureRecord>,
    /// Instances refuting an open statement; recorded, not counted as failures.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub counterexamples: Vec<FailureRecord>,
    pub skip_reasons: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CaseReport {
    /// Observation recorded under `label`, if any.
    pub fn observation(&self, label: &str) -> Option<&str> {
        let prefix = format!("{label}: ");
        self.observations.iter().find_map(|o| o.strip_prefix(&prefix))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub cases: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: &'static str,
    pub seed: u64,
    pub budget: u64,
    pub summary: Summary,
    pub cases: Vec<CaseReport>,
}

impl VerificationReport {
    pub fn is_success(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn case(&self, id: &str) -> Option<&CaseReport> {
        self.cases.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// Human-readable table, including per-case wall time.
    pub fn to_pretty(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            out.push_str(&format!(
                "{status:<4}  {:<32} {:>6} checks {:>5} failed {:>5} skipped  {:>8.2}s  {}\n",
                c.id,
                c.checks,
                c.failed,
                c.skipped,
                c.elapsed.as_secs_f64(),
                c.statement
            ));
            for f in &c.failures {
                out.push_str(&format!("        {}: {}\n", f.label, f.detail));
            }
            if !c.counterexamples.is_empty() {
                out.push_str(&format!("        {} counterexamples, first: {}: {}\n", c.counterexamples.len(), c.counterexamples[0].label, c.counterexamples[0].detail));
            }
            if let Some(note) = c.note {
                out.push_str(&format!("        note: {note}\n"));
            }
        }
        let s = &self.summary;
        out.push_str(&format!("{} cases: {} passed, {} failed, {} skipped\n", s.cases, s.passed, s.failed, s.skipped));
        out
    }
}

/// State threaded through one case while it runs.
pub struct CaseRun {
    pub ctx: Ctx,
    seed: u64,
    count: usize,
    checks: usize,
    passed: usize,
    failed: usize,
    skipped: usize,
    observations: Vec<String>,
    failures: Vec<FailureRecord>,
    counterexamples: Vec<FailureRecord>,
    skip_reasons: Vec<String>,
}

pub fn instance_json(h: &Hypergraph) -> Value {
    json!({ "vertices": h.num_vertices(), "edges": h.edge_labels() })
}

impl CaseRun {
    fn new(ctx: Ctx, seed: u64, count: usize) -> Self {
        Self {
            ctx,
            seed,
            count,
            checks: 0,
            passed: 0,
            failed: 0,
            skipped: 0,
            observations: Vec::new(),
            failures: Vec::new(),
            counterexamples: Vec::new(),
            skip_reasons: Vec::new(),
        }
    }

    /// Instances per randomized sweep in the property suite.
    pub fn count(&self) -> usize {
        self.count
    }

    /// Deterministic stream for this case, distinct per `salt`.
    pub fn rng(&self, salt: u64) -> InstanceRng {
        InstanceRng::seed_from_u64(self.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ salt)
    }

    pub fn check(&mut self, label: impl Into<String>, instances: &[&Hypergraph], f: impl FnOnce(&Ctx) -> Result<Check>) {
        self.checks += 1;
        let label = label.into();
        match f(&self.ctx) {
            Ok(Check::Pass(note)) => {
                self.passed += 1;
                if let Some(note) = note {
                    self.observations.push(format!("{label}: {note}"));
                }
            }
            Ok(Check::Fail(detail)) => self.fail(label, detail, instances),
            Err(e @ Error::BudgetExceeded { .. }) => {
                self.skipped += 1;
                let reason = format!("{label}: {e}");
                if self.skip_reasons.len() < MAX_SKIP_REASONS {
                    self.skip_reasons.push(reason);
                }
            }
            Err(e) => self.fail(label, format!("error: {e}"), instances),
        }
    }

    /// Records a plain observation without counting a check.
    pub fn observe(&mut self, text: impl Into<String>) {
        self.observations.push(text.into());
    }

    /// Stores an instance that refutes an open statement.
    pub fn counterexample(&mut self, label: impl Into<String>, detail: impl Into<String>, instances: &[&Hypergraph]) {
        self.counterexamples.push(FailureRecord {
            label: label.into(),
            detail: detail.into(),
            instances: instances.iter().map(|h| instance_json(h)).collect(),
        });
    }

    /// Counts a check as skipped for a reason other than budget.
    pub fn skip(&mut self, label: impl Into<String>, reason: impl Into<String>) {
        self.checks += 1;
        self.skipped += 1;
        if self.skip_reasons.len() < MAX_SKIP_REASONS {
            self.skip_reasons.push(format!("{}: {}", label.into(), reason.into()));
        }
    }

    fn fail(&mut self, label: String, detail: String, instances: &[&Hypergraph]) {
        self.failed += 1;
        if self.failures.len() < MAX_FAILURE_RECORDS {
            self.failures.push(FailureRecord { label, detail, instances: instances.iter().map(|h| instance_json(h)).collect() });
        }
    }
}

/// One machine-checkable statement.
pub struct TheoremCase {
    pub id: &'static str,
    pub tags: &'static [&'static str],
    /// The claim in formula form.
    pub statement: &'static str,
    /// Remarks on known discrepancies, carried into the report.
    pub note: Option<&'static str>,
    run: fn(&mut CaseRun),
}

impl TheoremCase {
    pub(crate) const fn new(id: &'static str, tags: &'static [&'static str], statement: &'static str, run: fn(&mut CaseRun)) -> Self {
        Self { id, tags, statement, note: None, run }
    }

    pub(crate) const fn with_note(mut self, note: &'static str) -> Self {
        self.note = Some(note);
        self
    }

    /// Exact id, id prefix, or tag.
    pub fn matches(&self, filter: &str) -> bool {
        self.id.starts_with(filter) || self.tags.contains(&filter)
    }

    pub fn run(&self, ctx: Ctx, seed: u64, count: usize) -> CaseReport {
        let start = Instant::now();
        let mut run = CaseRun::new(ctx, seed, count);
        (self.run)(&mut run);
        let status = if run.failed > 0 {
            Status::Fail
        } else if run.passed == 0 && run.skipped > 0 {
            Status::Skipped
        } else {
            Status::Pass
        };
        CaseReport {
            id: self.id,
            tags: self.tags.to_vec(),
            statement: self.statement,
            note: self.note,
            status,
            checks: run.checks,
            passed: run.passed,
            failed: run.failed,
            skipped: run.skipped,
            observations: run.observations,
            failures: run.failures,
            counterexamples: run.counterexamples,
            skip_reasons: run.skip_reasons,
            elapsed: start.elapsed(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub filter: Option<String>,
    pub seed: u64,
    pub budget: u64,
    /// Random instances per property case.
    pub count: usize,
    /// Cases run concurrently on this many threads; results keep registry order.
    pub threads: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { filter: None, seed: 0, budget: solver::DEFAULT_BUDGET, count: 200, threads: 1 }
    }
}

pub(crate) fn run_cases(suite: &'static str, cases: &[TheoremCase], opts: &VerifyOptions) -> Result<VerificationReport> {
    let selected: Vec<&TheoremCase> = cases.iter().filter(|c| opts.filter.as_deref().is_none_or(|f| c.matches(f))).collect();
    let ctx = Ctx { config: SolverConfig::default().with_budget(opts.budget) };
    let reports: Vec<CaseReport> = if opts.threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .map_err(|e| Error::InvalidParameters(e.to_string()))?;
        pool.install(|| selected.par_iter().map(|c| c.run(ctx, opts.seed, opts.count)).collect())
    } else {
        selected.iter().map(|c| c.run(ctx, opts.seed, opts.count)).collect()
    };
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    let summary = Summary { cases: reports.len(), passed: count(Status::Pass), failed: count(Status::Fail), skipped: count(Status::Skipped) };
    Ok(VerificationReport { suite, seed: opts.seed, budget: opts.budget, summary, cases: reports })
}

/// Runs the theorem registry.
pub fn run_verification(opts: &VerifyOptions) -> Result<VerificationReport> {
    run_cases("theorems", &theorem_registry(), opts)
}

/// Runs the property cases with the given options.
pub fn run_properties(opts: &VerifyOptions) -> Result<VerificationReport> {
    run_cases("properties", &property_cases(), opts)
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_combinators() {
        assert_eq!(Check::eq("I", 3, 3), Check::Pass(Some("I = 3".into())));
        assert!(matches!(Check::eq("I", 2, 3), Check::Fail(_)));
        assert_eq!(Check::le("b", 2, 3), Check::Pass(None));
        assert!(matches!(Check::all([Check::Pass(None), Check::Fail("x".into())]), Check::Fail(_)));
    }

    #[test]
    fn budget_overrun_is_a_skip() {
        let cases = [TheoremCase::new("tiny", &["t"], "I(K(12,3)) = 10", |run| {
            let h = crate::families::complete(12, 3).unwrap();
            run.check("K(12,3)", &[&h], |ctx| Ok(Check::eq("I", ctx.i(&h)?, 10)));
        })];
        let opts = VerifyOptions { budget: 10, ..Default::default() };
        let report = run_cases("test", &cases, &opts).unwrap();
        assert_eq!(report.cases[0].status, Status::Skipped);
        assert_eq!(report.cases[0].skip_reasons.len(), 1);
        assert!(report.is_success());
        let opts = VerifyOptions { budget: 1000, ..Default::default() };
        assert_eq!(run_cases("test", &cases, &opts).unwrap().cases[0].status, Status::Pass);
    }

    #[test]
    fn failures_keep_instances() {
        let cases = [TheoremCase::new("wrong", &["t"], "I(K4) = 1", |run| {
            let h = crate::families::complete(4, 2).unwrap();
            run.check("K4", &[&h], |ctx| Ok(Check::eq("I", ctx.i(&h)?, 1)));
        })];
        let report = run_cases("test", &cases, &VerifyOptions::default()).unwrap();
        assert!(!report.is_success());
        let f = &report.cases[0].failures[0];
        assert_eq!(f.instances[0]["vertices"], 4);
        assert!(report.to_pretty().contains("FAIL"));
    }
}
