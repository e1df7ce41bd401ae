//! Verification runner behind the `a2l2` binary.
//!
//! [`run_checks`] executes the registered checks for one rank in dependency
//! order and collects a [`Report`]; [`render_report`] turns it into text or
//! byte-stable JSON. [`dump_object`] prints individual symbolic objects.

mod checks;
mod dump;

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use a2l2_core::scalar::fmt_scalar;
use a2l2_core::vacuum::problem_level;
use a2l2_core::Scalar;

pub use checks::REGISTRY;
pub use dump::{classify, dump_object, DumpObject};

/// Default upper bound on `l`; `A2L2_MAX_L` overrides it.
pub const DEFAULT_MAX_L: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    RankOutOfRange { l: usize, max: usize },
    UnknownCheck(String),
    UnknownObject(String),
    Core(a2l2_core::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::RankOutOfRange { l, max } => write!(f, "l = {l} is outside 1..={max}"),
            CliError::UnknownCheck(id) => {
                let known: Vec<&str> = REGISTRY.iter().map(|c| c.id).collect();
                write!(f, "unknown check id `{id}`; known: {}", known.join(", "))
            }
            CliError::UnknownObject(s) => {
                write!(
                    f,
                    "unknown object `{s}`; known: singular, zhu-image, v1, polys, weights"
                )
            }
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<a2l2_core::Error> for CliError {
    fn from(e: a2l2_core::Error) -> Self {
        CliError::Core(e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub status: Status,
    pub elapsed_ms: u64,
    pub details: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub l: usize,
    pub level: String,
    pub overall: Status,
    pub checks: Vec<CheckResult>,
}

/// Which checks to run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selection {
    All,
    Ids(Vec<String>),
}

impl Selection {
    /// Parses `all` or a comma-separated list of ids.
    pub fn parse(s: &str) -> Self {
        if s.trim() == "all" {
            Selection::All
        } else {
            Selection::Ids(
                s.split(',')
                    .map(|x| x.trim().to_string())
                    .filter(|x| !x.is_empty())
                    .collect(),
            )
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct RunOptions {
    /// Record wall-clock times; off by default so that reports are
    /// reproducible byte for byte.
    pub timings: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub fn max_l() -> usize {
    std::env::var("A2L2_MAX_L")
        .ok()
        .and_then(|s| s.parse().ok())
        .filter(|&m| m >= 1)
        .unwrap_or(DEFAULT_MAX_L)
}

pub fn check_rank(l: usize) -> Result<(), CliError> {
    let max = max_l();
    if (1..=max).contains(&l) {
        Ok(())
    } else {
        Err(CliError::RankOutOfRange { l, max })
    }
}

/// Exact scalar as JSON: integers as numbers, everything else as `"p/q"`.
pub fn scalar_json(x: &Scalar) -> Value {
    if x.is_integer() {
        if let Ok(n) = i64::try_from(x.to_integer()) {
            return Value::from(n);
        }
    }
    Value::from(fmt_scalar(x))
}

pub fn run_checks(l: usize, selection: &Selection) -> Result<Report, CliError> {
    run_checks_with(l, selection, RunOptions::default())
}

pub fn run_checks_with(l: usize, selection: &Selection, opts: RunOptions) -> Result<Report, CliError> {
    check_rank(l)?;
    let wanted: Vec<&checks::Check> = match selection {
        Selection::All => REGISTRY.iter().collect(),
        Selection::Ids(ids) => {
            for id in ids {
                if !REGISTRY.iter().any(|c| c.id == id) {
                    return Err(CliError::UnknownCheck(id.clone()));
                }
            }
            REGISTRY.iter().filter(|c| ids.iter().any(|id| id == c.id)).collect()
        }
    };

    Ok(run_list(l, &wanted, opts))
}

fn run_list(l: usize, wanted: &[&checks::Check], opts: RunOptions) -> Report {
    let ctx = checks::Context::new(l);
    let mut status: BTreeMap<&str, Status> = BTreeMap::new();
    let mut results = Vec::new();
    for &check in wanted {
        let blocked: Vec<&str> = check
            .deps
            .iter()
            .copied()
            .filter(|d| matches!(status.get(d), Some(Status::Fail | Status::Skip)))
            .collect();
        let start = Instant::now();
        let (st, details) = if blocked.is_empty() {
            match (check.run)(&ctx) {
                Ok(d) => (Status::Pass, d),
                Err(checks::Failure(d)) => (Status::Fail, d),
            }
        } else {
            (Status::Skip, serde_json::json!({ "blocked_by": blocked }))
        };
        let elapsed_ms = if opts.timings {
            start.elapsed().as_millis() as u64
        } else {
            0
        };
        status.insert(check.id, st);
        results.push(CheckResult {
            id: check.id.to_string(),
            status: st,
            elapsed_ms,
            details,
        });
    }
    let overall = if results.iter().any(|r| r.status == Status::Fail) {
        Status::Fail
    } else {
        Status::Pass
    };
    Report {
        l,
        level: fmt_scalar(&problem_level(l)),
        overall,
        checks: results,
    }
}

pub fn render_report(r: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(r).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut out = format!("l = {}, level = {}\n", r.l, r.level);
            let width = r.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
            for c in &r.checks {
                out.push_str(&format!(
                    "{:<4} {:<width$}  {}\n",
                    c.status.as_str().to_uppercase(),
                    c.id,
                    c.details
                ));
            }
            out.push_str(&format!("overall: {}\n", r.overall.as_str()));
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use a2l2_core::scalar::rat;

    #[test]
    fn selection_parsing() {
        assert_eq!(Selection::parse("all"), Selection::All);
        assert_eq!(
            Selection::parse("singular, nu-fixed"),
            Selection::Ids(vec!["singular".into(), "nu-fixed".into()])
        );
    }

    #[test]
    fn scalars_stay_exact() {
        assert_eq!(scalar_json(&rat(4, 2)), Value::from(2));
        assert_eq!(scalar_json(&rat(-5, 2)), Value::from("-5/2"));
    }

    #[test]
    fn rank_bounds() {
        assert!(matches!(check_rank(0), Err(CliError::RankOutOfRange { .. })));
        assert!(check_rank(1).is_ok());
    }

    #[test]
    fn unknown_check_is_rejected() {
        let e = run_checks(1, &Selection::Ids(vec!["nope".into()])).unwrap_err();
        assert_eq!(e, CliError::UnknownCheck("nope".into()));
    }

    fn failing(_: &checks::Context) -> Result<Value, checks::Failure> {
        Err(checks::Failure(serde_json::json!({ "witness": "forced" })))
    }

    fn passing(_: &checks::Context) -> Result<Value, checks::Failure> {
        Ok(Value::Null)
    }

    #[test]
    fn downstream_of_failure_is_skipped() {
        let list = [
            checks::Check {
                id: "a",
                deps: &[],
                run: failing,
            },
            checks::Check {
                id: "b",
                deps: &["a"],
                run: passing,
            },
            checks::Check {
                id: "c",
                deps: &["b"],
                run: passing,
            },
            checks::Check {
                id: "d",
                deps: &[],
                run: passing,
            },
        ];
        let refs: Vec<&checks::Check> = list.iter().collect();
        let r = run_list(1, &refs, RunOptions::default());
        let st: Vec<Status> = r.checks.iter().map(|c| c.status).collect();
        assert_eq!(st, [Status::Fail, Status::Skip, Status::Skip, Status::Pass]);
        assert_eq!(r.overall, Status::Fail);
    }

    #[test]
    fn level_string() {
        let r = run_checks(2, &Selection::Ids(vec!["g1-dim".into()])).unwrap();
        assert_eq!(r.level, "-5/2");
    }
}
