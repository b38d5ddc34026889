use std::collections::BTreeMap;
use std::io::Write;

use serde::{Deserialize, Serialize};

use super::config::VerifyConfig;
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// The check had nothing to measure (e.g. a constant symbol); counted
    /// as neither pass nor failure.
    Degenerate,
}

/// One row of a threshold sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub lambda: f64,
    pub numerator: f64,
    pub denominator: f64,
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InequalityReport {
    pub name: String,
    pub verdict: Verdict,
    /// Measured empirical constant, when the check estimates one.
    pub constant: Option<f64>,
    pub max_ratio: Option<f64>,
    /// `[λ, ratio]` pairs.
    pub sweep: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub flags: Vec<String>,
    /// Named scalar diagnostics, keyed in sorted order.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metrics: BTreeMap<String, f64>,
    #[serde(skip)]
    pub rows: Vec<SweepRow>,
}

impl InequalityReport {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            verdict: Verdict::Pass,
            constant: None,
            max_ratio: None,
            sweep: Vec::new(),
            flags: Vec::new(),
            metrics: BTreeMap::new(),
            rows: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failed(&self) -> bool {
        self.verdict == Verdict::Fail
    }

    pub fn fail(&mut self, flag: impl Into<String>) {
        self.verdict = Verdict::Fail;
        self.flags.push(flag.into());
    }

    /// Marks the case degenerate unless it already failed.
    pub fn degenerate(&mut self, flag: impl Into<String>) {
        if self.verdict != Verdict::Fail {
            self.verdict = Verdict::Degenerate;
        }
        self.flags.push(flag.into());
    }

    pub fn metric(&mut self, key: impl Into<String>, value: f64) {
        self.metrics.insert(key.into(), value);
    }

    pub fn set_rows(&mut self, rows: Vec<SweepRow>) {
        self.sweep = rows.iter().map(|r| [r.lambda, r.ratio]).collect();
        self.rows = rows;
    }

    /// Folds per-instance reports of one check into a single case: fails if
    /// any instance failed, takes the largest ratio and constant, and counts
    /// instances and degenerate ones.
    pub fn aggregate(name: impl Into<String>, parts: &[InequalityReport]) -> InequalityReport {
        let mut out = InequalityReport::new(name);
        let max_opt = |a: Option<f64>, b: Option<f64>| match (a, b) {
            (Some(x), Some(y)) => Some(x.max(y)),
            (x, None) => x,
            (None, y) => y,
        };
        let mut degenerate = 0usize;
        for p in parts {
            out.max_ratio = max_opt(out.max_ratio, p.max_ratio);
            out.constant = max_opt(out.constant, p.constant);
            match p.verdict {
                Verdict::Fail => {
                    out.verdict = Verdict::Fail;
                    for f in &p.flags {
                        out.flags.push(format!("{}: {f}", p.name));
                    }
                }
                Verdict::Degenerate => degenerate += 1,
                Verdict::Pass => {}
            }
        }
        if !parts.is_empty() && degenerate == parts.len() {
            out.verdict = Verdict::Degenerate;
        }
        out.metric("instances", parts.len() as f64);
        out.metric("degenerate_instances", degenerate as f64);
        out.metric(
            "failed_instances",
            parts.iter().filter(|p| p.failed()).count() as f64,
        );
        out
    }

    /// Sweep table as CSV `lambda,numerator,denominator,ratio`.
    pub fn write_sweep_csv<W: Write>(&self, out: W) -> Result<()> {
        write_sweep_csv(&self.rows, out)
    }
}

pub fn write_sweep_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["lambda", "numerator", "denominator", "ratio"])?;
    for r in rows {
        w.write_record([
            format!("{:e}", r.lambda),
            format!("{:e}", r.numerator),
            format!("{:e}", r.denominator),
            format!("{:e}", r.ratio),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// A suite run: the configuration and its cases sorted by name.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportBundle {
    pub suite: String,
    pub config: BundleConfig,
    pub cases: Vec<InequalityReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BundleConfig {
    pub rng: String,
    #[serde(flatten)]
    pub verify: VerifyConfig,
}

impl ReportBundle {
    pub fn new(
        suite: impl Into<String>,
        config: &VerifyConfig,
        mut cases: Vec<InequalityReport>,
    ) -> Self {
        cases.sort_by(|a, b| a.name.cmp(&b.name));
        Self {
            suite: suite.into(),
            config: BundleConfig {
                rng: crate::corpus::RNG_ALGORITHM.to_string(),
                verify: config.clone(),
            },
            cases,
        }
    }

    /// True when no case failed.
    pub fn ok(&self) -> bool {
        self.cases.iter().all(|c| !c.failed())
    }

    pub fn failures(&self) -> impl Iterator<Item = &InequalityReport> {
        self.cases.iter().filter(|c| c.failed())
    }

    pub fn case(&self, name: &str) -> Option<&InequalityReport> {
        self.cases.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}
