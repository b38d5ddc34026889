//! Executable checks for the pointwise, weak-type and norm inequalities,
//! with ratio tables, empirical constants and verdicts.

mod checks;
mod config;
pub mod oracle;
mod report;
mod suites;

pub use checks::*;
pub use config::{ThresholdGrid, Tolerances, VerifyConfig};
pub use report::{
    write_sweep_csv, BundleConfig, InequalityReport, ReportBundle, SweepRow, Verdict,
};
pub use suites::{
    domination_cases, exact_cases, example47_cases, jn_cases, lp_cases, oracle_cases, orlicz_cases,
    random_pairs, run_suite, run_suite_with, standard_pairs, weaktype_cases, CorpusPair, SUITES,
};
