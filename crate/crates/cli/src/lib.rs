//! Verification harness for the `xconn` toolkit: graph catalog and corpora,
//! suite manifests, case execution, and report emission.
//!
//! The harness binds solver results to closed-form predictions. A suite is a
//! checked-in text manifest of cases; each case names a product, a value of
//! `g`, a method, and an optional budget, and the runner compares the solver
//! outcome against the matching closed form (skipping pairs that fail the
//! closed forms' hypotheses). Reports render as aligned tables or CSV and
//! map to process exit codes (0 pass, 1 fail, 2 unknown).

pub mod catalog;
pub mod manifest;
pub mod report;
pub mod runner;

pub use manifest::{parse_manifest, CaseMethod, CaseSpec};
pub use report::{CaseStatus, ComputedValue, Environment, Report, VerificationCase};
pub use runner::{build_minimum_gadget, run_cases, SuiteConfig};

/// Embedded suite manifests, looked up by name.
pub fn builtin_suite(name: &str) -> Option<&'static str> {
    match name {
        "smoke" => Some(include_str!("../suites/smoke.txt")),
        "g1" => Some(include_str!("../suites/g1.txt")),
        "g2" => Some(include_str!("../suites/g2.txt")),
        "g3" => Some(include_str!("../suites/g3.txt")),
        "formulas" => Some(include_str!("../suites/formulas.txt")),
        "pmc" => Some(include_str!("../suites/pmc.txt")),
        "full" => Some(include_str!("../suites/full.txt")),
        _ => None,
    }
}

/// Names of the embedded suites, in documentation order.
pub const SUITE_NAMES: &[&str] = &["smoke", "g1", "g2", "g3", "pmc", "formulas", "full"];
