//! Verification report types and emission (CSV and aligned table).

use std::fmt;

/// What a case computed, normalized for display.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ComputedValue {
    Finite(usize),
    Infinite,
    Unknown,
    /// Nothing was computed (skipped case or solver error).
    Absent,
}

impl fmt::Display for ComputedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComputedValue::Finite(v) => write!(f, "{v}"),
            ComputedValue::Infinite => write!(f, "Infinite"),
            ComputedValue::Unknown => write!(f, "unknown"),
            ComputedValue::Absent => write!(f, "-"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CaseStatus {
    Pass,
    Fail,
    Unknown,
    /// The factor pair fails the closed forms' hypotheses for this g, so
    /// there is no prediction to compare against.
    SkippedHypothesis,
}

impl fmt::Display for CaseStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseStatus::Pass => write!(f, "pass"),
            CaseStatus::Fail => write!(f, "fail"),
            CaseStatus::Unknown => write!(f, "unknown"),
            CaseStatus::SkippedHypothesis => write!(f, "skipped(hypothesis)"),
        }
    }
}

/// One executed case: prediction vs computation plus bookkeeping.
#[derive(Clone, Debug)]
pub struct VerificationCase {
    pub factor1: String,
    pub factor2: String,
    pub g: usize,
    pub expected: Option<usize>,
    pub computed: ComputedValue,
    pub status: CaseStatus,
    pub nodes: u64,
    pub elapsed_ms: u128,
}

/// Budgets and seeds a report was produced under; carried for archival
/// context and shown in the table rendering.
#[derive(Clone, Debug)]
pub struct Environment {
    pub workers: usize,
    pub seed: u64,
    pub node_budget: Option<u64>,
    pub timeout_secs: Option<u64>,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub cases: Vec<VerificationCase>,
    pub environment: Environment,
}

pub const CSV_HEADER: &str = "factor1,factor2,g,expected,computed,status,nodes,elapsed_ms";

impl Report {
    /// CSV with the fixed column set; deterministic for fixed inputs,
    /// budgets, and seeds except for the nodes and elapsed_ms columns.
    #[must_use]
    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for case in &self.cases {
            let expected = match case.expected {
                Some(v) => v.to_string(),
                None => "-".to_string(),
            };
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                case.factor1,
                case.factor2,
                case.g,
                expected,
                case.computed,
                case.status,
                case.nodes,
                case.elapsed_ms
            ));
        }
        out
    }

    /// Aligned human-readable rendering with a trailing summary line.
    #[must_use]
    pub fn to_table(&self) -> String {
        let header = [
            "factor1",
            "factor2",
            "g",
            "expected",
            "computed",
            "status",
            "nodes",
            "elapsed_ms",
        ];
        let rows: Vec<[String; 8]> = self
            .cases
            .iter()
            .map(|c| {
                [
                    c.factor1.clone(),
                    c.factor2.clone(),
                    c.g.to_string(),
                    c.expected
                        .map_or_else(|| "-".to_string(), |v| v.to_string()),
                    c.computed.to_string(),
                    c.status.to_string(),
                    c.nodes.to_string(),
                    c.elapsed_ms.to_string(),
                ]
            })
            .collect();
        let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
        for row in &rows {
            for (w, cell) in widths.iter_mut().zip(row.iter()) {
                *w = (*w).max(cell.len());
            }
        }
        let render = |cells: &[String]| -> String {
            let mut line = String::new();
            for (i, cell) in cells.iter().enumerate() {
                if i > 0 {
                    line.push_str("  ");
                }
                line.push_str(&format!("{cell:<width$}", width = widths[i]));
            }
            line.trim_end().to_string()
        };
        let mut out = render(&header.map(str::to_string));
        out.push('\n');
        for row in &rows {
            out.push_str(&render(row));
            out.push('\n');
        }
        let (mut pass, mut fail, mut unknown, mut skipped) = (0, 0, 0, 0);
        for case in &self.cases {
            match case.status {
                CaseStatus::Pass => pass += 1,
                CaseStatus::Fail => fail += 1,
                CaseStatus::Unknown => unknown += 1,
                CaseStatus::SkippedHypothesis => skipped += 1,
            }
        }
        out.push_str(&format!(
            "{} cases: {pass} pass, {fail} fail, {unknown} unknown, {skipped} skipped (workers={}, seed={})\n",
            self.cases.len(),
            self.environment.workers,
            self.environment.seed,
        ));
        out
    }

    /// 0 when everything passed, 1 on any failure, 2 when the only
    /// blemishes are unknown verdicts. Skipped cases do not affect it.
    #[must_use]
    pub fn exit_code(&self) -> i32 {
        if self.cases.iter().any(|c| c.status == CaseStatus::Fail) {
            1
        } else if self.cases.iter().any(|c| c.status == CaseStatus::Unknown) {
            2
        } else {
            0
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_report() -> Report {
        Report {
            cases: vec![
                VerificationCase {
                    factor1: "cycle:5".into(),
                    factor2: "cycle:5".into(),
                    g: 1,
                    expected: Some(10),
                    computed: ComputedValue::Finite(10),
                    status: CaseStatus::Pass,
                    nodes: 8495,
                    elapsed_ms: 3,
                },
                VerificationCase {
                    factor1: "-".into(),
                    factor2: "-".into(),
                    g: 2,
                    expected: Some(0),
                    computed: ComputedValue::Finite(0),
                    status: CaseStatus::Pass,
                    nodes: 0,
                    elapsed_ms: 1,
                },
            ],
            environment: Environment {
                workers: 0,
                seed: 7,
                node_budget: None,
                timeout_secs: None,
            },
        }
    }

    #[test]
    fn csv_shape() {
        let report = sample_report();
        let csv = report.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some(CSV_HEADER));
        assert_eq!(lines.next(), Some("cycle:5,cycle:5,1,10,10,pass,8495,3"));
        assert_eq!(lines.next(), Some("-,-,2,0,0,pass,0,1"));
        assert_eq!(lines.next(), None);
    }

    #[test]
    fn empty_report_is_header_only() {
        let report = Report {
            cases: vec![],
            environment: Environment {
                workers: 0,
                seed: 7,
                node_budget: None,
                timeout_secs: None,
            },
        };
        assert_eq!(report.to_csv(), format!("{CSV_HEADER}\n"));
        assert_eq!(report.exit_code(), 0);
    }

    #[test]
    fn exit_codes_prioritize_failures() {
        let mut report = sample_report();
        assert_eq!(report.exit_code(), 0);
        report.cases[1].status = CaseStatus::Unknown;
        assert_eq!(report.exit_code(), 2);
        report.cases[0].status = CaseStatus::Fail;
        assert_eq!(report.exit_code(), 1);
        report.cases[0].status = CaseStatus::SkippedHypothesis;
        report.cases[1].status = CaseStatus::Pass;
        assert_eq!(report.exit_code(), 0);
    }

    #[test]
    fn table_alignment_and_summary() {
        let table = sample_report().to_table();
        let lines: Vec<&str> = table.lines().collect();
        assert!(lines[0].starts_with("factor1  factor2"));
        assert!(lines[1].contains("pass"));
        assert!(lines[3].starts_with("2 cases: 2 pass, 0 fail, 0 unknown, 0 skipped"));
    }
}
