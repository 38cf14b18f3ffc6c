//! Report types shared by the engine and the command-line frontend.

use serde::{Deserialize, Serialize};

use crate::qpoly::{IntPoly, RatFunc};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Group {
    Sl2,
    Sl3,
}

impl std::fmt::Display for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Group::Sl2 => write!(f, "sl2"),
            Group::Sl3 => write!(f, "sl3"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skip,
    Info,
}

impl std::fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skip => "skip",
            CheckStatus::Info => "info",
        };
        write!(f, "{s}")
    }
}

/// One consistency check carried inside an [`EPolyReport`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportCheck {
    pub name: String,
    pub status: CheckStatus,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

/// Per-stratum entry: the exact rational value and, when it reduces to a
/// polynomial, its coefficient list.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StratumEntry {
    pub id: String,
    pub value: RatFunc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poly: Option<IntPoly>,
}

/// Full E-polynomial computation for one `(group, n, m, d)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EPolyReport {
    pub group: Group,
    /// Canonical parameters actually computed (`m` odd).
    pub n: u32,
    pub m: u32,
    pub d: u32,
    /// True when the constructor swapped the input `(n, m)` to make `m` odd.
    pub canonicalized: bool,
    pub strata: Vec<StratumEntry>,
    pub total: IntPoly,
    pub checks: Vec<ReportCheck>,
}

impl EPolyReport {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }
}

/// One row of oracle output: an expected count (exact, as a decimal string)
/// against an observed brute-force count.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyRow {
    pub check: String,
    pub p: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub observed: Option<String>,
    pub status: CheckStatus,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub reason: String,
}

impl VerifyRow {
    pub fn new(check: impl Into<String>, p: u32) -> VerifyRow {
        VerifyRow {
            check: check.into(),
            p,
            expected: None,
            observed: None,
            status: CheckStatus::Info,
            reason: String::new(),
        }
    }

    pub fn skip(check: impl Into<String>, p: u32, reason: impl Into<String>) -> VerifyRow {
        VerifyRow {
            check: check.into(),
            p,
            expected: None,
            observed: None,
            status: CheckStatus::Skip,
            reason: reason.into(),
        }
    }

    /// Pass/fail on exact equality of expected and observed.
    pub fn compare(
        check: impl Into<String>,
        p: u32,
        expected: impl ToString,
        observed: impl ToString,
    ) -> VerifyRow {
        let expected = expected.to_string();
        let observed = observed.to_string();
        let status = if expected == observed {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        VerifyRow {
            check: check.into(),
            p,
            expected: Some(expected),
            observed: Some(observed),
            status,
            reason: String::new(),
        }
    }

    pub fn with_reason(mut self, reason: impl Into<String>) -> VerifyRow {
        self.reason = reason.into();
        self
    }

    pub fn with_status(mut self, status: CheckStatus) -> VerifyRow {
        self.status = status;
        self
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub rows: Vec<VerifyRow>,
}

impl VerificationReport {
    pub fn push(&mut self, row: VerifyRow) {
        self.rows.push(row);
    }

    pub fn extend(&mut self, rows: impl IntoIterator<Item = VerifyRow>) {
        self.rows.extend(rows);
    }

    /// Skips and info rows never fail a run.
    pub fn has_failures(&self) -> bool {
        self.rows.iter().any(|r| r.status == CheckStatus::Fail)
    }
}
