//! The verification report: named checks, sorted, with a schema version.

use serde::{Deserialize, Serialize};

use crate::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    /// as transcribed it fails; a recorded correction passes
    Corrected,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteCheck {
    pub name: String,
    pub status: CheckStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl SuiteCheck {
    pub fn pass(name: impl Into<String>) -> Self {
        SuiteCheck {
            name: name.into(),
            status: CheckStatus::Pass,
            detail: None,
        }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        SuiteCheck {
            name: name.into(),
            status: CheckStatus::Fail,
            detail: Some(detail.into()),
        }
    }

    pub fn of(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        SuiteCheck {
            name: name.into(),
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            detail: Some(detail.into()),
        }
    }

    pub fn with_status(name: impl Into<String>, status: CheckStatus, detail: Option<String>) -> Self {
        SuiteCheck {
            name: name.into(),
            status,
            detail,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifyReport {
    pub schema_version: u32,
    pub suite: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<i64>,
    pub seed: u64,
    pub passed: usize,
    pub corrected: usize,
    pub failed: usize,
    pub checks: Vec<SuiteCheck>,
}

impl VerifyReport {
    /// Sorts by name (stable, so equal names keep their order) and counts.
    pub fn new(suite: &str, r: Option<i64>, seed: u64, mut checks: Vec<SuiteCheck>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        let count = |s: CheckStatus| checks.iter().filter(|c| c.status == s).count();
        VerifyReport {
            schema_version: SCHEMA_VERSION,
            suite: suite.to_string(),
            r,
            seed,
            passed: count(CheckStatus::Pass),
            corrected: count(CheckStatus::Corrected),
            failed: count(CheckStatus::Fail),
            checks,
        }
    }

    pub fn pass(&self) -> bool {
        self.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &SuiteCheck> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }
}
