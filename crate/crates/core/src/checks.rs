//! Named numeric checks shared by every verification routine.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Informational,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Informational => "info",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    /// Measured residual; `None` for purely combinatorial checks.
    pub residual: Option<f64>,
    pub tolerance: Option<f64>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Check {
    /// Pass iff `residual < tol` (NaN fails).
    pub fn residual(name: impl Into<String>, residual: f64, tol: f64) -> Self {
        let status = if residual < tol {
            Status::Pass
        } else {
            Status::Fail
        };
        Self {
            name: name.into(),
            status,
            residual: Some(residual),
            tolerance: Some(tol),
            detail: String::new(),
        }
    }

    pub fn boolean(name: impl Into<String>, ok: bool) -> Self {
        Self {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            residual: None,
            tolerance: None,
            detail: String::new(),
        }
    }

    pub fn info(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            status: Status::Informational,
            residual: None,
            tolerance: None,
            detail: detail.into(),
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }

    /// Demote to informational, keeping the measured values.
    pub fn informational(mut self) -> Self {
        let was = self.status;
        self.status = Status::Informational;
        if self.detail.is_empty() {
            self.detail = format!("would be {was}");
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:>4}] {}", self.status, self.name)?;
        if let (Some(r), Some(t)) = (self.residual, self.tolerance) {
            write!(f, " (residual {r:.3e}, tol {t:.0e})")?;
        }
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

pub fn any_failed(checks: &[Check]) -> bool {
    checks.iter().any(Check::failed)
}
