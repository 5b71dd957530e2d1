//! Pass/fail records shared by the verification routines.

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail { witness: String },
    Unsupported { reason: String },
}

impl Status {
    pub fn is_pass(&self) -> bool {
        matches!(self, Status::Pass)
    }

    pub fn from_eq(ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail { witness: witness() }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    #[serde(flatten)]
    pub status: Status,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
    /// Reported but not part of the overall verdict.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub informational: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, status: Status) -> Self {
        Check { name: name.into(), status, detail: String::new(), informational: false }
    }

    pub fn informational(mut self) -> Self {
        self.informational = true;
        self
    }

    pub fn with_detail(mut self, d: impl Into<String>) -> Self {
        self.detail = d.into();
        self
    }
}

/// Fail if any check failed, unsupported if any was unsupported, else pass.
/// Informational checks are ignored.
pub fn overall(checks: &[Check]) -> Status {
    let req = || checks.iter().filter(|c| !c.informational);
    if let Some(c) = req().find(|c| matches!(c.status, Status::Fail { .. })) {
        return Status::Fail { witness: c.name.clone() };
    }
    if let Some(c) = req().find(|c| matches!(c.status, Status::Unsupported { .. })) {
        return Status::Unsupported { reason: c.name.clone() };
    }
    Status::Pass
}
