//! Run report and exit-code policy.

use qtau::error::Error;
use qtau::report::{overall, Check, Status};
use serde::Serialize;
use serde_json::Value;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_UNSUPPORTED: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Clone, Debug, Serialize)]
pub struct Artifact {
    pub name: String,
    pub value: Value,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Timings {
    pub total_ms: f64,
}

/// Fields are serialized in declaration order; only `timings` varies between runs.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub status: String,
    pub exit_code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub checks: Vec<Check>,
    pub artifacts: Vec<Artifact>,
    pub timings: Timings,
}

/// What a command produced before the verdict is drawn.
#[derive(Default)]
pub struct Outcome {
    pub checks: Vec<Check>,
    pub artifacts: Vec<Artifact>,
}

impl Outcome {
    pub fn check(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn artifact(&mut self, name: impl Into<String>, value: impl Into<Value>) {
        self.artifacts.push(Artifact { name: name.into(), value: value.into() });
    }
}

/// Errors raised while reading the command line and input files.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Core(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<qtau::cartan::CartanError> for CliError {
    fn from(e: qtau::cartan::CartanError) -> Self {
        CliError::Core(e.into())
    }
}

impl From<qtau::ncalg::AlgebraError> for CliError {
    fn from(e: qtau::ncalg::AlgebraError) -> Self {
        CliError::Core(e.into())
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(s) => write!(f, "input error: {s}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Core(Error::Falsified(_)) => EXIT_FAIL,
            CliError::Core(e) if e.is_unsupported() => EXIT_UNSUPPORTED,
            CliError::Core(_) => EXIT_INPUT,
        }
    }
}

pub fn input(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

pub fn build(command: Vec<String>, res: Result<Outcome, CliError>, total_ms: f64) -> RunReport {
    let timings = Timings { total_ms };
    match res {
        Ok(o) => {
            let (status, exit_code) = match overall(&o.checks) {
                Status::Pass => ("pass", EXIT_PASS),
                Status::Fail { .. } => ("fail", EXIT_FAIL),
                Status::Unsupported { .. } => ("unsupported", EXIT_UNSUPPORTED),
            };
            RunReport { command, status: status.into(), exit_code, error: None, checks: o.checks, artifacts: o.artifacts, timings }
        }
        Err(e) => {
            let exit_code = e.exit_code();
            let status = match exit_code {
                EXIT_FAIL => "fail",
                EXIT_UNSUPPORTED => "unsupported",
                _ => "error",
            };
            RunReport {
                command,
                status: status.into(),
                exit_code,
                error: Some(e.to_string()),
                checks: Vec::new(),
                artifacts: Vec::new(),
                timings,
            }
        }
    }
}

fn value_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn render_text(r: &RunReport) -> String {
    let mut out = String::new();
    for a in &r.artifacts {
        out.push_str(&format!("{} = {}\n", a.name, value_text(&a.value)));
    }
    for c in &r.checks {
        let tag = if c.informational { " (info)" } else { "" };
        let line = match &c.status {
            Status::Pass => format!("PASS {}{tag}", c.name),
            Status::Fail { witness } => format!("FAIL {}{tag}: {witness}", c.name),
            Status::Unsupported { reason } => format!("UNSUPPORTED {}{tag}: {reason}", c.name),
        };
        out.push_str(&line);
        out.push('\n');
    }
    if let Some(e) = &r.error {
        out.push_str(&format!("error: {e}\n"));
    }
    out.push_str(&format!("status: {} (exit {})\n", r.status, r.exit_code));
    out
}
