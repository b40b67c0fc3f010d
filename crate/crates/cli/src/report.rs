use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::scenario::{Command, Units};
use crate::CliError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_UNSATISFIED: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_MATH: i32 = 3;

/// A named check with its outcome.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub name: String,
    pub satisfied: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
}

impl Verdict {
    pub fn flag(name: impl Into<String>, satisfied: bool) -> Self {
        Verdict { name: name.into(), satisfied, residual: None, tolerance: None }
    }

    pub fn residual(name: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        Verdict {
            name: name.into(),
            satisfied: residual <= tolerance,
            residual: Some(residual),
            tolerance: Some(tolerance),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub kind: String,
    pub message: String,
}

/// Outcome of one scenario. Angles in `result` are always radians.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub command: Option<Command>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub units: Option<Units>,
    #[serde(default)]
    pub result: Value,
    #[serde(default)]
    pub verdicts: Vec<Verdict>,
    #[serde(default)]
    pub warnings: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorReport>,
    pub exit_code: i32,
}

impl RunReport {
    pub fn success(
        command: Command,
        units: Units,
        result: Value,
        verdicts: Vec<Verdict>,
        warnings: Vec<String>,
    ) -> Self {
        let exit_code = if verdicts.iter().all(|v| v.satisfied) { EXIT_OK } else { EXIT_UNSATISFIED };
        RunReport { command: Some(command), units: Some(units), result, verdicts, warnings, error: None, exit_code }
    }

    pub fn failure(command: Option<Command>, units: Option<Units>, err: &CliError) -> Self {
        RunReport {
            command,
            units,
            result: Value::Null,
            verdicts: Vec::new(),
            warnings: Vec::new(),
            error: Some(ErrorReport { kind: err.kind().to_owned(), message: err.to_string() }),
            exit_code: err.exit_code(),
        }
    }
}
