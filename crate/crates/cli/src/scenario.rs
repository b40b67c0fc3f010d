use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use spherics::Tolerances;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Ratio,
    Menelaus,
    Census,
    Classify,
    Solve,
    Table,
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Command::Ratio => "ratio",
            Command::Menelaus => "menelaus",
            Command::Census => "census",
            Command::Classify => "classify",
            Command::Solve => "solve",
            Command::Table => "table",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Units {
    #[default]
    Rad,
    Deg,
}

impl Units {
    /// Converts an angle given in these units to radians.
    pub fn to_radians(self, x: f64) -> f64 {
        match self {
            Units::Rad => x,
            Units::Deg => spherics::scalar::to_radians(x),
        }
    }
}

/// Optional replacements for the default tolerances.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ToleranceOverrides {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degeneracy: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quadrant: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right_angle: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identity: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub consistency: Option<f64>,
}

impl ToleranceOverrides {
    /// Fields set in `other` win.
    pub fn merged(self, other: ToleranceOverrides) -> Self {
        ToleranceOverrides {
            degeneracy: other.degeneracy.or(self.degeneracy),
            quadrant: other.quadrant.or(self.quadrant),
            right_angle: other.right_angle.or(self.right_angle),
            identity: other.identity.or(self.identity),
            consistency: other.consistency.or(self.consistency),
        }
    }

    pub fn resolve(&self) -> Result<Tolerances<f64>, CliError> {
        let d = Tolerances::<f64>::default();
        let pick = |name: &str, v: Option<f64>, default: f64| match v {
            Some(x) if !(x.is_finite() && x >= 0.0) => {
                Err(CliError::Validation(format!("tolerance {name} must be finite and non-negative, got {x}")))
            }
            Some(x) => Ok(x),
            None => Ok(default),
        };
        Ok(Tolerances {
            degeneracy: pick("degeneracy", self.degeneracy, d.degeneracy)?,
            quadrant: pick("quadrant", self.quadrant, d.quadrant)?,
            right_angle: pick("right_angle", self.right_angle, d.right_angle)?,
            identity: pick("identity", self.identity, d.identity)?,
            consistency: pick("consistency", self.consistency, d.consistency)?,
        })
    }
}

/// One unit of work: a command with its JSON payload.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub command: Command,
    pub payload: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub units: Option<Units>,
    #[serde(default)]
    pub tolerances: ToleranceOverrides,
    /// Subset of the result that must match; numbers compare within the
    /// consistency tolerance, relative for magnitudes above one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expect: Option<Value>,
}

impl Scenario {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Validation(format!("scenario: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }
}

/// Path of the first mismatch between `expected` and `actual`, if any.
pub fn mismatch(expected: &Value, actual: &Value, tol: f64) -> Option<String> {
    match (expected, actual) {
        (Value::Object(e), Value::Object(a)) => e.iter().find_map(|(k, ev)| match a.get(k) {
            Some(av) => mismatch(ev, av, tol).map(|p| format!(".{k}{p}")),
            None => Some(format!(".{k} (missing)")),
        }),
        (Value::Array(e), Value::Array(a)) if e.len() == a.len() => {
            e.iter().zip(a).enumerate().find_map(|(i, (ev, av))| mismatch(ev, av, tol).map(|p| format!("[{i}]{p}")))
        }
        (Value::Number(e), Value::Number(a)) => {
            let (e, a) = (e.as_f64()?, a.as_f64()?);
            ((e - a).abs() > tol * e.abs().max(1.0)).then(|| format!(" ({a} != {e})"))
        }
        _ if expected == actual => None,
        _ => Some(format!(" ({actual} != {expected})")),
    }
}
