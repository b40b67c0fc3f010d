//! Scenario files, reports and batch runs for the `spherics` binary.

pub mod batch;
pub mod commands;
pub mod report;
pub mod scenario;

use spherics::census::CensusError;
use spherics::ratio::RatioError;
use spherics::sector::SectorError;
use spherics::sphere::SphereError;
use spherics::trig::TrigError;
use thiserror::Error;

pub use batch::{run_batch, BatchSummary};
pub use commands::run;
pub use report::{RunReport, Verdict};
pub use scenario::{Command, Scenario, ToleranceOverrides, Units};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Validation(String),
    #[error("i/o: {0}")]
    Io(String),
    #[error("{0}")]
    Math(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) | CliError::Io(_) => report::EXIT_VALIDATION,
            CliError::Math(_) => report::EXIT_MATH,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Validation(_) => "validation",
            CliError::Io(_) => "io",
            CliError::Math(_) => "math",
        }
    }
}

impl From<SphereError> for CliError {
    fn from(e: SphereError) -> Self {
        match e {
            SphereError::ZeroVector | SphereError::NonFinite | SphereError::NotUnit => {
                CliError::Validation(e.to_string())
            }
            _ => CliError::Math(e.to_string()),
        }
    }
}

impl From<RatioError> for CliError {
    fn from(e: RatioError) -> Self {
        match e {
            RatioError::PremiseViolated => CliError::Math(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

impl From<SectorError> for CliError {
    fn from(e: SectorError) -> Self {
        match e {
            SectorError::Sphere(s) => s.into(),
            SectorError::ZeroNormal => CliError::Validation(e.to_string()),
            _ => CliError::Math(e.to_string()),
        }
    }
}

impl From<CensusError> for CliError {
    fn from(e: CensusError) -> Self {
        match e {
            CensusError::Sphere(s) => s.into(),
            CensusError::BadIndex(_) => CliError::Validation(e.to_string()),
            _ => CliError::Math(e.to_string()),
        }
    }
}

impl From<TrigError> for CliError {
    fn from(e: TrigError) -> Self {
        match e {
            TrigError::Sphere(s) => s.into(),
            TrigError::DomainError(_) | TrigError::InconsistentInput(_) => CliError::Validation(e.to_string()),
            _ => CliError::Math(e.to_string()),
        }
    }
}
