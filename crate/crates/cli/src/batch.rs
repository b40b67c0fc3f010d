use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::commands::run;
use crate::report::{RunReport, EXIT_OK};
use crate::scenario::{Scenario, ToleranceOverrides, Units};
use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScenarioOutcome {
    pub file: String,
    pub command: Option<String>,
    pub exit_code: i32,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatchSummary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub scenarios: Vec<ScenarioOutcome>,
}

impl BatchSummary {
    /// Largest scenario exit code, or 0 for an empty batch.
    pub fn exit_code(&self) -> i32 {
        self.scenarios.iter().map(|s| s.exit_code).max().unwrap_or(EXIT_OK)
    }
}

fn scenario_files(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let entries = std::fs::read_dir(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
    let mut files = Vec::new();
    for entry in entries {
        let path = entry.map_err(|e| CliError::Io(e.to_string()))?.path();
        if path.is_file() && path.extension().is_some_and(|x| x == "json") {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

/// Runs every `*.json` scenario in `dir`, in filename order. When `out` is
/// given, each report is written there as `<stem>.report.json` next to a
/// `summary.json`.
pub fn run_batch(
    dir: &Path,
    out: Option<&Path>,
    units: Option<Units>,
    overrides: ToleranceOverrides,
) -> Result<(BatchSummary, Vec<RunReport>), CliError> {
    let files = scenario_files(dir)?;
    let reports: Vec<RunReport> = std::thread::scope(|s| {
        let handles: Vec<_> = files
            .iter()
            .map(|f| {
                s.spawn(move || match Scenario::load(f) {
                    Ok(sc) => run(&sc, units, overrides),
                    Err(e) => RunReport::failure(None, None, &e),
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("scenario thread")).collect()
    });

    let mut summary = BatchSummary { total: files.len(), ..Default::default() };
    for (f, r) in files.iter().zip(&reports) {
        if r.exit_code == EXIT_OK {
            summary.passed += 1;
        } else {
            summary.failed += 1;
        }
        summary.scenarios.push(ScenarioOutcome {
            file: f.file_name().expect("file").to_string_lossy().into_owned(),
            command: r.command.map(|c| c.to_string()),
            exit_code: r.exit_code,
        });
    }

    if let Some(out) = out {
        std::fs::create_dir_all(out).map_err(|e| CliError::Io(format!("{}: {e}", out.display())))?;
        let write = |name: String, text: String| {
            let path = out.join(name);
            std::fs::write(&path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
        };
        for (f, r) in files.iter().zip(&reports) {
            let stem = f.file_stem().expect("file").to_string_lossy();
            write(format!("{stem}.report.json"), to_pretty(r))?;
        }
        write("summary.json".into(), to_pretty(&summary))?;
    }
    Ok((summary, reports))
}

pub(crate) fn to_pretty<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialise") + "\n"
}
