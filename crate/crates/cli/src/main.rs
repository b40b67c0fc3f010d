use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use spherics_cli::commands::table_rows;
use spherics_cli::report::{RunReport, EXIT_VALIDATION};
use spherics_cli::{run, run_batch, CliError, Command, Scenario, ToleranceOverrides, Units};

#[derive(Parser, Debug)]
#[command(
    name = "spherics",
    version,
    about = "Spherical trigonometry kernel: ratios, sector figures, triangle census, solver"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    #[command(flatten)]
    opts: GlobalOpts,
}

#[derive(Args, Debug, Clone)]
struct GlobalOpts {
    /// Units for angles in inputs (reports are always in radians).
    #[arg(long, global = true, value_enum)]
    units: Option<Units>,
    /// Residual tolerance for identities and consistency checks.
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    /// Tolerance for counting a side as a quadrant or an angle as right.
    #[arg(long, global = true)]
    quadrant_tolerance: Option<f64>,
    /// Print the full report as JSON.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Print tables as CSV (arc_deg, tangent, first_difference).
    #[arg(long, global = true)]
    csv: bool,
    /// Also render sides and angles in degrees.
    #[arg(long, global = true)]
    degrees: bool,
}

impl GlobalOpts {
    fn overrides(&self) -> ToleranceOverrides {
        ToleranceOverrides {
            identity: self.tolerance,
            consistency: self.tolerance,
            quadrant: self.quadrant_tolerance,
            right_angle: self.quadrant_tolerance,
            ..Default::default()
        }
    }
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Compounded ratios and rearrangements of A/B = (C/E)(D/F).
    Ratio(PayloadArg),
    /// Sector-figure identity in the plane (exact) or on the sphere.
    Menelaus(PayloadArg),
    /// The eight triangles cut out by three great circles.
    Census(PayloadArg),
    /// Side and angle species of a triangle and the matching proposition.
    Classify(PayloadArg),
    /// Solve a triangle from three known elements.
    Solve(PayloadArg),
    /// Tangent table with first differences.
    Table {
        /// Payload file; alternatively give --step and --max.
        input: Option<PathBuf>,
        #[arg(long, requires = "max")]
        step: Option<f64>,
        #[arg(long, requires = "step")]
        max: Option<f64>,
    },
    /// Run one scenario file.
    Run { scenario: PathBuf },
    /// Run every scenario in a directory.
    Batch {
        #[arg(long)]
        corpus: PathBuf,
        /// Directory for per-scenario reports and summary.json.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct PayloadArg {
    /// Payload JSON file, or `-` for stdin (the default).
    input: Option<PathBuf>,
}

fn read_input(path: Option<&Path>) -> Result<String, CliError> {
    match path {
        Some(p) if p != Path::new("-") => {
            std::fs::read_to_string(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::Io(e.to_string()))?;
            Ok(s)
        }
    }
}

fn payload_scenario(command: Command, path: Option<&Path>) -> Result<Scenario, CliError> {
    let text = read_input(path)?;
    let payload: Value = serde_json::from_str(&text).map_err(|e| CliError::Validation(format!("payload: {e}")))?;
    Ok(Scenario { command, payload, units: None, tolerances: Default::default(), expect: None })
}

fn print_report(r: &RunReport, opts: &GlobalOpts) -> Result<(), CliError> {
    if opts.csv {
        return print_csv(r);
    }
    if opts.degrees {
        let mut r = r.clone();
        add_degrees(&mut r.result);
        return print_report(&r, &GlobalOpts { degrees: false, ..opts.clone() });
    }
    if opts.json {
        println!("{}", serde_json::to_string_pretty(r).expect("reports serialise"));
        return Ok(());
    }
    if let Some(c) = r.command {
        println!("command: {c}");
    }
    for v in &r.verdicts {
        let mark = if v.satisfied { "ok" } else { "FAIL" };
        match (v.residual, v.tolerance) {
            (Some(res), Some(tol)) => println!("[{mark}] {} (residual {res:.3e}, tolerance {tol:e})", v.name),
            _ => println!("[{mark}] {}", v.name),
        }
    }
    for w in &r.warnings {
        println!("warning: {w}");
    }
    if let Some(e) = &r.error {
        eprintln!("error ({}): {}", e.kind, e.message);
    } else {
        println!("{}", serde_json::to_string_pretty(&r.result).expect("values serialise"));
    }
    Ok(())
}

/// Adds `sides_deg` / `angles_deg` next to every `sides` / `angles` array.
fn add_degrees(v: &mut Value) {
    match v {
        Value::Object(map) => {
            let extra: Vec<(String, Value)> = ["sides", "angles"]
                .iter()
                .filter_map(|k| {
                    let arr = map.get(*k)?.as_array()?;
                    let deg = arr
                        .iter()
                        .map(|x| x.as_f64().map(|r| Value::from(r.to_degrees())))
                        .collect::<Option<Vec<_>>>()?;
                    Some((format!("{k}_deg"), Value::Array(deg)))
                })
                .collect();
            for child in map.values_mut() {
                add_degrees(child);
            }
            map.extend(extra);
        }
        Value::Array(items) => items.iter_mut().for_each(add_degrees),
        _ => {}
    }
}

fn print_csv(r: &RunReport) -> Result<(), CliError> {
    if r.error.is_some() {
        return print_report(
            r,
            &GlobalOpts {
                units: None,
                tolerance: None,
                quadrant_tolerance: None,
                json: true,
                csv: false,
                degrees: false,
            },
        );
    }
    let rows = r
        .result
        .get("rows")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Validation("--csv applies only to tables".into()))?;
    let mut w = csv::Writer::from_writer(std::io::stdout());
    let io = |e: csv::Error| CliError::Io(e.to_string());
    w.write_record(["arc_deg", "tangent", "first_difference"]).map_err(io)?;
    for row in rows {
        let field = |k: &str| row.get(k).and_then(Value::as_f64).map(|x| x.to_string()).unwrap_or_default();
        w.write_record([field("arc_deg"), field("tangent"), field("first_difference")]).map_err(io)?;
    }
    w.flush().map_err(|e| CliError::Io(e.to_string()))
}

fn exit(code: i32) -> ExitCode {
    ExitCode::from(code as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = cli.opts.clone();
    let overrides = opts.overrides();

    let scenario = match &cli.command {
        Cmd::Batch { corpus, out } => {
            return match run_batch(corpus, out.as_deref(), opts.units, overrides) {
                Ok((summary, _)) => {
                    println!("{}", serde_json::to_string_pretty(&summary).expect("summary serialises"));
                    exit(summary.exit_code())
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    exit(e.exit_code())
                }
            };
        }
        Cmd::Run { scenario } => Scenario::load(scenario),
        Cmd::Table { input: None, step: Some(step), max: Some(max) } => {
            let units = opts.units.unwrap_or(Units::Deg);
            // Validated here so flag errors map to the usual exit codes.
            table_rows(*step, *max, units).map(|_| Scenario {
                command: Command::Table,
                payload: serde_json::json!({ "step": step, "max": max }),
                units: Some(units),
                tolerances: Default::default(),
                expect: None,
            })
        }
        Cmd::Table { input, .. } => payload_scenario(Command::Table, input.as_deref()),
        Cmd::Ratio(p) => payload_scenario(Command::Ratio, p.input.as_deref()),
        Cmd::Menelaus(p) => payload_scenario(Command::Menelaus, p.input.as_deref()),
        Cmd::Census(p) => payload_scenario(Command::Census, p.input.as_deref()),
        Cmd::Classify(p) => payload_scenario(Command::Classify, p.input.as_deref()),
        Cmd::Solve(p) => payload_scenario(Command::Solve, p.input.as_deref()),
    };
    let report = match scenario {
        Ok(s) => run(&s, opts.units, overrides),
        Err(e) => RunReport::failure(None, opts.units, &e),
    };
    if let Err(e) = print_report(&report, &opts) {
        eprintln!("error: {e}");
        return exit(EXIT_VALIDATION);
    }
    exit(report.exit_code)
}
