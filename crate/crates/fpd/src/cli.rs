//! Command line interface: `compute`, `family`, and `verify`.
//!
//! Exit codes: 0 on success, 2 for invalid input (bad files, bad flags, bad
//! family parameters, oversized searches), 1 for internal inconsistencies and
//! failed verification runs.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value};

use crate::error::Error;
use crate::families::FamilySpec;
use crate::parse::parse_quiver;
use crate::report::{fpd, fpd_family, FpdReport, Mode, DEFAULT_TOL};
use crate::verify::{run as run_verify, CriterionReport, VerifyLevel};

#[derive(Parser)]
#[command(
    name = "fpd",
    version,
    about = "Frobenius-Perron dimensions of radical-square-zero bound quiver algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the fpd report for a quiver file.
    Compute(ComputeArgs),
    /// Compute the fpd report for a named family instance.
    Family(FamilyArgs),
    /// Run the built-in verification ladder.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ComputeArgs {
    /// Quiver description file.
    file: PathBuf,
    #[command(flatten)]
    mode: ModeOpts,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Args)]
struct FamilyArgs {
    /// Family type.
    #[arg(long = "type", value_enum)]
    family_type: FamilyType,
    /// Rank of the A, D, or E family.
    #[arg(long)]
    n: Option<usize>,
    /// Comma-separated loop counts, one per vertex.
    #[arg(long, value_delimiter = ',', required = true)]
    loops: Vec<usize>,
    #[command(flatten)]
    mode: ModeOpts,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Copy, Clone, ValueEnum)]
enum FamilyType {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "D", alias = "d")]
    D,
    #[value(name = "E", alias = "e")]
    E,
    #[value(name = "Qnm", alias = "qnm")]
    Qnm,
    #[value(name = "A3rev", alias = "a3rev")]
    A3Rev,
}

#[derive(Args)]
struct ModeOpts {
    /// Brick enumeration mode.
    #[arg(long, value_enum, default_value_t = ModeArg::Thin)]
    mode: ModeArg,
    /// Total dimension bound for oracle enumeration (default: vertices + 2).
    #[arg(long = "max-dim", value_name = "K")]
    max_dim: Option<usize>,
    /// Field order for oracle enumeration, 2 or 3 (default: 2).
    #[arg(long, value_name = "Q")]
    field: Option<u64>,
    /// Spectral radius tolerance.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Thin,
    Oracle,
}

impl ModeOpts {
    fn resolve(&self, vertex_count: usize) -> Result<Mode, String> {
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(format!(
                "--tol must be positive and finite, got {}",
                self.tol
            ));
        }
        match self.mode {
            ModeArg::Thin => {
                if self.max_dim.is_some() || self.field.is_some() {
                    Err("--max-dim and --field only apply to --mode oracle".into())
                } else {
                    Ok(Mode::Thin)
                }
            }
            ModeArg::Oracle => Ok(Mode::Oracle {
                max_total_dim: self.max_dim.unwrap_or(vertex_count + 2),
                field_order: self.field.unwrap_or(2),
            }),
        }
    }
}

#[derive(Args)]
struct OutputOpts {
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Write to a file instead of stdout.
    #[arg(short, long, value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Reduced ladder: small family grids and the frozen matrices.
    #[arg(long, conflicts_with_all = ["full", "oracle"])]
    quick: bool,
    /// Full ladder (the default).
    #[arg(long, conflicts_with = "oracle")]
    full: bool,
    /// Full ladder plus the finite-field enumeration cross-check.
    #[arg(long)]
    oracle: bool,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

/// Parses the process arguments, runs a subcommand, and returns the exit
/// code.
pub fn run() -> u8 {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn execute(command: Command) -> crate::error::Result<u8> {
    match command {
        Command::Compute(args) => {
            let text = std::fs::read_to_string(&args.file)?;
            let spec = parse_quiver(&text)?;
            let mode = match args.mode.resolve(spec.vertex_count()) {
                Ok(m) => m,
                Err(msg) => return usage_error(&msg),
            };
            let report = fpd(&spec, mode, args.mode.tol)?;
            emit_report(&report, &args.output)?;
            Ok(0)
        }
        Command::Family(args) => {
            let family = match family_spec(&args) {
                Ok(f) => f,
                Err(msg) => return usage_error(&msg),
            };
            let spec = crate::families::generate_family(&family)?;
            let mode = match args.mode.resolve(spec.vertex_count()) {
                Ok(m) => m,
                Err(msg) => return usage_error(&msg),
            };
            let report = fpd_family(&family, mode, args.mode.tol)?;
            emit_report(&report, &args.output)?;
            Ok(0)
        }
        Command::Verify(args) => {
            let level = if args.quick {
                VerifyLevel::Quick
            } else if args.oracle {
                VerifyLevel::Oracle
            } else {
                VerifyLevel::Full
            };
            let reports = run_verify(level);
            if args.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&verify_json(&reports))
                        .expect("verify serialization")
                );
            } else {
                for r in &reports {
                    println!("{}", r.summary_line());
                    for c in r.checks.iter().filter(|c| !c.passed) {
                        println!("    FAIL {}: {}", c.name, c.detail);
                    }
                }
            }
            let passed = reports.iter().all(CriterionReport::passed);
            if !args.json {
                println!("verification {}", if passed { "passed" } else { "failed" });
            }
            Ok(u8::from(!passed))
        }
    }
}

fn usage_error(msg: &str) -> crate::error::Result<u8> {
    eprintln!("error: {msg}");
    Ok(2)
}

fn family_spec(args: &FamilyArgs) -> Result<FamilySpec, String> {
    let loops = args.loops.clone();
    match args.family_type {
        FamilyType::A | FamilyType::D | FamilyType::E => {
            let n = args.n.ok_or("--n is required for types A, D, and E")?;
            Ok(match args.family_type {
                FamilyType::A => FamilySpec::a(n, loops),
                FamilyType::D => FamilySpec::d(n, loops),
                _ => FamilySpec::e(n, loops),
            })
        }
        FamilyType::Qnm => {
            if args.n.is_some() {
                return Err("--n does not apply to type Qnm (always 2 vertices)".into());
            }
            if loops.len() != 2 {
                return Err(format!(
                    "type Qnm takes exactly 2 loop counts, got {}",
                    loops.len()
                ));
            }
            Ok(FamilySpec::qnm(loops[0], loops[1]))
        }
        FamilyType::A3Rev => {
            if args.n.is_some() {
                return Err("--n does not apply to type A3rev (always 3 vertices)".into());
            }
            if loops.len() != 3 {
                return Err(format!(
                    "type A3rev takes exactly 3 loop counts, got {}",
                    loops.len()
                ));
            }
            Ok(FamilySpec::a3_reversed([loops[0], loops[1], loops[2]]))
        }
    }
}

fn emit_report(report: &FpdReport, opts: &OutputOpts) -> crate::error::Result<()> {
    let body = if opts.json {
        report.to_json_string() + "\n"
    } else {
        report.to_text()
    };
    match &opts.output {
        Some(path) => {
            let mut f = std::fs::File::create(path)?;
            f.write_all(body.as_bytes())?;
        }
        None => print!("{body}"),
    }
    Ok(())
}

fn verify_json(reports: &[CriterionReport]) -> Value {
    Value::Array(
        reports
            .iter()
            .map(|r| {
                let mut o = Map::new();
                o.insert("name".into(), r.name.into());
                o.insert("passed".into(), r.passed().into());
                o.insert("elapsed_seconds".into(), r.elapsed.as_secs_f64().into());
                o.insert(
                    "checks".into(),
                    Value::Array(
                        r.checks
                            .iter()
                            .map(|c| {
                                let mut co = Map::new();
                                co.insert("name".into(), c.name.clone().into());
                                co.insert("passed".into(), c.passed.into());
                                co.insert("detail".into(), c.detail.clone().into());
                                Value::Object(co)
                            })
                            .collect(),
                    ),
                );
                Value::Object(o)
            })
            .collect(),
    )
}

/// Maps an error to the process exit code: 2 for invalid input, 1 for
/// internal inconsistencies.
pub fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::InvalidQuiver(_)
        | Error::InvalidFamily(_)
        | Error::InvalidDiagram(_)
        | Error::UnsupportedField(_)
        | Error::BadDimensionBound
        | Error::OracleTooLarge(_)
        | Error::NonDynkinBase
        | Error::Io(_) => 2,
        Error::RelationsViolated
        | Error::ShapeMismatch(_)
        | Error::NotABrickSet(_)
        | Error::BadSpectralInput(_)
        | Error::OracleLiftFailed { .. } => 1,
    }
}
