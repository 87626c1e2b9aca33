use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use expdio::verify::DEFAULT_ORACLE_CAP;
use expdio::{
    scan, solve, validate, verify_instance, BoundReport, OracleMode, ScanRanges, SieveConfig,
    SolveError,
};
use num_bigint::BigInt;

use crate::record::{BoundsRecord, ErrorRecord, OutputRecord, SkippedRecord, SummaryRecord};
use crate::render;

/// Overrides the default sieve moduli (comma-separated integers >= 2).
pub const MODULI_ENV: &str = "EXPDIO_MODULI";

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_REJECTED: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(
    name = "expdio",
    version,
    about = "Complete solutions of a^x + b^y = c^z"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve one instance.
    Solve(SolveArgs),
    /// Solve one instance and cross-check it against the full brute-force oracle.
    Verify(VerifyArgs),
    /// Solve every valid instance with 2 <= a <= a-max, 2 <= b <= b-max, 3 <= c <= c-max.
    Scan(ScanArgs),
    /// Compare the z < ab/2 bound with Le's bound.
    Bounds(BoundsArgs),
}

#[derive(Debug, Args)]
struct InstanceArgs {
    #[arg(long, allow_negative_numbers = true)]
    a: BigInt,
    #[arg(long, allow_negative_numbers = true)]
    b: BigInt,
    #[arg(long, allow_negative_numbers = true)]
    c: BigInt,
}

#[derive(Debug, Args)]
struct SieveArgs {
    /// Disable the residue prefilter.
    #[arg(long)]
    no_sieve: bool,
    /// Comma-separated sieve moduli.
    #[arg(long, value_name = "LIST", conflicts_with = "no_sieve")]
    moduli: Option<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SolveFormat {
    Json,
    Tsv,
    Text,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    #[command(flatten)]
    sieve: SieveArgs,
    #[arg(long, value_enum, default_value = "json")]
    format: SolveFormat,
    /// Also compare against the brute-force oracle over the full range.
    #[arg(long)]
    oracle_check: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    #[command(flatten)]
    sieve: SieveArgs,
    #[arg(long, value_enum, default_value = "json")]
    format: SolveFormat,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ScanFormat {
    Jsonl,
    Tsv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OracleArg {
    Off,
    Capped,
    Full,
}

#[derive(Debug, Args)]
struct ScanArgs {
    #[arg(long)]
    a_max: u64,
    #[arg(long)]
    b_max: u64,
    #[arg(long)]
    c_max: u64,
    /// Worker threads. Output does not depend on this.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: u64,
    /// Write the stream here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "jsonl")]
    format: ScanFormat,
    #[command(flatten)]
    sieve: SieveArgs,
    /// Oracle cross-check per instance.
    #[arg(long, value_enum, default_value = "capped")]
    oracle: OracleArg,
    /// Exponent cap for `--oracle capped`.
    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
    oracle_cap: u64,
    /// Emit a line for every skipped (invalid) triple.
    #[arg(long)]
    emit_skipped: bool,
    /// Include per-instance timings (makes output run-dependent).
    #[arg(long)]
    timing: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BoundsFormat {
    Json,
    Text,
}

#[derive(Debug, Args)]
struct BoundsArgs {
    #[arg(long, allow_negative_numbers = true)]
    a: BigInt,
    #[arg(long, allow_negative_numbers = true)]
    b: BigInt,
    #[arg(long, value_enum, default_value = "json")]
    format: BoundsFormat,
}

/// Result of one invocation: what to print and how to exit.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn new(code: i32, stdout: String, stderr: String) -> Self {
        Self {
            code,
            stdout,
            stderr,
        }
    }
}

/// Run the CLI on `args` (including the program name). `env_moduli` is the
/// value of [`MODULI_ENV`], if set.
pub fn run<I, T>(args: I, env_moduli: Option<String>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::new(code, String::new(), text)
            } else {
                Outcome::new(code, text, String::new())
            };
        }
    };
    match cli.command {
        Command::Solve(args) => {
            let oracle = if args.oracle_check {
                OracleMode::Full
            } else {
                OracleMode::Off
            };
            cmd_solve(&args.instance, &args.sieve, args.format, oracle, env_moduli)
        }
        Command::Verify(args) => cmd_solve(
            &args.instance,
            &args.sieve,
            args.format,
            OracleMode::Full,
            env_moduli,
        ),
        Command::Scan(args) => cmd_scan(&args, env_moduli),
        Command::Bounds(args) => cmd_bounds(&args),
    }
}

fn sieve_config(args: &SieveArgs, env_moduli: Option<String>) -> Result<SieveConfig, Outcome> {
    let usage = |what: &str, e: &dyn std::fmt::Display| {
        Outcome::new(EXIT_USAGE, String::new(), format!("error: {what}: {e}\n"))
    };
    if args.no_sieve {
        return Ok(SieveConfig::none());
    }
    if let Some(list) = &args.moduli {
        return SieveConfig::parse(list).map_err(|e| usage("--moduli", &e));
    }
    match env_moduli {
        Some(list) => SieveConfig::parse(&list).map_err(|e| usage(MODULI_ENV, &e)),
        None => Ok(SieveConfig::default()),
    }
}

fn rejected(record: ErrorRecord, json: bool) -> Outcome {
    let stdout = if json {
        render::json_line(&record) + "\n"
    } else {
        String::new()
    };
    Outcome::new(
        EXIT_REJECTED,
        stdout,
        format!("error: {}\n", record.message),
    )
}

fn internal(message: String) -> Outcome {
    Outcome::new(EXIT_INTERNAL, String::new(), format!("error: {message}\n"))
}

fn cmd_solve(
    instance: &InstanceArgs,
    sieve: &SieveArgs,
    format: SolveFormat,
    oracle: OracleMode,
    env_moduli: Option<String>,
) -> Outcome {
    let config = match sieve_config(sieve, env_moduli) {
        Ok(c) => c,
        Err(o) => return o,
    };
    let json = matches!(format, SolveFormat::Json);
    let instance = match validate(&instance.a, &instance.b, &instance.c) {
        Ok(i) => i,
        Err(e) => return rejected((&e).into(), json),
    };
    let report = match solve(&instance, &config) {
        Ok(r) => verify_instance(r, oracle),
        Err(SolveError::Validation(e)) => return rejected((&e).into(), json),
        Err(e) => return internal(e.to_string()),
    };
    let record = OutputRecord::from_report(&report, true);
    let stdout = match format {
        SolveFormat::Json => render::json_line(&record) + "\n",
        SolveFormat::Tsv => format!("{}\n{}\n", render::TSV_HEADER, render::tsv_row(&record)),
        SolveFormat::Text => render::text(&record),
    };
    let failed = report.verdicts.failures();
    if failed.is_empty() {
        Outcome::new(EXIT_OK, stdout, String::new())
    } else {
        let msg = format!(
            "error: verdict failure on {}: {} (the solver disagrees with a proven result)\n",
            report.instance,
            failed.join(", ")
        );
        Outcome::new(EXIT_INTERNAL, stdout, msg)
    }
}

fn cmd_scan(args: &ScanArgs, env_moduli: Option<String>) -> Outcome {
    let config = match sieve_config(&args.sieve, env_moduli) {
        Ok(c) => c,
        Err(o) => return o,
    };
    let oracle = match args.oracle {
        OracleArg::Off => OracleMode::Off,
        OracleArg::Capped => OracleMode::Capped(args.oracle_cap),
        OracleArg::Full => OracleMode::Full,
    };
    let ranges = ScanRanges::up_to(args.a_max, args.b_max, args.c_max);
    let outcome = scan(&ranges, &config, oracle, args.jobs as usize);

    let summary = SummaryRecord::from(&outcome.summary);
    let mut body = String::new();
    match args.format {
        ScanFormat::Jsonl => {
            for r in &outcome.reports {
                body += &render::json_line(&OutputRecord::from_report(r, args.timing));
                body.push('\n');
            }
            if args.emit_skipped {
                for s in &outcome.skipped {
                    body += &render::json_line(&SkippedRecord::from(s));
                    body.push('\n');
                }
            }
            body += &render::json_line(&summary);
            body.push('\n');
        }
        ScanFormat::Tsv => {
            body += render::TSV_HEADER;
            body.push('\n');
            for r in &outcome.reports {
                body += &render::tsv_row(&OutputRecord::from_report(r, args.timing));
                body.push('\n');
            }
            if args.emit_skipped {
                for s in &outcome.skipped {
                    let (a, b, c) = s.triple;
                    body += &format!("# skipped\t{a}\t{b}\t{c}\t{}\n", s.reason.code());
                }
            }
            body += &render::tsv_summary(&summary);
        }
    }

    let mut stderr = String::new();
    for f in &outcome.summary.verdict_failures {
        let (a, b, c) = f.triple;
        stderr += &format!(
            "error: verdict failure on ({a}, {b}, {c}): {}\n",
            f.failed.join(", ")
        );
    }
    for e in &outcome.summary.errors {
        let (a, b, c) = e.triple;
        stderr += &format!("error: ({a}, {b}, {c}): {}\n", e.error);
    }
    let code = if outcome.summary.is_clean() {
        EXIT_OK
    } else {
        EXIT_INTERNAL
    };

    match &args.out {
        Some(path) => match std::fs::write(path, body) {
            Ok(()) => Outcome::new(code, String::new(), stderr),
            Err(e) => internal(format!("writing {}: {e}", path.display())),
        },
        None => Outcome::new(code, body, stderr),
    }
}

fn cmd_bounds(args: &BoundsArgs) -> Outcome {
    let json = matches!(args.format, BoundsFormat::Json);
    let mut values = Vec::with_capacity(2);
    for (name, v) in [("a", &args.a), ("b", &args.b)] {
        match v.to_biguint().filter(|u| *u >= 2u32.into()) {
            Some(u) => values.push(u),
            None => {
                let record =
                    ErrorRecord::new("too_small", format!("{name} must be at least 2, got {v}"));
                return rejected(record, json);
            }
        }
    }
    let report = match BoundReport::new(&values[0], &values[1]) {
        Ok(r) => r,
        Err(e) => return rejected(ErrorRecord::new("too_small", e.to_string()), json),
    };
    let record = BoundsRecord::from(&report);
    let stdout = if json {
        render::json_line(&record) + "\n"
    } else {
        render::bounds_text(&record)
    };
    Outcome::new(EXIT_OK, stdout, String::new())
}
