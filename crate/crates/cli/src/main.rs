//! Command-line frontend: compute E-polynomials with per-stratum
//! breakdowns, sweep parameter tables, and run the finite-field
//! verification oracle.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid parameters,
//! 3 internal formula mismatch.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use tlepoly::fforacle::{run_checks, CheckKind, FixtureStore, GroupKind, VerifyOptions};
use tlepoly::report::{CheckStatus, EPolyReport, Group};
use tlepoly::sl2link::{epoly_sl2, LinkParams};
use tlepoly::sl3link::epoly_sl3;
use tlepoly::Error;

#[derive(Parser)]
#[command(
    name = "tlepoly",
    about = "Exact E-polynomials of SL2/SL3 character varieties of torus links",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the E-polynomial of one character variety.
    Compute(ComputeArgs),
    /// Sweep a parameter grid and emit one row per (n, m, d).
    Table(TableArgs),
    /// Run brute-force finite-field checks against the formulas.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    Sl2,
    Sl3,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Latex,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormatArg {
    Csv,
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(long, value_enum)]
    group: GroupArg,
    #[arg(long)]
    n: u32,
    #[arg(long)]
    m: u32,
    #[arg(long)]
    d: u32,
    /// Also print every stratum.
    #[arg(long)]
    breakdown: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_enum)]
    group: GroupArg,
    #[arg(long, default_value = "5")]
    n_max: u32,
    #[arg(long, default_value = "5")]
    m_max: u32,
    #[arg(long, default_value = "3")]
    d_max: u32,
    #[arg(long, value_enum, default_value = "csv")]
    format: TableFormatArg,
}

#[derive(Args)]
struct VerifyArgs {
    /// Ambient matrix group for the census checks.
    #[arg(long, default_value = "sl2")]
    group: String,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long, default_value = "1")]
    d: u32,
    /// Comma-separated primes.
    #[arg(long, default_value = "3,5")]
    q: String,
    /// Free-group rank for the lambda checks.
    #[arg(long)]
    r: Option<u32>,
    /// Comma-separated check names, or "all".
    #[arg(long, default_value = "all")]
    checks: String,
    /// JSON fixture file: first run records, later runs compare.
    #[arg(long)]
    fixtures: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute(args) => cmd_compute(args),
        Command::Table(args) => cmd_table(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

/// 2 for invalid parameters, 3 for an internal formula mismatch, 1 for
/// everything else.
fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::InvalidParams(_) | Error::Parse(_) => 2,
        Error::InternalMismatch(_) => 3,
        _ => 1,
    }
}

fn compute_report(group: GroupArg, n: u32, m: u32, d: u32) -> Result<EPolyReport, Error> {
    let params = LinkParams::new(n, m, d)?;
    match group {
        GroupArg::Sl2 => epoly_sl2(&params),
        GroupArg::Sl3 => epoly_sl3(&params),
    }
}

fn cmd_compute(args: ComputeArgs) -> Result<ExitCode, Error> {
    let mut report = compute_report(args.group, args.n, args.m, args.d)?;
    if !args.breakdown {
        report.strata.clear();
    }
    match args.format {
        FormatArg::Json => println!("{}", serde_json::to_string(&report).expect("serializable")),
        FormatArg::Latex => {
            if args.breakdown {
                for s in &report.strata {
                    println!("% {}", s.id);
                    println!("{}", s.value.to_latex());
                }
            }
            println!("{}", report.total.to_latex());
        }
        FormatArg::Text => {
            let link = format!("K^{}_{{{},{}}}", report.d, report.n, report.m);
            if report.canonicalized {
                println!(
                    "note: canonicalized (n, m) = ({}, {}) so that m is odd",
                    report.n, report.m
                );
            }
            if args.breakdown {
                for s in &report.strata {
                    println!("{:<16} {}", s.id, s.value);
                }
            }
            println!("e(X_{}({})) = {}", report.group, link, report.total);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_table(args: TableArgs) -> Result<ExitCode, Error> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    if emit(&mut out, "group,n,m,d,degree,coeffs".into()).is_none() {
        return Ok(ExitCode::SUCCESS);
    }
    for d in 1..=args.d_max {
        for n in 1..=args.n_max {
            for m in 1..=args.m_max {
                if gcd(n, m) != 1 {
                    continue;
                }
                let report = compute_report(args.group, n, m, d)?;
                let degree = report
                    .total
                    .degree()
                    .map(|v| v.to_string())
                    .unwrap_or_else(|| "-inf".into());
                let coeffs = report.total.coeff_strings().join(";");
                let group = match args.group {
                    GroupArg::Sl2 => Group::Sl2,
                    GroupArg::Sl3 => Group::Sl3,
                };
                if emit(&mut out, format!("{group},{n},{m},{d},{degree},{coeffs}")).is_none() {
                    return Ok(ExitCode::SUCCESS);
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Write one line; `None` when the reader hung up (e.g. piped to `head`).
fn emit(out: &mut impl Write, line: String) -> Option<()> {
    match writeln!(out, "{line}") {
        Ok(()) => Some(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => None,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    let group = match args.group.as_str() {
        "sl2" => GroupKind::Sl2,
        "sl3" => GroupKind::Sl3,
        "gl2" => GroupKind::Gl2,
        "gl3" => GroupKind::Gl3,
        other => return Err(Error::InvalidParams(format!("unknown group {other:?}"))),
    };
    let primes: Result<Vec<u32>, _> = args
        .q
        .split(',')
        .map(|s| s.trim().parse::<u32>())
        .collect();
    let primes = primes.map_err(|_| Error::InvalidParams(format!("bad prime list {:?}", args.q)))?;
    let checks: Vec<CheckKind> = if args.checks == "all" {
        CheckKind::ALL.to_vec()
    } else {
        args.checks
            .split(',')
            .map(|s| {
                CheckKind::parse(s.trim())
                    .ok_or_else(|| Error::InvalidParams(format!("unknown check {s:?}")))
            })
            .collect::<Result<_, _>>()?
    };
    let params = match (args.n, args.m) {
        (Some(n), Some(m)) => Some(LinkParams::new(n, m, args.d)?),
        (None, None) => None,
        _ => {
            return Err(Error::InvalidParams(
                "both --n and --m are required when either is given".into(),
            ))
        }
    };
    let opts = VerifyOptions {
        checks,
        primes,
        group,
        params,
        r: args.r,
    };
    let mut fixtures = match &args.fixtures {
        Some(path) => Some(FixtureStore::load(path)?),
        None => None,
    };
    let report = run_checks(&opts, fixtures.as_mut());
    match args.format {
        FormatArg::Json => println!("{}", serde_json::to_string(&report).expect("serializable")),
        _ => {
            let stdout = std::io::stdout();
            let mut out = stdout.lock();
            for row in &report.rows {
                let expected = row.expected.as_deref().unwrap_or("-");
                let observed = row.observed.as_deref().unwrap_or("-");
                let mut line = format!(
                    "[{}] {} p={} expected={} observed={}",
                    row.status, row.check, row.p, expected, observed
                );
                if !row.reason.is_empty() {
                    line.push_str(&format!("  ({})", row.reason));
                }
                if emit(&mut out, line).is_none() {
                    break;
                }
            }
            drop(out);
            let fails = report
                .rows
                .iter()
                .filter(|r| r.status == CheckStatus::Fail)
                .count();
            println!(
                "{} rows: {} fail, {} pass, {} skip/info",
                report.rows.len(),
                fails,
                report
                    .rows
                    .iter()
                    .filter(|r| r.status == CheckStatus::Pass)
                    .count(),
                report
                    .rows
                    .iter()
                    .filter(|r| matches!(r.status, CheckStatus::Skip | CheckStatus::Info))
                    .count()
            );
        }
    }
    if report.has_failures() {
        Ok(ExitCode::from(1))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}
