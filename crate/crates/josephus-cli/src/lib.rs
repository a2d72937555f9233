//! Command-line front end over the `josephus` crate.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
//! 3 capacity exceeded, 4 output I/O failure. Internal consistency bugs
//! exit 101; they are never expected.

mod output;
mod verify;

use clap::{Parser, Subcommand, ValueEnum};
use josephus::bench::{function_graph, gain_series, iteration_comparison};
use josephus::extremal::{enumerate_extremal, eval_extremal};
use josephus::fixed_point::{enumerate_fixed_points, eval_fixed_point};
use josephus::oracle::{euler_eval, simulate, DEFAULT_SIMULATE_CAP};
use josephus::{Algorithm, Error, EvalResult, Nat};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

pub use output::Format;

#[derive(Parser)]
#[command(
    name = "josephus",
    version,
    about = "Survivor positions of the every-third elimination circle",
    long_about = "Computes J3(n), the original position of the survivor when every \
third person in a circle of n is eliminated. The default engine walks the \
function's fixed points; oracles and an all-peaks engine are available for \
cross-checking. All configuration is by flags, never environment variables."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output shape for data commands
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    /// Write output to PATH instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the survivor position J3(n)
    Eval {
        /// Circle size, any positive integer (unbounded for the default engine)
        n: String,
        /// Evaluation strategy
        #[arg(long, value_enum, default_value_t = AlgorithmArg::FixedPoint)]
        algorithm: AlgorithmArg,
    },
    /// List the first COUNT fixed points with their pure-peak counts
    FixedPoints {
        count: u64,
    },
    /// List the high extremal points with values up to LIMIT
    ExtremalPoints {
        limit: String,
    },
    /// Cross-check the engines against the oracles over n = 1..=LIMIT
    Verify {
        /// Highest circle size checked [default: 100000]
        limit: Option<String>,
        /// Also replay the full elimination game for n up to this bound
        /// (quadratic cost, so bounded separately from LIMIT)
        #[arg(long, default_value_t = 10_000, value_name = "N")]
        simulate_limit: u64,
    },
    /// Compare engine iteration counts at one circle size
    Bench {
        n: String,
    },
    /// Gain metrics for fixed-point walks of length 1..=Q_MAX
    Gain {
        q_max: u64,
    },
    /// Emit the function graph over n = 1..=LIMIT with classifications
    Graph {
        /// [default: 50]
        limit: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum AlgorithmArg {
    Simulate,
    Euler,
    Extremal,
    FixedPoint,
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // clap prints help and version requests to stdout with code 0;
            // genuine usage errors go to stderr with code 2
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    let (text, code) = match dispatch(&cli.command, cli.format) {
        Ok(done) => done,
        Err(err) => {
            eprintln!("error: {err}");
            return match err {
                Error::InvalidInput(_) => 2,
                Error::Capacity { .. } => 3,
                Error::Internal(_) => 101,
            };
        }
    };
    if let Err(err) = write_output(cli.output.as_deref(), &text) {
        eprintln!("error: {err}");
        return 4;
    }
    code
}

fn dispatch(command: &Command, format: Format) -> josephus::Result<(String, i32)> {
    match command {
        Command::Eval { n, algorithm } => {
            let n = parse_nat(n, "n")?;
            let result = evaluate(&n, *algorithm)?;
            Ok((output::eval_result(&result, format), 0))
        }
        Command::FixedPoints { count } => {
            let records = enumerate_fixed_points(*count)?;
            Ok((output::fixed_points(&records, format), 0))
        }
        Command::ExtremalPoints { limit } => {
            let limit = parse_nat(limit, "limit")?;
            let states = enumerate_extremal(&limit)?;
            // the enumeration carries one bracketing point past the limit;
            // the listing shows only what was asked for
            let shown: Vec<_> = states.into_iter().filter(|s| s.value <= limit).collect();
            Ok((output::extremal_points(&shown, format), 0))
        }
        Command::Verify {
            limit,
            simulate_limit,
        } => {
            let limit = match limit {
                Some(text) => to_u64(&parse_nat(text, "limit")?, "limit")?,
                None => 100_000,
            };
            let report = verify::run(limit, *simulate_limit)?;
            let code = i32::from(!report.mismatches.is_empty());
            Ok((output::verify_report(&report, format), code))
        }
        Command::Bench { n } => {
            let n = parse_nat(n, "n")?;
            let comparison = iteration_comparison(&n)?;
            Ok((output::bench_report(&comparison, format), 0))
        }
        Command::Gain { q_max } => {
            let series = gain_series(*q_max)?;
            Ok((output::gain_table(&series, format), 0))
        }
        Command::Graph { limit } => {
            let limit = match limit {
                Some(text) => to_u64(&parse_nat(text, "limit")?, "limit")?,
                None => 50,
            };
            let rows = function_graph(limit)?;
            Ok((output::graph_table(&rows, format), 0))
        }
    }
}

fn evaluate(n: &Nat, algorithm: AlgorithmArg) -> josephus::Result<EvalResult> {
    match algorithm {
        AlgorithmArg::FixedPoint => eval_fixed_point(n),
        AlgorithmArg::Extremal => eval_extremal(n),
        AlgorithmArg::Euler => {
            let v = to_u64(n, "n")?;
            Ok(oracle_result(n, euler_eval(v)?, Algorithm::Euler))
        }
        AlgorithmArg::Simulate => {
            if *n > Nat::from(DEFAULT_SIMULATE_CAP) {
                return Err(Error::Capacity {
                    what: "n",
                    requested: n.to_string(),
                    cap: DEFAULT_SIMULATE_CAP.to_string(),
                });
            }
            let v = to_u64(n, "n")?;
            Ok(oracle_result(n, simulate(v)?.survivor, Algorithm::Simulate))
        }
    }
}

fn oracle_result(n: &Nat, j: u64, algorithm: Algorithm) -> EvalResult {
    EvalResult {
        n: n.clone(),
        j: Nat::from(j),
        algorithm,
        bracket_low: None,
        bracket_high: None,
        segment_index: None,
        pure_count: None,
        iterations: u64::try_from(n).expect("oracle inputs fit machine words") - 1,
    }
}

fn parse_nat(text: &str, what: &str) -> josephus::Result<Nat> {
    let value = Nat::from_str(text).map_err(|_| {
        Error::InvalidInput(format!(
            "{what} must be a positive decimal integer, got {text:?}"
        ))
    })?;
    if value == Nat::from(0u8) {
        return Err(Error::InvalidInput(format!("{what} must be at least 1")));
    }
    Ok(value)
}

/// Narrows to a machine word for the linear-scan paths, which address
/// circles by index.
fn to_u64(value: &Nat, what: &'static str) -> josephus::Result<u64> {
    u64::try_from(value).map_err(|_| Error::Capacity {
        what,
        requested: value.to_string(),
        cap: u64::MAX.to_string(),
    })
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), String> {
    match path {
        Some(path) => std::fs::write(path, text)
            .map_err(|err| format!("cannot write {}: {err}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|err| format!("cannot write to stdout: {err}"))
        }
    }
}
