//! `starkcheck`: evaluate p-adic and classical gamma-type functions, run the
//! verification suites, and print the Stark unit table.
//!
//! Exit codes: 0 when every check passed (refusals allowed), 1 when some
//! check failed, 2 on usage or configuration errors.

pub mod config;
pub mod eval;
pub mod output;
pub mod sample;
pub mod suites;
pub mod table;

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand};

use config::{parse_conductors, Format, RunConfig, Suite, QUICK_MAX_M};
use eval::{EvalArgs, Function};
use output::Tally;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "starkcheck", version, about = "p-adic gamma, beta and Stark unit verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one function and print its canonical rendering.
    Eval(EvalCmd),
    /// Run a verification suite and stream one report per check.
    Verify(VerifyCmd),
    /// Tabulate Stark units u(σ_a) for a range of conductors.
    StarkTable(TableCmd),
}

#[derive(Args, Debug)]
struct EvalCmd {
    /// gamma-p, gamma-coleman, lgamma, beta-p, beta-p-pointed, gamma, beta,
    /// hurwitz, stark-unit or jacobi.
    function: String,
    #[arg(long, env = "STARKCHECK_P")]
    p: Option<u64>,
    /// First argument, a rational such as 7/25.
    #[arg(long, allow_hyphen_values = true)]
    z: Option<String>,
    /// Second argument of the beta functions.
    #[arg(long, allow_hyphen_values = true)]
    w: Option<String>,
    /// Exponent s of the Hurwitz zeta function.
    #[arg(long, allow_hyphen_values = true)]
    s: Option<String>,
    #[arg(long)]
    m: Option<u64>,
    #[arg(long)]
    a: Option<u64>,
    #[arg(long)]
    i: Option<u64>,
    #[arg(long)]
    j: Option<u64>,
    /// Level e of LΓ(a, p^e).
    #[arg(long)]
    e: Option<u32>,
    /// p-adic precision N.
    #[arg(long, env = "STARKCHECK_PRECISION")]
    precision: Option<u32>,
    /// Real working digits D.
    #[arg(long, env = "STARKCHECK_DIGITS")]
    digits: Option<u32>,
}

#[derive(Args, Debug)]
struct VerifyCmd {
    /// Suite name, or `all`.
    #[arg(value_name = "SUITE")]
    suite_pos: Option<String>,
    #[arg(long, env = "STARKCHECK_SUITE")]
    suite: Option<String>,
    /// Comma-separated odd primes (default 3,5,7).
    #[arg(long, env = "STARKCHECK_P")]
    p: Option<String>,
    /// p-adic precision N (default 12).
    #[arg(long, env = "STARKCHECK_PRECISION")]
    precision: Option<u32>,
    /// Real working digits D (default 60).
    #[arg(long, env = "STARKCHECK_DIGITS")]
    digits: Option<u32>,
    /// Conductors: `a..b` (inclusive), a comma list, or `N` for 3..=N.
    #[arg(long, env = "STARKCHECK_M")]
    m: Option<String>,
    #[arg(long)]
    i: Option<u64>,
    #[arg(long)]
    j: Option<u64>,
    #[arg(long)]
    a: Option<u64>,
    /// json (default), tsv or text.
    #[arg(long, env = "STARKCHECK_FORMAT", default_value = "json")]
    format: String,
    /// Smaller default grids and sample counts.
    #[arg(long, env = "STARKCHECK_QUICK")]
    quick: bool,
    /// Samples per sampled identity (default 12 quick, 100 full).
    #[arg(long, env = "STARKCHECK_SAMPLES")]
    samples: Option<usize>,
    #[arg(long, env = "STARKCHECK_SEED", default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Debug)]
struct TableCmd {
    /// Conductors: `a..b` (inclusive), a comma list, or `N` for 3..=N.
    #[arg(long, env = "STARKCHECK_M")]
    m: Option<String>,
    #[arg(long)]
    a: Option<u64>,
    #[arg(long, env = "STARKCHECK_DIGITS", default_value_t = config::DEFAULT_DIGITS)]
    digits: u32,
    /// tsv (default), json or text.
    #[arg(long, env = "STARKCHECK_FORMAT", default_value = "tsv")]
    format: String,
}

fn usage(msg: impl std::fmt::Display) -> i32 {
    eprintln!("starkcheck: {msg}");
    EXIT_USAGE
}

fn verify_config(cmd: VerifyCmd) -> Result<RunConfig, String> {
    let suite = match (cmd.suite_pos, cmd.suite) {
        (Some(a), Some(b)) if a != b => return Err(format!("conflicting suites {a:?} and {b:?}")),
        (Some(s), _) | (None, Some(s)) => s.parse::<Suite>()?,
        (None, None) => return Err("no suite given".into()),
    };
    RunConfig::new(
        suite,
        cmd.p.as_deref(),
        cmd.precision,
        cmd.digits,
        cmd.m.as_deref(),
        (cmd.i, cmd.j, cmd.a),
        cmd.quick,
        cmd.samples,
        cmd.seed,
        cmd.format.parse()?,
    )
}

fn broken_pipe_ok(r: io::Result<()>) -> io::Result<()> {
    match r {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        other => other,
    }
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match cli.command {
        Command::Eval(cmd) => {
            let f: Function = match cmd.function.parse() {
                Ok(f) => f,
                Err(e) => return usage(e),
            };
            let args = EvalArgs {
                p: cmd.p,
                z: cmd.z,
                w: cmd.w,
                s: cmd.s,
                m: cmd.m,
                a: cmd.a,
                i: cmd.i,
                j: cmd.j,
                e: cmd.e,
                precision: cmd.precision,
                digits: cmd.digits,
            };
            match eval::evaluate(f, &args) {
                Ok(s) => match broken_pipe_ok(writeln!(out, "{s}")) {
                    Ok(()) => EXIT_OK,
                    Err(e) => usage(e),
                },
                Err(e) => usage(e),
            }
        }
        Command::Verify(cmd) => {
            let cfg = match verify_config(cmd) {
                Ok(c) => c,
                Err(e) => return usage(e),
            };
            let reports = suites::run(&cfg);
            if let Err(e) = broken_pipe_ok(output::write_reports(out, &reports, &cfg).and_then(|_| out.flush())) {
                return usage(e);
            }
            let t = Tally::of(&reports);
            eprintln!("starkcheck: {} passed, {} failed, {} refused", t.passed, t.failed, t.refused);
            if t.failed > 0 {
                EXIT_FAILED
            } else {
                EXIT_OK
            }
        }
        Command::StarkTable(cmd) => {
            let conductors = match cmd.m.as_deref().map(parse_conductors) {
                Some(Ok(c)) => c,
                Some(Err(e)) => return usage(e),
                None => (3..=QUICK_MAX_M).collect(),
            };
            if !(20..=2000).contains(&cmd.digits) {
                return usage(format!("digits {} outside 20..=2000", cmd.digits));
            }
            let format: Format = match cmd.format.parse() {
                Ok(f) => f,
                Err(e) => return usage(e),
            };
            let rows = match table::build(&conductors, cmd.a, cmd.digits) {
                Ok(r) => r,
                Err(e) => return usage(e),
            };
            match broken_pipe_ok(table::write(out, &rows, format)) {
                Ok(()) => EXIT_OK,
                Err(e) => usage(e),
            }
        }
    }
}
