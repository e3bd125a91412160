//! Command-line front end.
//!
//! [`run`] takes an argument vector and returns the exit status together with
//! everything written to stdout and stderr, so the binary is a thin wrapper
//! and every path is testable in-process.
//!
//! Exit status: 0 when every result passed, 1 when a check failed, 2 on
//! usage or domain errors.

pub mod bench;
pub mod output;

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::arith::{is_prime, FactoredNatural, Natural};
use crate::error::Error;
use crate::identities::{
    lcm_binom_row_direct, lcm_binom_row_identity, lcm_range_factored, row_max_vp,
    row_max_vp_bruteforce,
};
use crate::padic::{
    expand, first_non_max_digit, vp, vp_binomial_kummer, vp_binomial_legendre, vp_natural,
};
use crate::verify::{psi_ratio, sweep, Check};

use bench::{BenchSubject, DEFAULT_CUTOFF};
use output::{Line, Payload};

pub use output::OutputRecord;

#[derive(Debug, Parser)]
#[command(name = "lcm-binom", about = "Exact lcm of binomial rows, p-adic valuations, and lcm(1..n) bounds")]
struct Cli {
    /// One JSON record per result line.
    #[arg(long, global = true)]
    json: bool,
    /// Summary lines only.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// p-adic valuation of n.
    Vp { n: u64, p: u64 },
    /// p-adic valuation of C(n, k).
    VpBinom {
        n: u64,
        k: u64,
        p: u64,
        #[arg(long, value_enum, default_value_t = ValuationMethod::Kummer)]
        method: ValuationMethod,
    },
    /// Base-p digits of k, least significant first.
    Digits { k: u64, p: u64 },
    /// Largest p-adic valuation in row k and where it is attained.
    RowMax {
        k: u64,
        p: u64,
        /// Also scan the row and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// lcm(1..n).
    LcmRange {
        n: u64,
        /// Print the exact value even above the cutoff.
        #[arg(long)]
        value: bool,
    },
    /// lcm of row k of Pascal's triangle.
    LcmBinomRow {
        k: u64,
        #[arg(long, value_enum, default_value_t = RowMethod::Identity)]
        method: RowMethod,
        /// Print the exact value even above the cutoff.
        #[arg(long)]
        value: bool,
    },
    /// Run a check over every input in [from, to].
    Verify {
        #[arg(value_parser = parse_check)]
        check: Check,
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// ln lcm(1..n) / n.
    PsiRatio { n: u64 },
    /// Time the factored paths against the direct oracles.
    Bench {
        #[arg(value_parser = parse_subject)]
        subject: BenchSubject,
        #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
        sizes: Vec<u64>,
        /// Largest size for which the direct oracle is also timed.
        #[arg(long, default_value_t = DEFAULT_CUTOFF)]
        cutoff: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ValuationMethod {
    Kummer,
    Legendre,
    Direct,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RowMethod {
    Identity,
    Direct,
}

fn parse_check(s: &str) -> Result<Check, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_subject(s: &str) -> Result<BenchSubject, String> {
    s.parse()
}

/// Exit status and captured streams of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    param: &'static str,
    error: Error,
}

trait At<T> {
    fn at(self, param: &'static str) -> Result<T, Failure>;
}

impl<T> At<T> for crate::Result<T> {
    fn at(self, param: &'static str) -> Result<T, Failure> {
        self.map_err(|error| Failure { param, error })
    }
}

fn prime(p: u64) -> Result<u64, Failure> {
    if is_prime(p) {
        Ok(p)
    } else {
        Err(Failure { param: "p", error: Error::NotPrime(p) })
    }
}

fn input(pairs: &[(&'static str, u64)]) -> Vec<(&'static str, String)> {
    pairs.iter().map(|(k, v)| (*k, v.to_string())).collect()
}

fn value_or_factors(f: FactoredNatural, force_value: bool, size: u64) -> Payload {
    if force_value || size <= DEFAULT_CUTOFF {
        Payload::Scalar(Value::String(f.value().to_string()))
    } else {
        Payload::Factors(f)
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { status: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { status: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli.command, cli.quiet) {
        Ok((lines, notes)) => {
            let mut stdout = String::new();
            for line in &lines {
                let text = if cli.json { line.json() } else { line.human() };
                let _ = writeln!(stdout, "{text}");
            }
            if !cli.json && !cli.quiet {
                for note in notes {
                    let _ = writeln!(stdout, "{note}");
                }
            }
            let status = if lines.iter().all(|l| l.ok) { 0 } else { 1 };
            Outcome { status, stdout, stderr: String::new() }
        }
        Err(Failure { param, error }) => Outcome {
            status: 2,
            stdout: String::new(),
            stderr: format!("error: invalid <{param}>: {error}\n"),
        },
    }
}

/// Result lines plus human-only notes (suppressed by `--quiet` and `--json`).
type Executed = (Vec<Line>, Vec<String>);

fn execute(command: &Command, quiet: bool) -> Result<Executed, Failure> {
    let mut notes = Vec::new();
    let lines = match *command {
        Command::Vp { n, p } => {
            let v = vp(n, prime(p)?).at("n")?;
            vec![Line::new("vp", input(&[("n", n), ("p", p)]), Payload::Scalar(json!(v.get())))]
        }
        Command::VpBinom { n, k, p, method } => {
            let p = prime(p)?;
            let v = match method {
                ValuationMethod::Kummer => vp_binomial_kummer(n, k, p),
                ValuationMethod::Legendre => vp_binomial_legendre(n, k, p),
                ValuationMethod::Direct => crate::arith::binomial(n, k).and_then(|c| vp_natural(&c, p)),
            }
            .at("k")?;
            vec![Line::new(
                "vp-binom",
                input(&[("n", n), ("k", k), ("p", p)]),
                Payload::Scalar(json!(v.get())),
            )]
        }
        Command::Digits { k, p } => {
            let e = expand(k, prime(p)?).at("p")?;
            let i0 = if k == 0 { None } else { first_non_max_digit(&e).at("k")? };
            vec![Line::new(
                "digits",
                input(&[("k", k), ("p", p)]),
                Payload::Fields(vec![
                    ("digits", json!(e.digits())),
                    ("N", json!(e.top_index())),
                    ("i0", json!(i0)),
                ]),
            )]
        }
        Command::RowMax { k, p, oracle } => {
            let r = row_max_vp(k, prime(p)?).at("p")?;
            let mut fields = vec![
                ("max_valuation", json!(r.max_valuation.get())),
                ("attained_at", json!(r.attained_at)),
            ];
            let mut ok = true;
            if oracle {
                let brute = row_max_vp_bruteforce(k, p).at("p")?;
                ok = brute == r.max_valuation;
                fields.push(("oracle", json!(brute.get())));
            }
            vec![Line::new("row-max", input(&[("k", k), ("p", p)]), Payload::Fields(fields)).with_ok(ok)]
        }
        Command::LcmRange { n, value } => {
            let f = lcm_range_factored(n).at("n")?;
            vec![Line::new("lcm-range", input(&[("n", n)]), value_or_factors(f, value, n))]
        }
        Command::LcmBinomRow { k, method, value } => {
            let f = match method {
                RowMethod::Identity => lcm_binom_row_identity(k).at("k")?,
                RowMethod::Direct => {
                    let direct: Natural = lcm_binom_row_direct(k);
                    FactoredNatural::from_smooth(&direct, k).at("k")?
                }
            };
            let name = match method {
                RowMethod::Identity => "identity",
                RowMethod::Direct => "direct",
            };
            let mut inp = input(&[("k", k)]);
            inp.push(("method", name.to_string()));
            vec![Line::new("lcm-binom-row", inp, value_or_factors(f, value, k))]
        }
        Command::Verify { check, from, to, jobs } => {
            let workers = jobs.unwrap_or_else(|| {
                std::thread::available_parallelism().map_or(1, |n| n.get())
            });
            let s = sweep(check, from, to, workers).at("from")?;
            if !quiet && !s.failing_inputs.is_empty() {
                notes.push(format!(
                    "failing inputs: {}",
                    s.failing_inputs.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
                ));
            }
            let mut inp = input(&[("from", from), ("to", to), ("jobs", workers as u64)]);
            inp.insert(0, ("check", check.name().to_string()));
            let ok = s.failures == 0;
            vec![Line::new(
                "verify",
                inp,
                Payload::Fields(vec![
                    ("check", json!(check.name())),
                    ("total", json!(s.total)),
                    ("failures", json!(s.failures)),
                    ("first_failure", json!(s.first_failure)),
                    ("failing_inputs", json!(s.failing_inputs)),
                    ("elapsed_secs", json!(s.elapsed_secs)),
                ]),
            )
            .with_ok(ok)]
        }
        Command::PsiRatio { n } => {
            let r = psi_ratio(n).at("n")?;
            vec![Line::new("psi-ratio", input(&[("n", n)]), Payload::Scalar(json!(r)))]
        }
        Command::Bench { subject, ref sizes, cutoff } => {
            let rows = bench::bench(subject, sizes, cutoff).at("sizes")?;
            rows.into_iter()
                .map(|r| {
                    let ok = r.values_match != Some(false);
                    let mut inp = input(&[("size", r.size), ("cutoff", cutoff)]);
                    inp.insert(0, ("subject", subject.name().to_string()));
                    Line::new(
                        "bench",
                        inp,
                        Payload::Fields(vec![
                            ("size", json!(r.size)),
                            ("fast_secs", json!(r.fast_secs)),
                            ("direct_secs", json!(r.direct_secs)),
                            ("speedup", json!(r.speedup)),
                            ("values_match", json!(r.values_match)),
                        ]),
                    )
                    .with_ok(ok)
                })
                .collect()
        }
    };
    Ok((lines, notes))
}
