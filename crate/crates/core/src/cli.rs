//! Command-line front end. Predicate commands exit 0 for true and 1 for
//! false; malformed input exits 2.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::checks::{self, VerifyOptions};
use crate::error::Error;
use crate::file;
use crate::gf2::{self, BinaryMethod, BinaryWitness};
use crate::iso;
use crate::poly::{self, Convention};
use crate::search;
use crate::system::{validate_sea, DeltaMatroid, SetSystem};

/// Environment variable holding the default worker count.
pub const WORKERS_ENV: &str = "DELTAMAT_WORKERS";

#[derive(Parser, Debug)]
#[command(name = "deltamat", version, about = "Delta-matroid toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the symmetric exchange axiom.
    Validate { file: Option<PathBuf> },
    /// Twist by a set of element labels.
    Twist {
        file: Option<PathBuf>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        set: Vec<String>,
    },
    /// Twist by the whole ground set.
    Dual { file: Option<PathBuf> },
    /// Delete and contract elements (deletions first, ascending order).
    Minor {
        file: Option<PathBuf>,
        #[arg(long, value_delimiter = ',')]
        delete: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        contract: Vec<String>,
    },
    /// Print the smallest and largest feasible sizes and their difference.
    Width { file: Option<PathBuf> },
    /// Print the twist polynomial.
    Poly {
        file: Option<PathBuf>,
        /// Use half the width as exponent (even delta-matroids only).
        #[arg(long)]
        half_width: bool,
        /// Print `exponent:coefficient` pairs instead of the polynomial.
        #[arg(long)]
        machine: bool,
        #[arg(long, env = WORKERS_ENV, default_value_t = 1)]
        parallel: usize,
    },
    /// Decide binary representability over GF(2).
    Binary {
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
    },
    /// Decide whether two set systems differ only by relabelling.
    Iso { first: PathBuf, second: PathBuf },
    /// Print the delta-matroid of all even subsets of an N-set.
    Dn { n: usize },
    /// Search even normal delta-matroids for non-binary single-term cases.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long, env = WORKERS_ENV, default_value_t = 1)]
        parallel: usize,
        /// Sample this many random families instead of enumerating.
        #[arg(long)]
        sample: Option<u64>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the full reproducibility suite and print a pass/fail table.
    VerifyPaper {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, env = WORKERS_ENV, default_value_t = 1)]
        parallel: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Matrix,
    Minor,
    Both,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Kv,
}

/// A failure that maps to exit code 2.
#[derive(Debug)]
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

impl From<io::Error> for Usage {
    fn from(e: io::Error) -> Self {
        Usage(e.to_string())
    }
}

type Outcome = Result<i32, Usage>;

fn read_input(path: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<String, Usage> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).map_err(|e| Usage(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn load_system(path: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<SetSystem, Usage> {
    Ok(file::parse(&read_input(path, stdin)?)?)
}

fn load(path: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<DeltaMatroid, Usage> {
    validate_sea(load_system(path, stdin)?)
        .map_err(|e| Usage(format!("input is not a delta-matroid: {e}")))
}

fn labels(list: &[String]) -> impl Iterator<Item = &str> {
    list.iter().map(String::as_str).filter(|s| !s.is_empty())
}

fn dispatch(cli: Cli, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match cli.command {
        Command::Validate { file } => {
            let s = load_system(&file, stdin)?;
            match validate_sea(s) {
                Ok(_) => {
                    writeln!(out, "valid")?;
                    Ok(0)
                }
                Err(e) => {
                    writeln!(out, "invalid: {e}")?;
                    Ok(1)
                }
            }
        }
        Command::Twist { file, set } => {
            let d = load(&file, stdin)?;
            let t = d.twist_labels(labels(&set))?;
            write!(out, "{}", file::to_string(&t))?;
            Ok(0)
        }
        Command::Dual { file } => {
            let d = load(&file, stdin)?;
            write!(out, "{}", file::to_string(&d.dual()))?;
            Ok(0)
        }
        Command::Minor {
            file,
            delete,
            contract,
        } => {
            let d = load(&file, stdin)?;
            let x = d.mask_of(labels(&delete))?;
            let y = d.mask_of(labels(&contract))?;
            if x & y != 0 {
                return Err(Usage(format!(
                    "elements {} are both deleted and contracted",
                    d.format_set(x & y)
                )));
            }
            write!(out, "{}", file::to_string(&d.minor(x, y)))?;
            Ok(0)
        }
        Command::Width { file } => {
            let d = load(&file, stdin)?;
            writeln!(out, "{}", d.width_profile())?;
            Ok(0)
        }
        Command::Poly {
            file,
            half_width,
            machine,
            parallel,
        } => {
            let d = load(&file, stdin)?;
            let conv = if half_width {
                Convention::HalfWidth
            } else {
                Convention::Width
            };
            let p = poly::twist_polynomial_with(&d, conv, parallel)?;
            if machine {
                writeln!(out, "{}", p.machine_form())?;
            } else {
                writeln!(out, "{p}")?;
            }
            Ok(0)
        }
        Command::Binary { file, method } => {
            let d = load(&file, stdin)?;
            let method = match method {
                MethodArg::Matrix => BinaryMethod::Matrix,
                MethodArg::Minor => BinaryMethod::ExcludedMinor,
                MethodArg::Both => BinaryMethod::Both,
            };
            let v = match gf2::is_binary(&d, method) {
                Ok(v) => v,
                Err(e @ Error::MethodDisagreement { .. }) => {
                    writeln!(err, "internal consistency failure: {e}")?;
                    return Ok(3);
                }
                Err(e) => return Err(e.into()),
            };
            writeln!(out, "binary: {}", v.binary)?;
            match v.witness {
                Some(BinaryWitness::Representation { twist, matrix }) => {
                    writeln!(
                        out,
                        "witness: D = D(A) * {} with A = {matrix}",
                        d.format_set(twist)
                    )?;
                }
                Some(BinaryWitness::ExcludedMinor(w)) => {
                    let s = iso::excluded_minor(w.index);
                    writeln!(
                        out,
                        "witness: D \\ {} / {} is isomorphic to S{} * {}",
                        d.format_set(w.deleted),
                        d.format_set(w.contracted),
                        w.index,
                        s.format_set(w.twist)
                    )?;
                }
                None => {}
            }
            Ok(if v.binary { 0 } else { 1 })
        }
        Command::Iso { first, second } => {
            let a = load_system(&Some(first), stdin)?;
            let b = load_system(&Some(second), stdin)?;
            let same = iso::is_isomorphic(&a, &b)?;
            writeln!(
                out,
                "{}",
                if same { "isomorphic" } else { "not isomorphic" }
            )?;
            Ok(if same { 0 } else { 1 })
        }
        Command::Dn { n } => {
            let d = search::build_dn(n)?;
            write!(out, "{}", file::to_string(&d))?;
            Ok(0)
        }
        Command::Search {
            n,
            parallel,
            sample,
            seed,
            format,
        } => {
            let report = match sample {
                Some(trials) => search::sample_search(n, trials, seed, parallel)?,
                None => search::verify_main_theorem(n, parallel)?,
            };
            match format {
                Format::Text => writeln!(out, "{report}")?,
                Format::Kv => write!(out, "{}", report.key_values())?,
            }
            writeln!(err, "elapsed: {:.3}s", report.duration.as_secs_f64())?;
            Ok(if report.holds() { 0 } else { 1 })
        }
        Command::VerifyPaper {
            max_n,
            trials,
            seed,
            parallel,
        } => {
            let opts = VerifyOptions {
                max_n,
                sample_n: max_n + 1,
                sample_trials: trials,
                seed,
                workers: parallel,
                ..VerifyOptions::default()
            };
            if max_n > search::EXHAUSTIVE_MAX {
                return Err(Error::ExhaustiveTooLarge {
                    n: max_n,
                    max: search::EXHAUSTIVE_MAX,
                }
                .into());
            }
            let outcomes = checks::run_all(&opts);
            write!(out, "{}", checks::render_table(&outcomes))?;
            Ok(if outcomes.iter().all(|o| o.passed) {
                0
            } else {
                1
            })
        }
    }
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli, stdin, out, err) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}
