//! `rank2km`: query and verify rank-2 Kac-Moody root systems from the shell.

mod plot;
mod records;
mod signs;

use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use rank2km::roots::{classify, real_roots};
use rank2km::structure::n_value;
use rank2km::subsystems::{delta_re_subsystem, phi_subsystem};
use rank2km::verify::{run_suite, Suite};
use rank2km::{CartanData, Family, RealRoot, RootVector};

#[derive(Parser)]
#[command(name = "rank2km", version, about = "Exact computations in rank-2 Kac-Moody root systems H(a,b)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone, Copy)]
struct CartanArgs {
    /// Off-diagonal entry a of the Cartan matrix [[2,-b],[-a,2]]
    #[arg(long)]
    a: i64,
    /// Off-diagonal entry b of the Cartan matrix [[2,-b],[-a,2]]
    #[arg(long)]
    b: i64,
}

impl CartanArgs {
    fn cartan(&self) -> Result<CartanData> {
        Ok(CartanData::new(self.a, self.b)?)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Phi,
    Delta,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Core,
    Sums,
    Subsystems,
    Signs,
    Oracle,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Core => Suite::Core,
            SuiteArg::Sums => Suite::Sums,
            SuiteArg::Subsystems => Suite::Subsystems,
            SuiteArg::Signs => Suite::Signs,
            SuiteArg::Oracle => Suite::Oracle,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List real roots with |j| <= max-index
    Roots {
        #[command(flatten)]
        cartan: CartanArgs,
        #[arg(long)]
        max_index: i64,
        /// Restrict to one family (LL, LU, SU, SL)
        #[arg(long)]
        family: Option<Family>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Classify the lattice vector x·α1 + y·α2
    Classify {
        #[command(flatten)]
        cartan: CartanArgs,
        #[arg(long, allow_hyphen_values = true)]
        x: BigInt,
        #[arg(long, allow_hyphen_values = true)]
        y: BigInt,
    },
    /// Evaluate [x_alpha, x_beta] for real roots given as FAMILY:j
    Commutator {
        #[command(flatten)]
        cartan: CartanArgs,
        #[arg(long, allow_hyphen_values = true)]
        alpha: RealRoot,
        #[arg(long, allow_hyphen_values = true)]
        beta: RealRoot,
        /// JSON file with extraspecial sign overrides (default: all +1)
        #[arg(long)]
        signs: Option<PathBuf>,
    },
    /// Describe the subsystem generated by a comma-separated list of roots
    Subsystem {
        #[command(flatten)]
        cartan: CartanArgs,
        #[arg(long, allow_hyphen_values = true)]
        generators: String,
        #[arg(long, value_enum, default_value = "phi")]
        mode: Mode,
    },
    /// Run a verification suite; exits with 1 if any check fails
    Verify {
        #[command(flatten)]
        cartan: CartanArgs,
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 10)]
        window: i64,
        #[arg(long)]
        signs: Option<PathBuf>,
    },
    /// Emit CSV points and conic samples for plotting the root system
    PlotData {
        #[command(flatten)]
        cartan: CartanArgs,
        #[arg(long, default_value_t = 3)]
        max_index: i64,
        #[arg(long, default_value_t = 200)]
        hyperbola_samples: usize,
    },
}

fn parse_generators(s: &str) -> Result<Vec<RealRoot>> {
    let gens = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<RealRoot>().with_context(|| format!("bad root spec {t:?}")))
        .collect::<Result<Vec<_>>>()?;
    if gens.is_empty() {
        bail!("at least one generator is required");
    }
    Ok(gens)
}

fn emit(out: &mut impl Write, value: &serde_json::Value) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    out.write_all(b"\n")?;
    Ok(())
}

/// Runs a command; `Ok(false)` means a verification failure.
fn run(cli: Cli, out: &mut impl Write) -> Result<bool> {
    match cli.command {
        Command::Roots { cartan, max_index, family, format } => {
            let cd = cartan.cartan()?;
            if max_index < 0 {
                bail!("--max-index must be nonnegative");
            }
            let roots = real_roots(max_index).filter(|r| family.map_or(true, |f| r.family == f));
            match format {
                Format::Json => {
                    for r in roots {
                        emit(out, &records::root(&cd, r))?;
                    }
                }
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(&mut *out);
                    w.write_record(["a", "b", "family", "j", "x", "y", "length", "Q"])?;
                    for r in roots {
                        w.write_record(records::root_row(&cd, r))?;
                    }
                    w.flush()?;
                }
            }
        }
        Command::Classify { cartan, x, y } => {
            let cd = cartan.cartan()?;
            let v = RootVector::new(x, y);
            emit(out, &records::classification(&cd, &v, &classify(&cd, &v)))?;
        }
        Command::Commutator { cartan, alpha, beta, signs } => {
            let cd = cartan.cartan()?;
            let s = signs::load(&cd, signs.as_deref())?;
            let res = n_value(&cd, &s, alpha, beta)?;
            emit(out, &records::commutator(&cd, &s, alpha, beta, &res))?;
        }
        Command::Subsystem { cartan, generators, mode } => {
            let cd = cartan.cartan()?;
            let gens = parse_generators(&generators)?;
            let (name, desc) = match mode {
                Mode::Phi => ("phi", phi_subsystem(&cd, &gens)?),
                Mode::Delta => ("delta", delta_re_subsystem(&cd, &gens)?),
            };
            emit(out, &records::subsystem(&cd, name, &gens, &desc))?;
        }
        Command::Verify { cartan, suite, window, signs } => {
            let cd = cartan.cartan()?;
            let s = signs::load(&cd, signs.as_deref())?;
            let suite = Suite::from(suite);
            let report = run_suite(&cd, suite, window, Some(&s))?;
            eprint!("{report}");
            emit(out, &records::verify(&cd, suite, window, &report))?;
            return Ok(report.passed());
        }
        Command::PlotData { cartan, max_index, hyperbola_samples } => {
            let cd = cartan.cartan()?;
            if max_index < 0 {
                bail!("--max-index must be nonnegative");
            }
            plot::write(&cd, max_index, hyperbola_samples, out)?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(true), Ok(())) => ExitCode::SUCCESS,
        (Ok(false), Ok(())) => ExitCode::from(1),
        // A closed downstream pipe (`| head`) is not an error.
        (Err(e), _) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        (_, Err(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        (Err(e), _) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        (_, Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        c.downcast_ref::<io::Error>().is_some_and(|io| io.kind() == io::ErrorKind::BrokenPipe)
            || c.downcast_ref::<csv::Error>().is_some_and(|ce| matches!(ce.kind(), csv::ErrorKind::Io(io) if io.kind() == io::ErrorKind::BrokenPipe))
            || c.downcast_ref::<serde_json::Error>().is_some_and(|je| je.io_error_kind() == Some(io::ErrorKind::BrokenPipe))
    })
}
