//! `qchromatic`: expansions of q-chromatic symmetric functions from the
//! command line, with JSON output and the verification harness.

mod render;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qchromatic::algebra::DEFAULT_SEED;
use qchromatic::interval::{DyckWord, Hessenberg};
use qchromatic::partitions::Partition;
use qchromatic::verify::{self, Check, VerifyConfig};

/// Largest `n` accepted by `verify` and `sweep`.
const MAX_N: usize = 7;

#[derive(Parser, Debug)]
#[command(
    name = "qchromatic",
    version,
    about = "Exact expansions of q-chromatic symmetric functions of unit interval graphs"
)]
struct Cli {
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand χ_e in the Macdonald, elementary or Hall-Littlewood basis.
    Expand {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value_t = ExpandBasis::E)]
        basis: ExpandBasis,
        /// Emit the per-tableau summands of every coefficient.
        #[arg(long)]
        breakdown: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Compute χ_e (or F_e) by an independent oracle.
    Oracle {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value_t = Method::Colorings)]
        method: Method,
        #[arg(long, value_enum, default_value_t = OracleBasis::M)]
        basis: OracleBasis,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// List the strip tableaux SYT^e_λ of a shape.
    Tableaux {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        shape: Partition,
        /// Only tableaux satisfying the support condition (SYT-bar).
        #[arg(long)]
        star: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run the verification checks; exits with status 1 on any failure.
    Verify {
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..=MAX_N as u64))]
        max_n: u64,
        /// Comma-separated subset of checks (default: all except golden).
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<Check>>,
        /// Compare against the stored seven-vertex tables.
        #[arg(long)]
        example_n7: bool,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// e-expansions of every Hessenberg function of size n, as JSON lines.
    Sweep {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=MAX_N as u64))]
        n: u64,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Values e(1),...,e(n), comma separated.
    #[arg(long)]
    hessenberg: Option<Hessenberg>,
    /// Dyck word in the letters W and S.
    #[arg(long)]
    dyck: Option<DyckWord>,
}

impl GraphInput {
    fn hessenberg(&self) -> Hessenberg {
        match (&self.hessenberg, &self.dyck) {
            (Some(e), _) => e.clone(),
            (None, Some(d)) => Hessenberg::from_dyck(d),
            (None, None) => unreachable!("clap requires one input"),
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpandBasis {
    Macdonald,
    E,
    Hl,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Colorings,
    Operators,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleBasis {
    M,
    E,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<ExitCode, qchromatic::Error> {
    match cli.command {
        Command::Expand {
            input,
            basis,
            breakdown,
            format,
        } => {
            let e = input.hessenberg();
            render::emit(out, format, render::expand(&e, basis, breakdown)?)?;
        }
        Command::Oracle {
            input,
            method,
            basis,
            format,
        } => {
            let e = input.hessenberg();
            render::emit(out, format, render::oracle(&e, method, basis)?)?;
        }
        Command::Tableaux {
            input,
            shape,
            star,
            format,
        } => {
            let e = input.hessenberg();
            render::emit(out, format, render::tableaux(&e, &shape, star)?)?;
        }
        Command::Verify {
            max_n,
            checks,
            example_n7,
            seed,
            format,
        } => {
            let mut checks = match checks {
                Some(c) => c,
                None if example_n7 => Vec::new(),
                None => Check::ALL
                    .into_iter()
                    .filter(|c| *c != Check::Golden)
                    .collect(),
            };
            if example_n7 && !checks.contains(&Check::Golden) {
                checks.push(Check::Golden);
            }
            let cfg = VerifyConfig {
                max_n: max_n as usize,
                seed,
                checks,
            };
            let report = verify::run(&cfg);
            render::emit(out, format, render::verify(&report))?;
            if !report.passed {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Sweep { n } => {
            for line in render::sweep(n as usize)? {
                writeln!(out, "{line}").map_err(io_error)?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn io_error(e: io::Error) -> qchromatic::Error {
    qchromatic::Error::Parse(format!("write failed: {e}"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: cannot start {jobs} worker threads: {e}");
            return ExitCode::from(2);
        }
    }
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = match run(cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    };
    if out.flush().is_err() {
        return ExitCode::from(1);
    }
    code
}
