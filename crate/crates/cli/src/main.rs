//! `monosens` command-line front end.
//!
//! Data goes to standard output, diagnostics to standard error. Exit codes:
//! 0 on success (non-monotone analyses and non-converged sampling are data),
//! 2 on invalid input, 3 on an internal invariant violation.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use monosens::report::{analyze, curve_csv, curve_rows, verify_exact, verify_sample, VerifyReport};
use monosens::sampler::ChainConfig;
use monosens::Error;

#[derive(Parser)]
#[command(
    name = "monosens",
    version,
    about = "Sensitivity of monotone Boolean functions"
)]
struct Cli {
    /// Worker threads for enumeration and sampling (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one function given as a hex truth table (JSON report).
    Analyze {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        hex: String,
    },
    /// Expected average sensitivity of a typical monotone function for a range of n.
    Curve {
        #[arg(long)]
        min: usize,
        #[arg(long)]
        max: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Compare the closed form against enumeration or sampling.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        chain: ChainArgs,
    },
}

#[derive(Args)]
struct ChainArgs {
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    chains: Option<u64>,
    /// Burn-in sweeps (one sweep = 2^n proposals).
    #[arg(long = "burn-in")]
    burn_in: Option<u64>,
    /// Sweeps between recorded samples.
    #[arg(long)]
    thin: Option<u64>,
    /// Samples per chain.
    #[arg(long)]
    samples: Option<u64>,
}

impl ChainArgs {
    fn config(&self) -> ChainConfig {
        let d = ChainConfig::default();
        ChainConfig {
            seed: self.seed.unwrap_or(d.seed),
            burn_in_sweeps: self.burn_in.unwrap_or(d.burn_in_sweeps),
            thinning_sweeps: self.thin.unwrap_or(d.thinning_sweeps),
            samples_per_chain: self.samples.unwrap_or(d.samples_per_chain),
            chains: self.chains.unwrap_or(d.chains),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exact,
    Sample,
}

fn run(command: Command) -> Result<String, Error> {
    match command {
        Command::Analyze { n, hex } => {
            let report = analyze(&hex, n)?;
            Ok(serde_json::to_string_pretty(&report).unwrap() + "\n")
        }
        Command::Curve { min, max, format } => match format {
            Format::Csv => curve_csv(min, max),
            Format::Json => {
                let rows = curve_rows(min, max)?;
                Ok(serde_json::to_string_pretty(&rows).unwrap() + "\n")
            }
        },
        Command::Verify {
            n,
            mode,
            format,
            chain,
        } => {
            let report: VerifyReport = match mode {
                Mode::Exact => verify_exact(n)?,
                Mode::Sample => verify_sample(n, &chain.config())?,
            };
            Ok(match format {
                Format::Csv => report.to_csv(),
                Format::Json => report.to_json() + "\n",
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("monosens: cannot start worker pool: {e}");
            return ExitCode::from(3);
        }
    };
    match pool.install(|| run(cli.command)) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(out.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(3);
            }
            ExitCode::SUCCESS
        }
        Err(e @ Error::InvariantViolation(_)) => {
            eprintln!("monosens: {e}");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("monosens: {e}");
            ExitCode::from(2)
        }
    }
}
