use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde::Serialize;

use lefschetz_locus::cli::{self, Grid, JobSpec, SurveySpec};
use lefschetz_locus::PrimeField;

#[derive(Parser, Debug)]
#[command(name = "lefschetz-locus", version, about = "Non-Lefschetz loci and jumping lines of rank-2 bundles on P^2")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Source degrees a_1 <= ... <= a_{n+2}
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true)]
    a: Vec<i64>,

    /// Target degrees b_1 <= ... <= b_n
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true)]
    b: Vec<i64>,

    /// JSON array of rows of polynomial strings; replaces the seeded matrix
    #[arg(long, global = true)]
    matrix: Option<PathBuf>,

    /// JSON job file {"a", "b", "seed" | "matrix"}
    #[arg(long, global = true)]
    job: Option<PathBuf>,

    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[arg(long, global = true, env = "LL_PRIME", default_value_t = PrimeField::DEFAULT_PRIME as u64)]
    prime: u64,

    /// Line coordinates l1,l2,l3 for `line`
    #[arg(long, global = true, allow_hyphen_values = true)]
    line: Option<String>,

    /// Sampled lines per check (random sequences for `survey`)
    #[arg(long, global = true)]
    samples: Option<usize>,

    /// Human-readable table on stderr
    #[arg(long, global = true)]
    pretty: bool,

    /// Survey grid
    #[arg(long, global = true, value_enum, default_value_t = GridArg::All)]
    grid: GridArg,

    /// Add the monomial complete intersection (3,4,4) to a survey
    #[arg(long, global = true)]
    include_monomial: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hilbert function, socle and structural checks
    Hilbert,
    /// Non-Lefschetz locus: measurement against predictions
    Locus,
    /// Lefschetz and jumping-line status of one line
    Line,
    /// Batch run over a grid of fixtures
    Survey,
}

#[derive(clap::ValueEnum, Clone, Copy, Debug)]
enum GridArg {
    Ci,
    N2,
    All,
}

fn job(cli: &Cli, prime: PrimeField) -> Result<JobSpec> {
    let spec = match &cli.job {
        Some(path) => JobSpec::from_job_file(path, prime, cli.seed)
            .with_context(|| format!("reading job {}", path.display()))?,
        None => JobSpec::new(cli.a.clone(), cli.b.clone(), cli.seed, prime)?,
    };
    let spec = match &cli.matrix {
        Some(path) => spec.with_matrix(
            cli::read_matrix_file(path).with_context(|| format!("reading matrix {}", path.display()))?,
        ),
        None => spec,
    };
    Ok(spec.with_samples(cli.samples.unwrap_or(cli::DEFAULT_SAMPLES)))
}

fn emit<T: Serialize>(report: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(report)?);
    Ok(())
}

fn run(cli: &Cli) -> Result<bool> {
    let prime = PrimeField::new(cli.prime)?;
    match cli.command {
        Command::Hilbert => {
            let r = cli::run_hilbert(&job(cli, prime)?)?;
            emit(&r)?;
            if cli.pretty {
                eprint!("{}", cli::render_hilbert(&r));
            }
            Ok(r.all_pass())
        }
        Command::Locus => {
            let r = cli::run_locus(&job(cli, prime)?)?;
            emit(&r)?;
            if cli.pretty {
                eprint!("{}", cli::render_locus(&r));
            }
            Ok(r.all_pass())
        }
        Command::Line => {
            let Some(text) = &cli.line else {
                bail!("`line` needs --line l1,l2,l3");
            };
            let r = cli::run_line(&job(cli, prime)?, cli::parse_line(text)?)?;
            emit(&r)?;
            if cli.pretty {
                eprint!("{}", cli::render_line(&r));
            }
            Ok(r.all_pass())
        }
        Command::Survey => {
            let spec = SurveySpec {
                grid: match cli.grid {
                    GridArg::Ci => Grid::Ci,
                    GridArg::N2 => Grid::N2,
                    GridArg::All => Grid::All,
                },
                seed: cli.seed,
                prime,
                random_sequences: cli.samples.unwrap_or(5),
                lines: 100,
                include_monomial: cli.include_monomial,
            };
            let r = cli::run_survey(&spec)?;
            emit(&r)?;
            if cli.pretty {
                eprint!("{}", cli::render_survey(&r));
            }
            Ok(r.all_pass())
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
