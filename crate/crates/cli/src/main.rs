mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fiedler::Error;

#[derive(Debug, Parser)]
#[command(
    name = "fiedler",
    version,
    about = "Algebraic connectivity of small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct Common {
    /// Print a JSON report instead of text.
    #[arg(long)]
    pub json: bool,
    /// Relative gap under which eigenvalues count as equal.
    #[arg(long, default_value_t = fiedler::spectral::DEFAULT_MULTIPLICITY_TOL)]
    pub mult_tol: f64,
    /// Absolute gap under which two class members tie for the optimum.
    #[arg(long, default_value_t = fiedler::extremal::DEFAULT_TIE_TOL)]
    pub tie_tol: f64,
    /// Fiedler entries below this multiple of the largest entry count as zero.
    #[arg(long, default_value_t = fiedler::perron::ZERO_TOL)]
    pub zero_tol: f64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Spectrum, algebraic connectivity and Fiedler vector of a graph file.
    Compute {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Build a named family member, e.g. `family T_spider 9 3`.
    Family {
        id: String,
        #[arg(required = true)]
        params: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
        #[command(flatten)]
        common: Common,
    },
    /// Bottleneck Perron values of the components at a vertex.
    Perron {
        file: PathBuf,
        #[arg(long)]
        vertex: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Characteristic vertices and edges for the Fiedler vector.
    Charset {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Check an extremal statement over a range of orders.
    Verify {
        theorem: String,
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        /// Restrict to one pendant count (or diameter).
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, env = "SPECTRAL_WORKERS", default_value_t = 1)]
        workers: usize,
        #[arg(long, default_value_t = fiedler::extremal::VerifyOptions::default().seed)]
        seed: u64,
        /// Random instances per order for the property checks.
        #[arg(long, default_value_t = 200)]
        cases: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Algebraic connectivity of every member of a class, with its extremizers.
    Census {
        /// H, T, F, U, TreesDiam or Connected.
        class: String,
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with = "diameter")]
        k: Option<usize>,
        #[arg(long)]
        diameter: Option<usize>,
        #[arg(long)]
        objective: fiedler::extremal::Objective,
        #[arg(long, env = "SPECTRAL_WORKERS", default_value_t = 1)]
        workers: usize,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Edgelist,
    Graph6,
}

/// Failures mapped to exit codes.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Input(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 64,
            Failure::Input(_) => 65,
            Failure::Lib(e) => match e {
                Error::Parse(_)
                | Error::SelfLoop(_)
                | Error::DuplicateEdge(..)
                | Error::Disconnected => 65,
                Error::CapExceeded { .. } => 2,
                Error::InvalidVertex { .. }
                | Error::Domain(_)
                | Error::NotCutVertex(_)
                | Error::NotATree
                | Error::NotAComponent(_)
                | Error::NotAnEdge(..)
                | Error::EdgeOnCycle(..) => 64,
                _ => 70,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) | Failure::Input(m) => m.clone(),
            Failure::Lib(e) => e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 64 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Compute { file, common } => commands::compute(&file, &common),
        Command::Family {
            id,
            params,
            format,
            common,
        } => commands::family(&id, &params, format, &common),
        Command::Perron {
            file,
            vertex,
            common,
        } => commands::perron(&file, vertex, &common),
        Command::Charset { file, common } => commands::charset(&file, &common),
        Command::Verify {
            theorem,
            n_min,
            n_max,
            k,
            workers,
            seed,
            cases,
            common,
        } => commands::verify(
            &theorem,
            commands::VerifyArgs {
                n_min,
                n_max,
                k,
                workers,
                seed,
                cases,
            },
            &common,
        ),
        Command::Census {
            class,
            n,
            k,
            diameter,
            objective,
            workers,
            common,
        } => commands::census(&class, n, k.or(diameter), objective, workers, &common),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("fiedler: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}
