use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod numfmt;

#[derive(Parser, Debug)]
#[command(
    name = "capacity",
    version,
    about = "Capacities, fuzzy integrals and aggregation axioms"
)]
struct Cli {
    /// Output format
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TransformKind {
    /// Set function -> Möbius coefficients
    Mobius,
    /// Möbius coefficients -> set function
    Zeta,
    /// Set function -> co-Möbius coefficients
    Comobius,
    /// Monotone set function -> ordinal Möbius coefficients
    Ordinal,
    /// Capacity -> conjugate capacity
    Conjugate,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Apply a transform to a set function file
    Transform {
        kind: TransformKind,
        #[arg(long)]
        input: PathBuf,
    },
    /// Evaluate an integral at one score vector
    Eval {
        /// choquet, sipos, mle, smle, sugeno-prod or cpt
        #[arg(long)]
        integral: String,
        #[arg(long)]
        capacity: PathBuf,
        /// Capacity for negative scores (cpt only)
        #[arg(long)]
        capacity2: Option<PathBuf>,
        /// Comma-separated scores in criterion order
        #[arg(long, allow_hyphen_values = true)]
        scores: String,
    },
    /// Interaction indices and Shapley values
    Interaction {
        #[arg(long)]
        capacity: PathBuf,
        /// 1-based criteria, e.g. 1,3
        #[arg(long)]
        coalition: Option<String>,
        /// Classification threshold
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Sample aggregation axioms against an integral
    Verify {
        #[arg(long)]
        capacity: PathBuf,
        #[arg(long)]
        capacity2: Option<PathBuf>,
        #[arg(long)]
        integral: String,
        /// Comma-separated axiom ids (HE,A,M,M1,I,A1,A2,C1,S1) or "all"
        #[arg(long)]
        axioms: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Treat the integral as defined on [0,1]^n only
        #[arg(long)]
        unit_cube: bool,
        /// Sample outside [0,1]^n even with --unit-cube
        #[arg(long)]
        allow_out_of_domain: bool,
    },
    /// Tabulate all single-capacity integrals on a set of score vectors
    Compare {
        #[arg(long)]
        capacity: PathBuf,
        /// JSON array of score arrays, or one comma-separated vector per line
        #[arg(long)]
        scores_file: PathBuf,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Rank acts under an aggregation model
    Rank {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        acts: PathBuf,
    },
}

/// Exit 2 for bad invocations, 1 for inputs that violate a domain rule.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(String),
}

impl From<capacity_core::Error> for CliError {
    fn from(e: capacity_core::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Transform { kind, input } => commands::transform(kind, &input, cli.format),
        Command::Eval {
            integral,
            capacity,
            capacity2,
            scores,
        } => commands::eval(
            &integral,
            &capacity,
            capacity2.as_deref(),
            &scores,
            cli.format,
        ),
        Command::Interaction {
            capacity,
            coalition,
            tol,
        } => commands::interaction(&capacity, coalition.as_deref(), tol, cli.format),
        Command::Verify {
            capacity,
            capacity2,
            integral,
            axioms,
            seed,
            samples,
            tol,
            unit_cube,
            allow_out_of_domain,
        } => {
            let cfg = capacity_core::axioms::AxiomCheckConfig {
                samples,
                seed,
                tolerance: tol,
                allow_out_of_domain,
                ..Default::default()
            };
            commands::verify(
                &capacity,
                capacity2.as_deref(),
                &integral,
                &axioms,
                cfg,
                unit_cube,
                cli.format,
            )
        }
        Command::Compare {
            capacity,
            scores_file,
            seed,
            samples,
        } => {
            let cfg = capacity_core::axioms::AxiomCheckConfig {
                samples,
                seed,
                ..Default::default()
            };
            commands::compare(&capacity, &scores_file, cfg, cli.format)
        }
        Command::Rank { model, acts } => commands::rank(&model, &acts, cli.format),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
