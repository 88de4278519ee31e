use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use overdet::acceptance::run_all;
use overdet::report::{analyze_catalog, analyze_source, AnalysisError, AnalysisOptions, CATALOG};
use overdet::sampling::DEFAULT_SEED;

#[derive(Parser)]
#[command(name = "overdet", version, about = "Removable singularity analysis for linear PDE systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a system file.
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        opts: Opts,
    },
    /// Analyze a built-in system.
    Catalog {
        name: String,
        #[command(flatten)]
        opts: Opts,
    },
    /// List the built-in systems.
    ListCatalog,
    /// Run the acceptance suite.
    Selftest {
        #[arg(long, env = "OVERDET_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Opts {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, env = "OVERDET_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    /// Defaults to the number of variables.
    #[arg(long)]
    max_res_len: Option<usize>,
    /// Ask whether a submanifold of this dimension is removable (repeatable).
    #[arg(long = "query-dim", allow_negative_numbers = true)]
    query_dim: Vec<i64>,
    #[arg(long)]
    no_omega: bool,
    #[arg(long)]
    no_flagcover: bool,
}

impl Opts {
    fn analysis(&self) -> AnalysisOptions {
        AnalysisOptions {
            seed: self.seed,
            samples: self.samples,
            max_res_len: self.max_res_len,
            query_dims: self.query_dim.clone(),
            omega: !self.no_omega,
            flagcover: !self.no_flagcover,
        }
    }
}

const USAGE: u8 = 2;

// A closed pipe (`overdet ... | head`) is not an error worth a panic.
fn out(s: &str) {
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match cli.command {
        Command::ListCatalog => {
            for (name, description, _) in CATALOG {
                out(&format!("{name:<16}{description}\n"));
            }
            ExitCode::SUCCESS
        }
        Command::Selftest { seed } => {
            let results = run_all(seed);
            for r in &results {
                out(&format!("{}\n", r.line()));
            }
            let failed = results.iter().filter(|r| !r.passed).count();
            out(&format!("{} of {} criteria passed\n", results.len() - failed, results.len()));
            if failed == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Command::Analyze { file, opts } => {
            let text = match std::fs::read_to_string(&file) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: cannot read {}: {e}", file.display());
                    return ExitCode::from(USAGE);
                }
            };
            emit(analyze_source(&text, &opts.analysis()), opts.format)
        }
        Command::Catalog { name, opts } => emit(analyze_catalog(&name, &opts.analysis()), opts.format),
    }
}

fn emit(result: Result<overdet::report::AnalysisReport, AnalysisError>, format: Format) -> ExitCode {
    match result {
        Ok(report) => {
            match format {
                Format::Text => out(&report.to_text()),
                Format::Json => out(&format!("{}\n", report.to_json())),
            }
            ExitCode::SUCCESS
        }
        Err(AnalysisError::UnknownSystem(name)) => {
            eprintln!("error: unknown catalog system `{name}` (see `overdet list-catalog`)");
            ExitCode::from(USAGE)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
