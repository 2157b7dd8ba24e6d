mod corpus;
mod embedded;
mod error;
mod inputs;
mod invariant;
mod output;
mod search;
mod validate;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::Value;

use crate::error::CliError;
use crate::invariant::InvariantKind;

/// Colorings and invariants of oriented singular links.
#[derive(Debug, Parser)]
#[command(name = "singlink", version)]
struct Cli {
    /// Print results as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Report computation time.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check structure, diagram and weight files.
    Validate {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
        /// Structure that weight files are checked against.
        #[arg(long)]
        against: Option<PathBuf>,
    },
    /// Compute an invariant from a diagram (.dgm), a structure (.alg) and optional weights (.wgt).
    Invariant {
        kind: InvariantKind,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Solve for all cocycle pairs of a singquandle modulo N.
    SearchCocycles {
        structure: PathBuf,
        #[arg(long)]
        modulus: u64,
        /// Weight file whose membership in the solution group is tested.
        #[arg(long)]
        contains: Option<PathBuf>,
    },
    /// Recompute every bundled reproduction target.
    Corpus {
        #[arg(long, value_enum)]
        filter: Option<corpus::Group>,
        /// Read corpus diagrams from this directory instead of the bundled copies.
        #[arg(long)]
        corpus_dir: Option<PathBuf>,
    },
}

/// Exit status: 0 success, 1 value mismatch, 2 input or validation error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Success,
    Mismatch,
    InputError,
}

impl From<Status> for ExitCode {
    fn from(s: Status) -> ExitCode {
        ExitCode::from(match s {
            Status::Success => 0,
            Status::Mismatch => 1,
            Status::InputError => 2,
        })
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("JSON values serialize"));
}

fn validate(paths: &[PathBuf], against: Option<&std::path::Path>, json: bool) -> Status {
    let mut status = Status::Success;
    let mut reports = Vec::new();
    for path in paths {
        match validate::validate_file(path, against) {
            Ok(report) => {
                if !report.is_valid() {
                    status = Status::InputError;
                }
                if json {
                    reports.push(report.to_json());
                } else {
                    println!("{}", report.to_text());
                }
            }
            Err(e) => {
                status = Status::InputError;
                eprintln!("error: {e}");
                if json {
                    reports.push(serde_json::json!({ "path": path.display().to_string(), "error": e.to_string() }));
                }
            }
        }
    }
    if json {
        print_json(&Value::Array(reports));
    }
    status
}

fn run(cli: Cli) -> Result<Status, CliError> {
    match cli.command {
        Command::Validate { paths, against } => Ok(validate(&paths, against.as_deref(), cli.json)),
        Command::Invariant { kind, files } => {
            let result = invariant::run(kind, &files)?;
            if cli.json {
                print_json(&result.to_json(cli.timing));
            } else {
                println!("{}", result.to_text(cli.timing));
            }
            Ok(Status::Success)
        }
        Command::SearchCocycles {
            structure,
            modulus,
            contains,
        } => {
            let result = search::run(&structure, modulus, contains.as_deref())?;
            if cli.json {
                print_json(&result.to_json());
            } else {
                println!("{}", result.to_text());
            }
            Ok(if result.generators_valid {
                Status::Success
            } else {
                Status::Mismatch
            })
        }
        Command::Corpus { filter, corpus_dir } => {
            let sources = corpus::Sources {
                diagram_dir: corpus_dir,
            };
            let outcomes = corpus::run(filter, &sources);
            let failures = outcomes.iter().filter(|o| !o.ok).count();
            if cli.json {
                let rows: Vec<Value> = outcomes.iter().map(|o| o.to_json(cli.timing)).collect();
                print_json(&serde_json::json!({ "kind": "corpus", "rows": rows, "failures": failures }));
            } else {
                for o in &outcomes {
                    println!("{}", o.to_text(cli.timing));
                }
                println!("{} rows, {failures} mismatched", outcomes.len());
            }
            Ok(if failures == 0 {
                Status::Success
            } else {
                Status::Mismatch
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(status) => status.into(),
        Err(e) => {
            eprintln!("error: {e}");
            Status::InputError.into()
        }
    }
}
