use std::path::PathBuf;

use singlink::algebra::AlgebraError;
use singlink::diagram::DiagramError;
use singlink::invariants::InvariantError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{}: {source}", path.display())]
    Algebra { path: PathBuf, source: AlgebraError },
    #[error("{}: {source}", path.display())]
    Diagram { path: PathBuf, source: DiagramError },
    #[error("{}: {source}", path.display())]
    Weights { path: PathBuf, source: InvariantError },
    #[error("{}: {reason}", path.display())]
    Invalid { path: PathBuf, reason: String },
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}
