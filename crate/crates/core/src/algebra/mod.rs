//! Finite algebraic structures given by operation tables.
//!
//! Elements are the indices `0..n`. Every structure is validated
//! exhaustively on construction, so a value of type [`OrientedSingquandle`],
//! [`Psyquandle`] or [`ShadowStructure`] always satisfies its axioms.

mod biquandle;
mod closure;
pub mod formula;
pub mod io;
mod morphism;
mod psyquandle;
mod quandle;
mod shadow;
mod singquandle;
mod table;

pub use biquandle::{validate_biquandle, Biquandle};
pub use closure::{shadow_closure, substructure_closure};
pub use morphism::{are_isomorphic, is_homomorphism};
pub use psyquandle::{validate_psyquandle, PsyOp, Psyquandle};
pub use quandle::{
    alexander_quandle, dihedral_quandle, quandle_from_group, trivial_quandle, validate_quandle, GroupMode,
};
pub use shadow::{validate_shadow, ActionTable, ShadowStructure};
pub use singquandle::{formula_tables, validate_singquandle, OrientedSingquandle};
pub use table::{OperationTable, ValidationReport, Violation};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("table of order {order} needs {expected} entries, got {found}")]
    TableSize {
        order: usize,
        expected: usize,
        found: usize,
    },
    #[error("table entry {value} at ({row}, {col}) is outside 0..{order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("structure must have at least one element")]
    Empty,
    #[error("tables have different orders")]
    OrderMismatch,
    #[error("invalid {kind}: {report}")]
    Invalid {
        kind: &'static str,
        report: ValidationReport,
    },
    #[error("invalid parameters: {0}")]
    Parameter(String),
    #[error(transparent)]
    Formula(#[from] formula::FormulaError),
    #[error("line {line}: {reason}")]
    Format { line: usize, reason: String },
}

/// An element index.
pub type Element = usize;
