//! Invariants computed from colorings: cocycle state sums, singquandle and
//! shadow polynomials, and Boltzmann-enhanced psyquandle polynomials.

mod boltzmann;
mod cocycle;
mod linear;
mod polynomials;
mod shadow;
mod weights;

pub use boltzmann::{boltzmann_single, boltzmann_two, validate_boltzmann, BoltzmannCheck, BoltzmannPair};
pub use cocycle::{state_sum, validate_cocycle_pair, CocyclePair};
pub use linear::{solve_cocycle_space, CocycleSpace, PrimePowerPart};
pub use polynomials::{phi_ssqp, profile, sqp, ssqp, ProfileCounts, ProfileScope};
pub use shadow::{shadow_polynomial, sp, subsp};
pub use weights::{parse_weights, WeightFile, WeightTable};

use thiserror::Error;

use crate::algebra::ValidationReport;
use crate::coloring::ColoringError;
use crate::polynomial::ValueError;

#[derive(Debug, Error)]
pub enum InvariantError {
    #[error("weight table of order {found} does not match structure of order {expected}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("invalid cocycle pair: {0}")]
    InvalidCocycle(ValidationReport),
    #[error("invalid Boltzmann pair: {0}")]
    InvalidBoltzmann(ValidationReport),
    #[error("Boltzmann pair is not strongly compatible: {0}")]
    NotStronglyCompatible(ValidationReport),
    #[error("subset is not closed: {0}")]
    NotClosed(String),
    #[error("modulus must be at least 2, got {0}")]
    Modulus(u64),
    #[error("line {line}: {reason}")]
    Format { line: usize, reason: String },
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Value(#[from] ValueError),
}

/// Reduces `v` modulo `m`, with `m = 0` meaning the integers.
pub(crate) fn reduce(v: i64, m: u64) -> i64 {
    if m == 0 {
        v
    } else {
        v.rem_euclid(m as i64)
    }
}
