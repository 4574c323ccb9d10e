//! Exact rational arithmetic and weighted polynomial rings.

mod parse;
mod polynomial;
mod rational;
mod variable;

use thiserror::Error;

pub use parse::{parse_polynomial, ChernKind, ParseOptions};
pub use polynomial::{GradedPolynomial, Monomial};
pub use rational::{
    format_rational, int, is_even_integer, is_integer, is_nonnegative_integer, parse_rational,
    ratio, Rational, RationalParseError,
};
pub use variable::{MultiIndex, VariableId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("ring mismatch: kappa = {left} combined with kappa = {right}")]
    RingMismatch { left: u32, right: u32 },
    #[error("series is not invertible: its weight-zero part is not 1")]
    NonInvertibleSeries,
    #[error("substitution leaves {0} unassigned")]
    IncompleteSubstitution(VariableId),
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}
