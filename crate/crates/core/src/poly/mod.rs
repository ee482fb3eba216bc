//! Exact multivariate polynomials, monomial orders and the expression parser.

mod field;
mod monomial;
mod parse;
mod polynomial;
mod ring;

use thiserror::Error;

pub use field::{small_integer, Coeff, Field, MAX_CHARACTERISTIC};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::{parse_polynomial, MAX_EXPONENT};
pub use polynomial::{Polynomial, STORAGE_ORDER};
pub use ring::{Ring, MAX_VARIABLES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("unknown identifier `{name}` at position {pos}")]
    UnknownIdentifier { name: String, pos: usize },
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("coefficient 1/{value} at position {pos} is not representable in characteristic {characteristic}")]
    NotRepresentable {
        pos: usize,
        value: String,
        characteristic: u64,
    },
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("invalid ring: {0}")]
    InvalidRing(String),
}
