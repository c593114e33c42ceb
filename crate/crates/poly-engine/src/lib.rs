//! Exact multivariate polynomial arithmetic over the rationals.
//!
//! Everything here is exact: coefficients are arbitrary-precision
//! rationals, divisions either succeed exactly or report the offending
//! remainder. The crate provides the arithmetic kernel used by the
//! Gröbner and arrangement layers: ring operations, reduction modulo
//! sets of variable differences, fraction-free determinants and
//! elementary symmetric polynomials.

mod matrix;
mod monomial;
mod poly;
mod symmetric;

pub use matrix::{determinant, determinant_cofactor, determinant_factored};
pub use monomial::{cmp_degrevlex, Monomial, MAX_VARS};
pub use poly::{parse_polynomial, ParseError, Polynomial};
pub use symmetric::{difference_product, elementary_symmetric, graded_monomials, monomial_count};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational coefficient type.
pub type Rational = BigRational;

/// Convenience constructor for a rational from two machine integers.
pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Convenience constructor for an integer rational.
pub fn rat_int(n: i64) -> Rational {
    BigRational::from(BigInt::from(n))
}

/// Errors reported by polynomial operations.
#[derive(Debug, Clone, thiserror::Error)]
pub enum PolyError {
    /// Exact division failed; carries the nonzero remainder.
    #[error("inexact division: remainder {remainder}")]
    Inexact { remainder: Polynomial },
    #[error("variable count mismatch: {0} vs {1}")]
    VarMismatch(usize, usize),
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("{0}")]
    Parameter(String),
}
