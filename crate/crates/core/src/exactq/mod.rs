//! Exact rational arithmetic and polynomial algebra in x, y, z.

mod parse;
mod poly;
mod rational;
mod resultant;
mod roots;
mod set;
mod uni;

use thiserror::Error;

pub use parse::parse_poly;
pub use poly::{Monomial, Poly, Var};
pub use rational::{
    denom_lcm, exact_int_root, format_rational, is_rational_square, naive_height, parse_rational,
    rat_int, rat_make, rational_kth_root, rational_sqrt, serde_rational, Rational,
};
pub use resultant::{discriminant_in, resultant_elim};
pub use roots::{
    candidate_plan, factorize, integer_coefficients, rational_roots, rational_roots_with,
    CandidatePlan, DEFAULT_FACTOR_BITS,
};
pub use set::{parse_set_file, RatSet};
pub use uni::UniPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid rational literal {0:?}")]
    BadRational(String),
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown variable {name:?} at offset {offset}")]
    UnknownVariable { offset: usize, name: String },
    #[error("expected a polynomial in {var} only, found {found}")]
    NotUnivariate { var: Var, found: Var },
    #[error("degree in {var} must be at least {needed}")]
    DegreeTooLow { var: Var, needed: u32 },
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("coefficients exceed the {bits}-bit factoring threshold")]
    CoefficientTooLarge { bits: u64 },
    #[error("line {line}: {message}")]
    SetFile { line: usize, message: String },
}

/// Monic gcd of two univariate polynomials.
pub fn gcd_uni(f: &UniPoly, g: &UniPoly) -> Result<UniPoly, ExactError> {
    f.gcd(g)
}

pub fn is_squarefree(f: &UniPoly) -> Result<bool, ExactError> {
    f.is_squarefree()
}
