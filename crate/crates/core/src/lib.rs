//! Exact computer algebra for q,t-combinatorics of lattice paths under a line.
//!
//! Everything is computed over exact scalars: arbitrary-precision integers and
//! rationals, Laurent polynomials in q,t, and sparse Laurent polynomials in
//! x_1..x_l. There is no floating point anywhere. The main objects are
//!
//! - lattice paths weakly below a line with infinitesimally perturbed slope,
//!   their area and dinv statistics ([`paths`]),
//! - combinatorial LLT polynomials on tuples of skew diagrams ([`llt`]),
//! - the Demazure-Lusztig action and twisted non-symmetric Hall-Littlewood
//!   polynomials E and F ([`hecke`]),
//! - bounded expansions of raising-operator kernels, the character series
//!   attached to a run vector b, and generalized q,t-Catalan numbers
//!   ([`catalan`]),
//! - identity checkers that compute both sides of each identity through
//!   independent code paths ([`verify`]).

pub mod algebra;
pub mod catalan;
pub mod characters;
pub mod cli;
pub mod hecke;
pub mod kernel;
pub mod llt;
pub mod paths;
pub mod verify;

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("kernel expansion exceeded the configured limit ({0})")]
    CapOverflow(usize),
    #[error("polynomial is not symmetric near exponent {0:?}")]
    NotSymmetric(Vec<i64>),
    #[error("transposed expansion needs {needed} variables, only {have} available")]
    TooFewVariables { needed: usize, have: usize },
    #[error("line admits an exact tie: {0}")]
    AmbiguousLine(String),
    #[error("fractional parts are not pairwise distinct")]
    TiedGaps,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Invalid(String),
    #[error("method disagreement in {0}: independent computations differ")]
    MethodMismatch(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
