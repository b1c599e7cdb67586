//! Exact scalar and polynomial arithmetic.
//!
//! Four layers: big rationals (re-exported from `num-rational`), the ordered
//! field of first-order infinitesimals a + b·ε, Laurent polynomials in q,t
//! with integer coefficients, and sparse Laurent polynomials in x_1..x_l over
//! q,t. All values are immutable after construction and every operation is a
//! pure function.

mod infinitesimal;
mod perm;
mod qt;
mod xlaurent;

pub use infinitesimal::{inf_compare, Infinitesimal};
pub use perm::Permutation;
pub use qt::QTLaurent;
pub use xlaurent::XLaurent;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
