//! Exact arithmetic: polynomials, rational functions, specializations.

pub mod context;
pub mod gcd;
pub mod poly;
pub mod ratfunc;
pub mod scalar;

pub use context::{Mode, RingContext};
pub use gcd::poly_gcd;
pub use poly::MultiPoly;
pub use ratfunc::RationalFunction;
pub use scalar::{Rat, Scalar};
