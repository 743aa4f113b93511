//! Exact dense linear algebra over the rationals or a prime field.

mod field;
mod matrix;
mod poly;

pub use field::{Field, Scalar};
pub use matrix::{quotient_basis, CoordMap, ExactMatrix, QuotientBasis};
pub use poly::{minimal_polynomial, rational_roots};
