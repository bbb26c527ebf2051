//! Exact rationals and cyclotomic fields, the coefficient layer for all
//! symbolic computation in this crate.

mod cyclotomic;
pub mod linalg;
mod literal;
mod upoly;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, root_of_unity, Cyclotomic, CyclotomicField};
pub use linalg::Matrix;
pub use literal::parse_literal;
pub use upoly::QPoly;

/// Arbitrary-precision rational, always stored in lowest terms.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
