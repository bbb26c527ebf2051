//! Sparse multivariate polynomials over ℚ(ζ_N), polynomial determinants,
//! Gröbner bases, projective emptiness and Hilbert polynomials.
//!
//! Everything uses the graded-reverse-lexicographic order.

mod det;
pub mod groebner;
mod hilbert;
mod modular;
mod poly;

pub use det::{all_minors, maximal_minors, minor, poly_det, subsets};
pub use groebner::{groebner, groebner_cancellable, groebner_with_cap, is_unit_ideal, normal_form, projective_empty, Ideal};
pub use hilbert::{hilbert_numerator, hilbert_polynomial, monomial_hilbert_polynomial};
pub use modular::{is_unit_ideal_mod_p, PrimeReduction};
pub use poly::{Monomial, MultiPoly};
