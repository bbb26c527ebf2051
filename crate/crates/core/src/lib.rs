//! Exact verification toolkit for Fano threefolds cut out by three
//! (1,1)-forms in ℙ³×ℙ³ and their cyclic symmetries.
//!
//! The crate is layered bottom-up:
//!
//! * [`exactnum`]: rationals, cyclotomic fields ℚ(ζ_N), exact linear algebra;
//! * [`polyalg`]: sparse polynomials, determinants, Gröbner bases, Hilbert
//!   polynomials;
//! * [`model`]: the matrix triple, its determinantal quartic, smoothness and
//!   the maps between the blowdown centre and the quartic;
//! * [`action`]: cyclic actions in swap normal form, invariant pencils, the
//!   Picard lattice, and a seeded generator of equivariant instances;
//! * [`coh`]: line-bundle cohomology tables and the Koszul/truncation chase;
//! * [`chars`]: character multisets on the Lie algebras of the two Jacobians
//!   and the linearisability verdict.

pub mod action;
pub mod chars;
pub mod coh;
mod error;
pub mod exactnum;
pub mod model;
pub mod polyalg;

pub use error::{Error, ErrorKind, Result};
pub use exactnum::{Cyclotomic, CyclotomicField, Matrix, QPoly, Rational};
