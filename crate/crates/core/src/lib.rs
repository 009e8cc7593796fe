//! Exact arithmetic for Pascal space and Pauli Pascal space.
//!
//! The crate generates ordinary and anticommutative ("Pauli") Pascal
//! triangles, pyramids, and hyperpyramids for positive and negative total
//! exponents, and derives the sequence families living on their diagonals:
//! Fibonacci, Jacobsthal, and Fibonacci numbers of order k, together with
//! their Pauli counterparts.
//!
//! Everything is exact. Coefficients are arbitrary-precision rationals,
//! Binet closed forms run in a quadratic extension field, and the divergent
//! diagonal series of the negative pyramids are assigned values through
//! rational generating functions evaluated beyond their radius of
//! convergence. Floating point appears only in the `*_closed` verification
//! forms, which exist to be checked against the exact paths.
//!
//! The crate is `no_std` (with `alloc`); IO, rendering, and the command-line
//! front end live in the companion `pauli-pascal-cli` crate.

#![no_std]

extern crate alloc;

pub mod divergent;
pub mod element;
pub mod error;
pub mod matrix;
pub mod multi_index;
pub mod pyramid;
pub mod quadratic;
pub mod sequences;

pub use element::{GradedElement, Laurent};
pub use error::Error;
pub use matrix::{Matrix2, MatrixRep};
pub use multi_index::{CommutationMode, MultiIndex};
pub use pyramid::{CoefficientTable, LayerSpec};
pub use quadratic::QuadraticNumber;

/// Exact scalar used throughout: an arbitrary-precision rational.
pub type Rational = num_rational::BigRational;

/// Arbitrary-precision signed integer.
pub type Int = num_bigint::BigInt;

/// Maximum ambient dimension of Pascal space supported by the engine.
pub const MAX_DIM: usize = 8;

/// Shorthand for building a [`Rational`] from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(Int::from(n))
}

/// Shorthand for building a [`Rational`] fraction `n/d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(Int::from(n), Int::from(d))
}
