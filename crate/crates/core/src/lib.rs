//! Signed simsun permutations and their descent polynomials.
//!
//! * [`permcore`]: words, descent statistics, simsun predicates.
//! * [`enumerate`]: exhaustive streams and brute-force descent polynomials.
//! * [`triangles`]: exact recurrence tables and identity checks.
//! * [`series`]: truncated power series used to expand the closed-form
//!   exponential generating functions.
//! * [`cli`]: the `simsun` command-line front end.

pub mod cli;
pub mod enumerate;
pub mod permcore;
pub mod poly;
pub mod series;
pub mod triangles;

pub use enumerate::{BruteForce, Caps, DescentPolynomial, Family};
pub use permcore::{ParityClass, SignedWord, UnsignedWord};
pub use poly::IntPoly;

/// Exact fraction used for sample-point evaluation.
pub type ExactRational = rug::Rational;
