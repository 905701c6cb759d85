//! Arithmetical-rank analysis of squarefree monomial ideals.
//!
//! The crate computes the minimal primes of a squarefree monomial ideal and
//! the invariants `mu`, `nu`, `tau` and `h`, evaluates the known upper bounds
//! on its arithmetical rank, builds explicit Schmitt-Vogel certificates
//! (polynomials generating the ideal up to radical) and computes
//! `pd(R/I)` through Hochster's formula as a matching lower bound.

pub mod analysis;
pub mod bench;
pub mod bounds;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod hochster;
pub mod linalg;
pub mod monomial;
pub mod primes;
pub mod random;
pub mod sv;

pub use error::{Error, Result};
pub use monomial::{Ideal, Monomial, Polynomial, VarSet};

/// Exact rationals used for every bound before flooring.
pub type Rational = num_rational::BigRational;

/// Arbitrary-precision integers: the last resort of the exact rank routine.
pub type BigInt = num_bigint::BigInt;

/// Machine integers tried first by the fraction-free rank routine.
pub type SmallInt = i64;

/// Field used by the division-based rank oracle.
pub type RationalField = num_rational::Ratio<BigInt>;
