//! Computational core for p-adic and classical special values attached to
//! Stark units over the rationals.
//!
//! The crate is organized bottom-up:
//!
//! * [`arith`] and [`bernoulli`]: exact integer/rational helpers and the
//!   Bernoulli number cache.
//! * [`padic`]: p-adic numbers for odd primes, Teichmüller character,
//!   principal-unit part, Iwasawa logarithm and the exponential.
//! * [`gamma`]: the logarithmic gamma series, Morita, extended and Coleman
//!   gamma functions, both p-adic beta functions, Frobenius scalars and
//!   Jacobi sums.
//! * [`real`]: fixed-point high precision reals, classical gamma/beta,
//!   Hurwitz zeta, the gamma-product decomposition and integer relations.
//! * [`cyclotomic`]: exact arithmetic in Q(ζ_m) and exact Stark units.
//! * [`reciprocity`]: the verification checks that tie everything together.

pub mod arith;
pub mod bernoulli;
pub mod cyclotomic;
pub mod error;
pub mod gamma;
pub mod padic;
pub mod poly;
pub mod real;
pub mod reciprocity;

pub use arith::Rational;
pub use error::{Error, Result};
pub use padic::PadicNumber;
