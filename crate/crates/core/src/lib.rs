//! Exact constructions and measurements for low-discrepancy point sets.
//!
//! The crate is `no_std` (it needs `alloc`) and is split into four areas:
//!
//! * [`algebra`]: prime fields, generating matrices, polynomials and
//!   truncated Laurent series over `Z_q`, fixed-point reals.
//! * [`generators`]: Kronecker, Halton, digital, digital-Kronecker, lattice,
//!   rational-function, Hammersley, power-ratio, digit-sum filtered and hybrid
//!   sequences, all streamed as exact points.
//! * [`discrepancy`]: exact star and extreme discrepancy (1D closed forms, a
//!   2D sweep, a critical-grid enumeration), bracketed bounds for large sets
//!   and a brute-force oracle.
//! * [`diophantine`]: continued fractions of rationals and quadratic surds,
//!   Zaremba/Moser scans, Schmidt-type counts and Littlewood scans.
//!
//! Every value that decides a maximum is computed with integer or rational
//! arithmetic; no floating point is used anywhere in this crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod algebra;
pub mod diophantine;
pub mod discrepancy;
mod error;
pub mod generators;

pub use error::{Error, Result};
