//! Exact arithmetic substrate: `Z_q`, matrices and polynomials over it,
//! truncated Laurent series in `x^{-1}`, and fixed-point reals.

mod field;
mod fixed;
mod laurent;
mod matrix;
mod poly;

pub use field::{Fq, Prime};
pub use fixed::{fixedpoint_sqrt, FixedPointReal, Origin};
pub use laurent::{laurent_frac_eval, laurent_mul_poly, LaurentSeries};
pub use matrix::{mat_vec_mod_q, GenMatrix, RowGenerator};
pub use num_rational::BigRational;
pub use poly::Poly;

use alloc::vec::Vec;

/// Base-`b` digits of `n`, least significant first. Zero has no digits.
pub fn digits(mut n: u64, b: u64) -> Vec<u64> {
    debug_assert!(b >= 2);
    let mut out = Vec::new();
    while n > 0 {
        out.push(n % b);
        n /= b;
    }
    out
}
