use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::FixedPointReal;
use crate::generators::families::check_kronecker_budget;
use crate::{Error, Result};

/// A real parameter: an exact rational or a fixed-point approximation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Real {
    Exact(BigRational),
    Fixed(FixedPointReal),
}

impl Real {
    // {n x}, exact for rationals and exact fixed-point values.
    fn frac_of_multiple(&self, n: u64) -> BigRational {
        match self {
            Real::Exact(x) => {
                let v = x * BigRational::from_integer(BigInt::from(n));
                let r = v.numer().mod_floor(v.denom());
                BigRational::new(r, v.denom().clone())
            }
            Real::Fixed(x) => BigRational::new(
                BigInt::from(x.frac_of_multiple(n)),
                BigInt::from(BigUint::one() << x.width()),
            ),
        }
    }

    // Per-unit error of the computed {n x}, scaled by n at the call site.
    fn unit_error(&self) -> BigRational {
        match self {
            Real::Fixed(x) if !x.is_exact() => {
                BigRational::new(BigInt::one(), BigInt::one() << x.width())
            }
            _ => BigRational::zero(),
        }
    }

    fn check_budget(&self, n: u64) -> Result<()> {
        match self {
            Real::Fixed(x) => check_kronecker_budget(n, x),
            Real::Exact(_) => Ok(()),
        }
    }
}

/// Minimum of `n ||n a|| ||n b||` over `1 <= n <= n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LittlewoodScan {
    pub min: BigRational,
    /// First `n` attaining the minimum.
    pub argmin: u64,
    /// The true minimum lies within `min +- error_bound`; zero for exact inputs.
    pub error_bound: BigRational,
}

fn dist_to_int(f: BigRational) -> BigRational {
    let other = BigRational::one() - &f;
    if other < f {
        other
    } else {
        f
    }
}

pub fn littlewood_scan(alpha: &Real, beta: &Real, n_max: u64) -> Result<LittlewoodScan> {
    if n_max == 0 {
        return Err(Error::InvalidSpec("n_max must be positive".into()));
    }
    alpha.check_budget(n_max)?;
    beta.check_budget(n_max)?;
    let mut best: Option<(BigRational, u64)> = None;
    for n in 1..=n_max {
        let v = BigRational::from_integer(BigInt::from(n))
            * dist_to_int(alpha.frac_of_multiple(n))
            * dist_to_int(beta.frac_of_multiple(n));
        if best.as_ref().map_or(true, |(b, _)| &v < b) {
            best = Some((v, n));
        }
    }
    let (min, argmin) = best.expect("n_max >= 1");
    let n = BigRational::from_integer(BigInt::from(n_max));
    let ea = &n * alpha.unit_error();
    let eb = &n * beta.unit_error();
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let error_bound = &n * (&half * &ea + &half * &eb + &ea * &eb);
    Ok(LittlewoodScan {
        min,
        argmin,
        error_bound,
    })
}
