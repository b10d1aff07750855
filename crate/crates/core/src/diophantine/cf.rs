use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Zero};

use crate::algebra::FixedPointReal;
use crate::{Error, Result};

/// A continued fraction: finite for rationals, eventually periodic for
/// quadratic surds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContinuedFraction {
    /// `[a_0; a_1, ..., a_k]` in canonical form (`a_k >= 2` unless the value
    /// is an integer).
    Rational { quotients: Vec<u64> },
    /// `sqrt(d) = [preperiod; period, period, ...]`; the preperiod starts
    /// with the integer part.
    Surd {
        d: u128,
        preperiod: Vec<u128>,
        period: Vec<u128>,
    },
}

impl ContinuedFraction {
    /// Largest partial quotient, excluding the leading integer term.
    pub fn max_partial_quotient(&self) -> u128 {
        match self {
            ContinuedFraction::Rational { quotients } => {
                quotients.iter().skip(1).map(|&a| u128::from(a)).max().unwrap_or(0)
            }
            ContinuedFraction::Surd {
                preperiod, period, ..
            } => preperiod.iter().skip(1).chain(period).copied().max().unwrap_or(0),
        }
    }

    /// The first `count` partial quotients, leading term included.
    pub fn expand(&self, count: usize) -> Vec<u128> {
        match self {
            ContinuedFraction::Rational { quotients } => {
                quotients.iter().take(count).map(|&a| u128::from(a)).collect()
            }
            ContinuedFraction::Surd {
                preperiod, period, ..
            } => preperiod
                .iter()
                .chain(period.iter().cycle())
                .take(count)
                .copied()
                .collect(),
        }
    }
}

/// Folds `[a_0; a_1, ..., a_k]` into its convergent `p / q`.
pub fn fold_convergent<I: IntoIterator<Item = u128>>(quotients: I) -> (BigInt, BigInt) {
    let (mut p0, mut q0) = (BigInt::one(), BigInt::zero());
    let (mut p1, mut q1) = (BigInt::zero(), BigInt::one());
    for a in quotients {
        let a = BigInt::from(a);
        let p = &a * &p0 + &p1;
        let q = &a * &q0 + &q1;
        p1 = core::mem::replace(&mut p0, p);
        q1 = core::mem::replace(&mut q0, q);
    }
    (p0, q0)
}

/// Euclidean continued fraction of `a / n`.
pub fn cf_rational(a: u64, n: u64) -> Result<ContinuedFraction> {
    if n == 0 {
        return Err(Error::InvalidSpec("denominator must be nonzero".into()));
    }
    let mut quotients = Vec::new();
    let (mut num, mut den) = (a, n);
    loop {
        quotients.push(num / den);
        let r = num % den;
        if r == 0 {
            break;
        }
        num = den;
        den = r;
    }
    Ok(ContinuedFraction::Rational { quotients })
}

/// Periodic continued fraction of `sqrt(d)` by the integer recurrence
/// `m' = t a - m`, `t' = (d - m'^2) / t`, `a' = floor((a_0 + m') / t')`,
/// stopped at the first repeated state `(m, t)`.
pub fn cf_surd(d: u128) -> Result<ContinuedFraction> {
    let a0 = d.sqrt();
    if a0 * a0 == d {
        return Err(Error::PerfectSquare(d));
    }
    // m <= a0 and t <= 2 a0 keep every intermediate below 4 d.
    if d > u128::MAX / 4 {
        return Err(Error::Overflow("cf_surd radicand"));
    }
    let mut quotients = alloc::vec![a0];
    let mut seen: BTreeMap<(u128, u128), usize> = BTreeMap::new();
    let (mut m, mut t, mut a) = (0u128, 1u128, a0);
    loop {
        m = t * a - m;
        t = (d - m * m) / t;
        if let Some(&start) = seen.get(&(m, t)) {
            let period = quotients.split_off(start);
            return Ok(ContinuedFraction::Surd {
                d,
                preperiod: quotients,
                period,
            });
        }
        seen.insert((m, t), quotients.len());
        a = (a0 + m) / t;
        quotients.push(a);
    }
}

/// Largest of the first `depth` partial quotients (after the integer part)
/// of a fixed-point value.
///
/// For an inexact value a quotient is trusted only while its convergent
/// denominator satisfies `2 q^2 <= 2^W`; running past that, or reaching a
/// terminating expansion, is reported as `PrecisionExhausted`.
pub fn max_pq_of_real(alpha: &FixedPointReal, depth: usize) -> Result<u128> {
    let limit = BigInt::one() << alpha.width();
    let mut num = BigInt::from(alpha.frac_bits().clone());
    let mut den = limit.clone();
    let (mut q_prev, mut q) = (BigInt::zero(), BigInt::one());
    let mut best = 0u128;
    for k in 0..depth {
        if num.is_zero() {
            if alpha.is_exact() {
                return Ok(best);
            }
            return Err(Error::PrecisionExhausted { quotients: k });
        }
        let a = &den / &num;
        let r = &den % &num;
        den = core::mem::replace(&mut num, r);
        let q_next = &a * &q + &q_prev;
        if !alpha.is_exact() && BigInt::from(2) * &q_next * &q_next > limit {
            return Err(Error::PrecisionExhausted { quotients: k });
        }
        q_prev = core::mem::replace(&mut q, q_next);
        let a: u128 = a.try_into().map_err(|_| Error::Overflow("partial quotient"))?;
        best = best.max(a);
    }
    Ok(best)
}
