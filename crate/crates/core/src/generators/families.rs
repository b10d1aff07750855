use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;

use super::{PointSet, SequenceSpec, UnitPoint};
use crate::algebra::{
    digits, laurent_frac_eval, laurent_mul_poly, mat_vec_mod_q, FixedPointReal, GenMatrix,
    LaurentSeries, Poly, Prime,
};
use crate::{Error, Result};

/// Correct fractional bits every Kronecker coordinate must keep: an index is
/// accepted only while `n < 2^(W - MIN_CORRECT_BITS)` for an inexact parameter.
pub const MIN_CORRECT_BITS: u32 = 32;

/// `psi_b(n)`: the base-`b` digits of `n` mirrored behind the radix point.
pub fn radical_inverse(n: u64, b: u64) -> BigRational {
    assert!(b >= 2, "base must be at least 2");
    let (num, den) = radical_inverse_parts(n, b);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn radical_inverse_parts(mut n: u64, b: u64) -> (u128, u128) {
    let b = u128::from(b);
    let mut num = 0u128;
    let mut den = 1u128;
    while n > 0 {
        let digit = u128::from(n) % b;
        n = (u128::from(n) / b) as u64;
        num = num * b + digit;
        den *= b;
    }
    (num, den)
}

pub(crate) fn check_kronecker_budget(n: u64, alpha: &FixedPointReal) -> Result<()> {
    if alpha.is_exact() || n == 0 {
        return Ok(());
    }
    let width = alpha.width();
    let ok = width > MIN_CORRECT_BITS
        && (width - MIN_CORRECT_BITS >= 64 || n < 1u64 << (width - MIN_CORRECT_BITS));
    if ok {
        Ok(())
    } else {
        Err(Error::PrecisionBudgetExceeded { index: n, width })
    }
}

/// `({n a_1}, ..., {n a_d})` computed as `(n * bits) mod 2^W`.
///
/// Each coordinate is within `n * 2^-W` of the ideal value (exactly equal for
/// exact parameters).
pub fn kronecker_point(n: u64, alphas: &[FixedPointReal]) -> Result<UnitPoint> {
    let Some(first) = alphas.first() else {
        return Ok(UnitPoint::origin(0));
    };
    let width = first.width();
    let mut bits = Vec::with_capacity(alphas.len());
    for a in alphas {
        if a.width() != width {
            return Err(Error::InvalidSpec(
                "Kronecker alphas must share one fixed-point width".into(),
            ));
        }
        check_kronecker_budget(n, a)?;
        bits.push(a.frac_of_multiple(n));
    }
    UnitPoint::fixed(width, bits)
}

fn digits_to_rational(digits: &[u64], q: u64) -> BigRational {
    let qb = BigUint::from(q);
    let mut num = BigUint::zero();
    for &d in digits {
        num = num * &qb + d;
    }
    let den = qb.pow(digits.len() as u32);
    BigRational::new(num.into(), den.into())
}

/// Digital point: coordinate `j` is `sum_k y_k q^-k` with `y = C_j * digits(n)`
/// truncated to `precision` digits.
pub fn digital_point(
    n: u64,
    q: Prime,
    matrices: &[GenMatrix],
    precision: u32,
) -> Result<UnitPoint> {
    if precision == 0 {
        return Err(Error::InvalidSpec("precision must be at least 1".into()));
    }
    let nd = digits(n, q.get());
    let coords = matrices
        .iter()
        .map(|c| {
            let y = mat_vec_mod_q(c, &nd, precision as usize)?;
            Ok(digits_to_rational(&y, q.get()))
        })
        .collect::<Result<Vec<_>>>()?;
    UnitPoint::exact(coords)
}

/// Digital Kronecker point: coordinate `j` is `{n(x) f_j(x)}` at `x = q`,
/// truncated to `precision` digits.
pub fn digital_kronecker_point(
    n: u64,
    q: Prime,
    series: &[LaurentSeries],
    precision: u32,
) -> Result<UnitPoint> {
    let nx = Poly::from_index(n, q);
    let coords = series
        .iter()
        .map(|f| laurent_frac_eval(&laurent_mul_poly(f, &nx), precision))
        .collect::<Result<Vec<_>>>()?;
    UnitPoint::exact(coords)
}

/// Point `n` of the lattice set `({n a_j / N})`.
pub fn lattice_point(n: u64, big_n: u64, gens: &[u64]) -> Result<UnitPoint> {
    if n >= big_n {
        return Err(Error::InvalidSpec(alloc::format!(
            "index {n} is outside the lattice set of size {big_n}"
        )));
    }
    let coords = gens
        .iter()
        .map(|&a| {
            let num = (u128::from(n) * u128::from(a)) % u128::from(big_n);
            BigRational::new(BigInt::from(num), BigInt::from(big_n))
        })
        .collect();
    UnitPoint::exact(coords)
}

/// All `N` points of the lattice set with generating vector `gens`.
pub fn lattice_point_set(big_n: u64, gens: &[u64]) -> Result<PointSet> {
    let spec = SequenceSpec::Lattice {
        n: big_n,
        gens: gens.to_vec(),
    };
    spec.validate()?;
    let points = (0..big_n)
        .map(|n| lattice_point(n, big_n, gens))
        .collect::<Result<Vec<_>>>()?;
    PointSet::new(points, Some(spec), 0)
}

/// Rational-function net point `({n(x) g_j(x) / f(x)})` at `x = q`, truncated
/// to `t = deg f` digits.
pub fn rational_net_point(n: u64, q: Prime, f: &Poly, gs: &[Poly]) -> Result<UnitPoint> {
    let t = match f.degree() {
        Some(t) if t >= 1 => t as u32,
        _ => return Err(Error::InvalidSpec("denominator must have degree >= 1".into())),
    };
    let size = q
        .get()
        .checked_pow(t)
        .ok_or_else(|| Error::InvalidSpec("q^deg(f) overflows".into()))?;
    if n >= size {
        return Err(Error::InvalidSpec(alloc::format!(
            "index {n} is outside the net of size {size}"
        )));
    }
    let nx = Poly::from_index(n, q);
    let coords = gs
        .iter()
        .map(|g| {
            if g.degree().is_some_and(|d| d >= t as usize) || g.gcd(f).degree() != Some(0) {
                return Err(Error::InvalidSpec(
                    "numerator must be coprime to and of lower degree than the denominator".into(),
                ));
            }
            // Digit k of n g / f needs coefficients of g / f up to k + deg n <= 2t - 1.
            let series = LaurentSeries::from_rational(g, f, 2 * i64::from(t))?;
            laurent_frac_eval(&laurent_mul_poly(&series, &nx), t)
        })
        .collect::<Result<Vec<_>>>()?;
    UnitPoint::exact(coords)
}

/// `{(p / r)^n} = (p^n mod r^n) / r^n`.
pub fn power_ratio_point(n: u64, p: u64, r: u64) -> BigRational {
    let exp = u32::try_from(n).expect("exponent fits in u32");
    let num = BigUint::from(p).pow(exp);
    let den = BigUint::from(r).pow(exp);
    BigRational::new((num % &den).into(), den.into())
}

/// The `k`-th smallest `n` with even binary digit sum.
///
/// Exactly one of `2k`, `2k + 1` qualifies, and it is the `k`-th one.
pub fn digitsum_filtered_index(k: u64) -> u64 {
    let n = 2 * k;
    if n.count_ones() % 2 == 0 {
        n
    } else {
        n + 1
    }
}

/// Point `n` of the Hammersley set: `(n / N, psi_{b_1}(n), ...)`.
pub fn hammersley_point(n: u64, big_n: u64, bases: &[u64]) -> Result<UnitPoint> {
    if n >= big_n {
        return Err(Error::InvalidSpec(alloc::format!(
            "index {n} is outside the Hammersley set of size {big_n}"
        )));
    }
    let mut coords = Vec::with_capacity(bases.len() + 1);
    coords.push(BigRational::new(n.into(), big_n.into()));
    coords.extend(bases.iter().map(|&b| radical_inverse(n, b)));
    UnitPoint::exact(coords)
}
