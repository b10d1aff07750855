use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;

use super::{Poly, Prime};
use crate::{Error, Result};

/// A formal Laurent series `sum_{k >= omega} a_k x^{-k}` over `Z_q`, known
/// only on a window of indices.
///
/// `coeffs[i]` is `a_{omega + i}`. Coefficients with index below `omega` are
/// zero. A truncated series knows its coefficients for indices strictly below
/// [`LaurentSeries::known_until`]; an exact series (a finite sum) knows every
/// coefficient. Requests past the known window are errors, never zero-padded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries {
    q: Prime,
    omega: i64,
    coeffs: Vec<u64>,
    known_until: Option<i64>,
}

impl LaurentSeries {
    /// A truncated series: coefficients for indices `omega .. omega + coeffs.len()`.
    pub fn new(q: Prime, omega: i64, coeffs: Vec<u64>) -> Result<Self> {
        let end = omega + coeffs.len() as i64;
        Self::build(q, omega, coeffs, Some(end))
    }

    /// A finite series: every coefficient past the list is zero.
    pub fn exact(q: Prime, omega: i64, coeffs: Vec<u64>) -> Result<Self> {
        Self::build(q, omega, coeffs, None)
    }

    pub fn zero(q: Prime) -> Self {
        LaurentSeries {
            q,
            omega: 0,
            coeffs: Vec::new(),
            known_until: None,
        }
    }

    fn build(q: Prime, mut omega: i64, mut coeffs: Vec<u64>, known_until: Option<i64>) -> Result<Self> {
        for &c in &coeffs {
            q.check(c)?;
        }
        let lead = coeffs.iter().position(|&c| c != 0).unwrap_or(coeffs.len());
        coeffs.drain(..lead);
        omega += lead as i64;
        if known_until.is_none() {
            while coeffs.last() == Some(&0) {
                coeffs.pop();
            }
        }
        if coeffs.is_empty() && known_until.is_none() {
            return Ok(Self::zero(q));
        }
        Ok(LaurentSeries {
            q,
            omega,
            coeffs,
            known_until,
        })
    }

    /// Expands `g / f` with every coefficient of index `< until` known.
    pub fn from_rational(g: &Poly, f: &Poly, until: i64) -> Result<Self> {
        let q = f.modulus();
        let t = f
            .degree()
            .ok_or_else(|| Error::InvalidSpec("denominator is the zero polynomial".into()))?
            as i64;
        let (quot, mut rem) = g.div_rem(f);
        // Polynomial part: x^i has index -i.
        let lowest = -(quot.degree().map_or(0, |d| d as i64));
        let omega = lowest.min(1);
        let mut coeffs = Vec::new();
        // A monomial denominator yields a finite expansion; finish it so the
        // series is exact.
        let monomial = f.coeffs().iter().filter(|&&c| c != 0).count() == 1;
        let mut k = omega;
        while k < until || (monomial && !rem.is_zero()) {
            if k <= 0 {
                coeffs.push(quot.coeff((-k) as usize));
            } else {
                if rem.is_zero() {
                    return Self::exact(q, omega, coeffs);
                }
                // rem * x, then peel off the x^t term against f.
                let shifted = rem.mul(&Poly::monomial(q, 1));
                let a = q.mul(shifted.coeff(t as usize), q.inv(f.lead()).expect("nonzero lead"));
                rem = shifted.sub(&f.scale(a));
                coeffs.push(a);
            }
            k += 1;
        }
        if rem.is_zero() {
            return Self::exact(q, omega, coeffs);
        }
        Self::build(q, omega, coeffs, Some(until.max(omega)))
    }

    pub fn modulus(&self) -> Prime {
        self.q
    }

    /// Index of the leading nonzero coefficient (meaningless for the zero series).
    pub fn omega(&self) -> i64 {
        self.omega
    }

    /// `-omega`, the discrete exponential valuation (`None` for zero).
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(-self.omega)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Exclusive end of the known index window; `None` when every coefficient is known.
    pub fn known_until(&self) -> Option<i64> {
        self.known_until
    }

    /// Number of retained coefficients.
    pub fn truncation(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty() && self.known_until.is_none()
    }

    /// `a_k`, or an error if `k` is outside the known window.
    pub fn coeff(&self, k: i64) -> Result<u64> {
        if let Some(end) = self.known_until {
            if k >= end {
                return Err(Error::TruncationInsufficient {
                    requested: k,
                    available: end - 1,
                });
            }
        }
        if k < self.omega {
            return Ok(0);
        }
        Ok(self.coeffs.get((k - self.omega) as usize).copied().unwrap_or(0))
    }
}

/// `f * p`: the window slides down by `deg p` and keeps its length.
pub fn laurent_mul_poly(f: &LaurentSeries, p: &Poly) -> LaurentSeries {
    assert_eq!(f.q, p.modulus(), "mixed moduli");
    let q = f.q;
    let Some(deg) = p.degree() else {
        return LaurentSeries::zero(q);
    };
    if f.coeffs.is_empty() {
        return LaurentSeries {
            q,
            omega: f.omega - deg as i64,
            coeffs: Vec::new(),
            known_until: f.known_until.map(|e| e - deg as i64),
        };
    }
    let deg = deg as i64;
    let omega = f.omega - deg;
    let last = f.omega + f.coeffs.len() as i64; // exclusive
    let end = f.known_until.map_or(last, |e| e - deg);
    let mut coeffs = Vec::with_capacity((end - omega).max(0) as usize);
    for k in omega..end {
        let mut acc = 0;
        for (i, &pi) in p.coeffs().iter().enumerate() {
            if pi == 0 {
                continue;
            }
            let idx = k + i as i64;
            if idx >= f.omega && idx < last {
                acc = q.add(acc, q.mul(pi, f.coeffs[(idx - f.omega) as usize]));
            }
        }
        coeffs.push(acc);
    }
    LaurentSeries::build(q, omega, coeffs, f.known_until.map(|e| e - deg))
        .expect("coefficients are reduced")
}

/// The fractional part `sum_{k = max(1, omega)}^{digits} a_k q^{-k}`, exactly.
pub fn laurent_frac_eval(f: &LaurentSeries, digits: u32) -> Result<BigRational> {
    if f.is_zero() {
        return Ok(BigRational::zero());
    }
    let l = i64::from(digits);
    if let Some(end) = f.known_until {
        if l >= end {
            return Err(Error::TruncationInsufficient {
                requested: l,
                available: end - 1,
            });
        }
    }
    let q = BigUint::from(f.q.get());
    let mut num = BigUint::zero();
    for k in 1..=l {
        num = num * &q + f.coeff(k)?;
    }
    let den = q.pow(digits);
    Ok(BigRational::new(BigInt::from(num), BigInt::from(den)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use num_traits::One;

    fn p(q: u64) -> Prime {
        Prime::new(q).unwrap()
    }

    fn r(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn multiply_by_one_is_identity() {
        let f = LaurentSeries::exact(p(2), 1, vec![1]).unwrap();
        assert_eq!(laurent_mul_poly(&f, &Poly::one(p(2))), f);
    }

    #[test]
    fn multiply_by_x_shifts_exponent() {
        let f = LaurentSeries::exact(p(2), 1, vec![1]).unwrap();
        let g = laurent_mul_poly(&f, &Poly::monomial(p(2), 1));
        assert_eq!(g.omega(), 0);
        assert_eq!(g.coeffs(), &[1]);
        assert_eq!(laurent_frac_eval(&g, 5).unwrap(), BigRational::zero());
    }

    #[test]
    fn truncated_window_slides() {
        // x^{-1} + x^{-2} over Z_3 times 2x = 2 + 2x^{-1}
        let f = LaurentSeries::new(p(3), 1, vec![1, 1]).unwrap();
        let two_x = Poly::new(p(3), vec![0, 2]).unwrap();
        let g = laurent_mul_poly(&f, &two_x);
        assert_eq!(g.omega(), 0);
        assert_eq!(g.coeffs(), &[2, 2]);
        assert_eq!(g.truncation(), f.truncation());
        assert_eq!(g.known_until(), Some(2));
    }

    #[test]
    fn frac_eval_examples() {
        assert_eq!(laurent_frac_eval(&LaurentSeries::zero(p(2)), 7).unwrap(), BigRational::zero());
        let f = LaurentSeries::new(p(2), 1, vec![1, 0, 1]).unwrap();
        assert_eq!(laurent_frac_eval(&f, 3).unwrap(), r(5, 8));
        let g = LaurentSeries::new(p(3), 0, vec![2, 2, 1]).unwrap();
        assert_eq!(laurent_frac_eval(&g, 2).unwrap(), r(7, 9));
    }

    #[test]
    fn frac_eval_refuses_to_pad() {
        let f = LaurentSeries::new(p(2), 1, vec![1, 0, 1]).unwrap();
        assert_eq!(
            laurent_frac_eval(&f, 4),
            Err(Error::TruncationInsufficient {
                requested: 4,
                available: 3
            })
        );
    }

    #[test]
    fn rational_expansion_over_z2() {
        // 1 / (x^2 + x + 1) = x^{-2} + x^{-3} + x^{-5} + x^{-6} + ...
        let f = Poly::new(p(2), vec![1, 1, 1]).unwrap();
        let s = LaurentSeries::from_rational(&Poly::one(p(2)), &f, 8).unwrap();
        assert_eq!(s.omega(), 2);
        let got: alloc::vec::Vec<u64> = (1..8).map(|k| s.coeff(k).unwrap()).collect();
        assert_eq!(got, vec![0, 1, 1, 0, 1, 1, 0]);
        assert!(s.coeff(8).is_err());
        // g / x^t is a finite, exact series
        let xt = Poly::monomial(p(2), 3);
        let g = Poly::new(p(2), vec![1, 1]).unwrap();
        let e = LaurentSeries::from_rational(&g, &xt, 2).unwrap();
        assert_eq!(e.known_until(), None);
        assert_eq!(e.coeff(100).unwrap(), 0);
        assert_eq!(laurent_frac_eval(&e, 3).unwrap(), r(3, 8));
    }

    #[test]
    fn polynomial_part_is_discarded() {
        // (x^2 + 1) / x over Z_5 = x + x^{-1}
        let g = Poly::new(p(5), vec![1, 0, 1]).unwrap();
        let s = LaurentSeries::from_rational(&g, &Poly::monomial(p(5), 1), 4).unwrap();
        assert_eq!(s.omega(), -1);
        assert_eq!(laurent_frac_eval(&s, 3).unwrap(), r(1, 5));
        assert!(laurent_frac_eval(&s, 3).unwrap() < BigRational::one());
    }
}
