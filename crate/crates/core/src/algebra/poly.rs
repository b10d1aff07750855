use alloc::vec;
use alloc::vec::Vec;

use super::{digits, Prime};
use crate::Result;

/// A polynomial over `Z_q`, coefficients lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    q: Prime,
    coeffs: Vec<u64>,
}

impl Poly {
    pub fn new(q: Prime, mut coeffs: Vec<u64>) -> Result<Self> {
        for &c in &coeffs {
            q.check(c)?;
        }
        trim(&mut coeffs);
        Ok(Poly { q, coeffs })
    }

    pub fn zero(q: Prime) -> Self {
        Poly { q, coeffs: vec![] }
    }

    pub fn one(q: Prime) -> Self {
        Poly { q, coeffs: vec![1] }
    }

    /// `x^k`.
    pub fn monomial(q: Prime, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        Poly { q, coeffs }
    }

    /// The polynomial `n(x)` whose coefficients are the base-`q` digits of `n`.
    pub fn from_index(n: u64, q: Prime) -> Self {
        Poly {
            q,
            coeffs: digits(n, q.get()),
        }
    }

    /// Evaluates at `x = q` as an integer, the inverse of [`Poly::from_index`].
    pub fn to_index(&self) -> Option<u64> {
        self.coeffs
            .iter()
            .rev()
            .try_fold(0u64, |acc, &c| acc.checked_mul(self.q.get())?.checked_add(c))
    }

    pub fn modulus(&self) -> Prime {
        self.q
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.q, other.q, "mixed moduli");
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs: Vec<u64> = (0..n)
            .map(|k| self.q.add(self.coeff(k), other.coeff(k)))
            .collect();
        trim(&mut coeffs);
        Poly { q: self.q, coeffs }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        assert_eq!(self.q, other.q, "mixed moduli");
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs: Vec<u64> = (0..n)
            .map(|k| self.q.sub(self.coeff(k), other.coeff(k)))
            .collect();
        trim(&mut coeffs);
        Poly { q: self.q, coeffs }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.q, other.q, "mixed moduli");
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.q);
        }
        let q = self.q;
        let mut coeffs = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = q.add(coeffs[i + j], q.mul(a, b));
            }
        }
        trim(&mut coeffs);
        Poly { q, coeffs }
    }

    pub fn scale(&self, c: u64) -> Poly {
        let mut coeffs: Vec<u64> = self.coeffs.iter().map(|&a| self.q.mul(a, c)).collect();
        trim(&mut coeffs);
        Poly { q: self.q, coeffs }
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert_eq!(self.q, divisor.q, "mixed moduli");
        let q = self.q;
        let dd = divisor.degree().expect("division by the zero polynomial");
        let inv = q.inv(divisor.lead()).expect("leading coefficient is nonzero");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(q), self.clone());
        }
        let mut quot = vec![0; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = q.mul(rem[k + dd], inv);
            quot[k] = c;
            if c != 0 {
                for (j, &b) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] = q.sub(rem[k + j], q.mul(c, b));
                }
            }
        }
        rem.truncate(dd);
        trim(&mut rem);
        trim(&mut quot);
        (Poly { q, coeffs: quot }, Poly { q, coeffs: rem })
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let inv = self.q.inv(a.lead()).expect("nonzero lead");
        a.scale(inv)
    }
}

fn trim(coeffs: &mut Vec<u64>) {
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
}
