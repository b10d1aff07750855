use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::{Error, Result};

/// A validated prime modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u64);

impl Prime {
    /// Largest accepted modulus; keeps every product of two residues inside `u64`.
    pub const MAX: u64 = u32::MAX as u64;

    pub fn new(q: u64) -> Result<Self> {
        if q < 2 || q > Self::MAX || !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        Ok(Prime(q))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    /// Checks that `value < q`.
    pub fn check(self, value: u64) -> Result<u64> {
        if value < self.0 {
            Ok(value)
        } else {
            Err(Error::DigitOutOfRange { value, q: self.0 })
        }
    }

    #[inline]
    pub(crate) fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub(crate) fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub(crate) fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.0
    }

    pub(crate) fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse of a nonzero residue (Fermat).
    pub(crate) fn inv(self, a: u64) -> Option<u64> {
        if a % self.0 == 0 {
            None
        } else {
            Some(self.pow(a, self.0 - 2))
        }
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 4 {
        return n >= 2;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of the prime field `Z_q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fq {
    q: Prime,
    value: u64,
}

impl Fq {
    pub fn new(value: u64, q: Prime) -> Result<Self> {
        Ok(Fq {
            q,
            value: q.check(value)?,
        })
    }

    /// Reduces an arbitrary integer into the field.
    pub fn reduce(value: i128, q: Prime) -> Self {
        let m = q.get() as i128;
        Fq {
            q,
            value: value.rem_euclid(m) as u64,
        }
    }

    pub fn zero(q: Prime) -> Self {
        Fq { q, value: 0 }
    }

    pub fn one(q: Prime) -> Self {
        Fq { q, value: 1 }
    }

    #[inline]
    pub fn value(self) -> u64 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> Prime {
        self.q
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inv(self) -> Option<Self> {
        self.q.inv(self.value).map(|value| Fq { q: self.q, value })
    }

    pub fn pow(self, exp: u64) -> Self {
        Fq {
            q: self.q,
            value: self.q.pow(self.value, exp),
        }
    }
}

impl fmt::Display for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.q)
    }
}

impl Add for Fq {
    type Output = Fq;
    fn add(self, rhs: Fq) -> Fq {
        assert_eq!(self.q, rhs.q, "mixed moduli");
        Fq {
            q: self.q,
            value: self.q.add(self.value, rhs.value),
        }
    }
}

impl Sub for Fq {
    type Output = Fq;
    fn sub(self, rhs: Fq) -> Fq {
        assert_eq!(self.q, rhs.q, "mixed moduli");
        Fq {
            q: self.q,
            value: self.q.sub(self.value, rhs.value),
        }
    }
}

impl Mul for Fq {
    type Output = Fq;
    fn mul(self, rhs: Fq) -> Fq {
        assert_eq!(self.q, rhs.q, "mixed moduli");
        Fq {
            q: self.q,
            value: self.q.mul(self.value, rhs.value),
        }
    }
}

impl Neg for Fq {
    type Output = Fq;
    fn neg(self) -> Fq {
        Fq {
            q: self.q,
            value: self.q.sub(0, self.value),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites_and_tiny_moduli() {
        for q in [0, 1, 4, 6, 9, 15, 21, 25] {
            assert_eq!(Prime::new(q), Err(Error::NotPrime(q)));
        }
        for q in [2, 3, 5, 7, 11, 13, 65_521] {
            assert!(Prime::new(q).is_ok());
        }
    }

    #[test]
    fn value_must_be_reduced() {
        let q = Prime::new(5).unwrap();
        assert_eq!(Fq::new(5, q), Err(Error::DigitOutOfRange { value: 5, q: 5 }));
        assert_eq!(Fq::reduce(-1, q).value(), 4);
    }

    #[test]
    fn field_laws_exhaustive_small_primes() {
        for q in [2u64, 3, 5, 7, 11, 13] {
            let p = Prime::new(q).unwrap();
            let all: alloc::vec::Vec<Fq> = (0..q).map(|v| Fq::new(v, p).unwrap()).collect();
            for &a in &all {
                if !a.is_zero() {
                    assert_eq!(a * a.inv().unwrap(), Fq::one(p));
                } else {
                    assert!(a.inv().is_none());
                }
                assert_eq!(a + (-a), Fq::zero(p));
                for &b in &all {
                    assert_eq!(a + b, b + a);
                    assert_eq!(a * b, b * a);
                    for &c in &all {
                        assert_eq!((a + b) + c, a + (b + c));
                        assert_eq!((a * b) * c, a * (b * c));
                        assert_eq!(a * (b + c), a * b + a * c);
                    }
                }
            }
        }
    }
}
