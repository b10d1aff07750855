use alloc::vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Threshold `phi(n)` for the lattice counting problem, clamped to `[0, 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Phi {
    /// `phi(n) = c`.
    Constant(BigRational),
    /// `phi(n) = c / prod_j max(1, |n_j|)`.
    Product(BigRational),
}

impl Phi {
    fn eval(&self, n: &[i64]) -> BigRational {
        let v = match self {
            Phi::Constant(c) => c.clone(),
            Phi::Product(c) => {
                let p: BigInt = n.iter().map(|&x| BigInt::from(x.unsigned_abs().max(1))).product();
                c / BigRational::from_integer(p)
            }
        };
        clamp01(v)
    }
}

fn clamp01(v: BigRational) -> BigRational {
    if v < BigRational::zero() {
        BigRational::zero()
    } else if v > BigRational::one() {
        BigRational::one()
    } else {
        v
    }
}

/// Exact result of a counting run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchmidtCount {
    pub count: u64,
    pub main_term: BigRational,
    pub residual: BigRational,
}

/// Counts `n in [-h, h]^d` with `{sum n_j a_j / N} < phi(n)` and compares the
/// count with the main term `sum phi(n)` over the same box.
pub fn schmidt_count(h: u64, gens: &[u64], big_n: u64, phi: &Phi) -> Result<SchmidtCount> {
    if big_n == 0 {
        return Err(Error::InvalidSpec("modulus must be positive".into()));
    }
    if gens.is_empty() {
        return Err(Error::InvalidSpec("at least one generator is required".into()));
    }
    let h = i64::try_from(h).map_err(|_| Error::Overflow("box half-width"))?;
    let modulus = i128::from(big_n);
    let gens: alloc::vec::Vec<i128> = gens.iter().map(|&a| i128::from(a) % modulus).collect();
    let d = gens.len();
    let mut n = vec![-h; d];
    let mut count = 0u64;
    let mut main_term = BigRational::zero();
    let den = BigInt::from(big_n);
    loop {
        let r = n
            .iter()
            .zip(&gens)
            .fold(0i128, |acc, (&x, &a)| (acc + i128::from(x) * a).rem_euclid(modulus));
        let threshold = phi.eval(&n);
        if BigRational::new(BigInt::from(r), den.clone()) < threshold {
            count += 1;
        }
        main_term += threshold;
        // Odometer over [-h, h]^d.
        let mut j = 0;
        loop {
            if j == d {
                let residual = BigRational::from_integer(BigInt::from(count)) - &main_term;
                return Ok(SchmidtCount {
                    count,
                    main_term,
                    residual,
                });
            }
            if n[j] < h {
                n[j] += 1;
                break;
            }
            n[j] = -h;
            j += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratio(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn constant_threshold_example() {
        let out = schmidt_count(2, &[1], 5, &Phi::Constant(ratio(1, 2))).unwrap();
        assert_eq!(out.count, 3);
        assert_eq!(out.main_term, ratio(5, 2));
        assert_eq!(out.residual, ratio(1, 2));
    }

    #[test]
    fn product_threshold_is_clamped() {
        // phi = 1 on n = 0, +-1 and 1/2 on n = +-2; only n = -2 (residue 3/5) misses.
        let out = schmidt_count(2, &[1], 5, &Phi::Product(ratio(1, 1))).unwrap();
        assert_eq!(out.main_term, ratio(4, 1));
        assert_eq!(out.count, 4);
        let big = schmidt_count(2, &[1], 5, &Phi::Product(ratio(3, 1))).unwrap();
        assert_eq!(big.main_term, ratio(5, 1));
    }
}
