//! Exhaustive reference for tiny instances, kept independent of the integer
//! machinery in the other algorithms: plain rationals, direct counting, and
//! every mix of strict and non-strict inequalities per axis.

use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::DiscKind;
use crate::generators::UnitPoint;
use crate::{Error, Result};

pub const ORACLE_MAX_POINTS: usize = 8;
pub const ORACLE_MAX_DIM: usize = 3;

/// Exact discrepancy of at most 8 points in dimension at most 3.
///
/// Candidate corner coordinates per axis are the point coordinates together
/// with 0 and 1. Every box edge is evaluated both as `<` and as `<=` (and for
/// the lower edge of extreme boxes as `>` and `>=`), which covers every limit
/// of half-open boxes; the supremum is one of these limits.
pub fn brute_force_oracle(points: &[UnitPoint], kind: DiscKind) -> Result<BigRational> {
    let n = points.len();
    if n == 0 {
        return Err(Error::EmptyPointSet);
    }
    let d = points[0].dim();
    if n > ORACLE_MAX_POINTS || d > ORACLE_MAX_DIM || d == 0 {
        return Err(Error::SizeRejected { n, d });
    }
    let coords: Vec<Vec<BigRational>> = points.iter().map(UnitPoint::to_rationals).collect();
    if coords.iter().any(|c| c.len() != d) {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: coords.iter().map(Vec::len).find(|&l| l != d).unwrap_or(d),
        });
    }
    let candidates: Vec<Vec<BigRational>> = (0..d)
        .map(|j| {
            let mut c: Vec<BigRational> = coords.iter().map(|p| p[j].clone()).collect();
            c.push(BigRational::zero());
            c.push(BigRational::one());
            c.sort();
            c.dedup();
            c
        })
        .collect();
    let nn = BigRational::from_integer(n.into());

    // Per axis, the list of (lower, lower_strict, upper, upper_inclusive) edges.
    let edges: Vec<Vec<(BigRational, bool, BigRational, bool)>> = candidates
        .iter()
        .map(|c| {
            let mut e = Vec::new();
            match kind {
                DiscKind::Star => {
                    for b in c {
                        for incl in [false, true] {
                            e.push((BigRational::zero(), false, b.clone(), incl));
                        }
                    }
                }
                DiscKind::Extreme => {
                    for a in c {
                        for b in c.iter().filter(|b| *b >= a) {
                            for strict in [false, true] {
                                for incl in [false, true] {
                                    e.push((a.clone(), strict, b.clone(), incl));
                                }
                            }
                        }
                    }
                }
            }
            e
        })
        .collect();

    let mut best = BigRational::zero();
    let mut idx = vec![0usize; d];
    loop {
        let mut volume = BigRational::one();
        for j in 0..d {
            let (a, _, b, _) = &edges[j][idx[j]];
            volume *= b - a;
        }
        let count = coords
            .iter()
            .filter(|p| {
                (0..d).all(|j| {
                    let (a, strict, b, incl) = &edges[j][idx[j]];
                    let x = &p[j];
                    let above = if *strict { x > a } else { x >= a };
                    let below = if *incl { x <= b } else { x < b };
                    above && below
                })
            })
            .count();
        let dev = (BigRational::from_integer(count.into()) / &nn - volume).abs();
        if dev > best {
            best = dev;
        }
        let mut j = d;
        loop {
            if j == 0 {
                return Ok(best);
            }
            j -= 1;
            idx[j] += 1;
            if idx[j] < edges[j].len() {
                break;
            }
            idx[j] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn extreme_of_two_points() {
        let p = [
            UnitPoint::exact(vec![r(0, 1)]).unwrap(),
            UnitPoint::exact(vec![r(1, 2)]).unwrap(),
        ];
        assert_eq!(brute_force_oracle(&p, DiscKind::Extreme).unwrap(), r(1, 2));
    }

    #[test]
    fn star_examples() {
        let c = [UnitPoint::exact(vec![r(1, 2), r(1, 2)]).unwrap()];
        assert_eq!(brute_force_oracle(&c, DiscKind::Star).unwrap(), r(3, 4));
        let o = [UnitPoint::exact(vec![r(0, 1), r(0, 1)]).unwrap()];
        assert_eq!(brute_force_oracle(&o, DiscKind::Star).unwrap(), r(1, 1));
    }

    #[test]
    fn rejects_large_instances() {
        let p: Vec<UnitPoint> = (0..9).map(|i| UnitPoint::exact(vec![r(i, 9)]).unwrap()).collect();
        assert_eq!(
            brute_force_oracle(&p, DiscKind::Star),
            Err(Error::SizeRejected { n: 9, d: 1 })
        );
    }
}
