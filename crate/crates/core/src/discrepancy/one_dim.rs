use alloc::vec::Vec;

use num_rational::BigRational;

use super::scaled::{dispatch, ratio, Columns, Kernel, Scalar, Scaled};
use super::{DiscKind, DiscValue, DiscrepancyResult, Mode};
use crate::generators::UnitPoint;
use crate::{Error, Result};

fn abs_diff<T: Scalar>(a: T, b: T) -> T {
    if a >= b {
        a - b
    } else {
        b - a
    }
}

/// `2 N D * D*_N = D + max_i |2 N u_(i) - (2i - 1) D|` over sorted numerators.
fn star_numerator<T: Scalar>(sorted: &[T], den: &T) -> T {
    let n = T::from(sorted.len() as u64);
    let two_n = n.clone() + n;
    let mut best = T::zero();
    let mut odd = T::one();
    let two = T::from(2);
    for u in sorted {
        let dev = abs_diff(two_n.clone() * u.clone(), odd.clone() * den.clone());
        if dev > best {
            best = dev;
        }
        odd = odd + two.clone();
    }
    den.clone() + best
}

struct Star1d;

impl Kernel for Star1d {
    type Output = BigRational;
    fn run<T: Scalar>(&self, s: &Scaled<T>) -> BigRational {
        let mut u = s.cols[0].clone();
        u.sort();
        let den = s.dens[0].clone();
        let two_n = T::from(2 * s.n as u64);
        ratio(star_numerator(&u, &den), two_n * den)
    }
}

struct Extreme1d;

impl Kernel for Extreme1d {
    type Output = BigRational;
    fn run<T: Scalar>(&self, s: &Scaled<T>) -> BigRational {
        let mut u = s.cols[0].clone();
        u.sort();
        let den = s.dens[0].clone();
        let n = s.big_n();
        // N D * D_N = D + max_i (i D - N u_(i)) - min_i (i D - N u_(i)); T is signed.
        let mut i_d = T::zero();
        let mut hi: Option<T> = None;
        let mut lo: Option<T> = None;
        for x in &u {
            i_d = i_d + den.clone();
            let e = i_d.clone() - n.clone() * x.clone();
            if hi.as_ref().map_or(true, |h| e > *h) {
                hi = Some(e.clone());
            }
            if lo.as_ref().map_or(true, |l| e < *l) {
                lo = Some(e);
            }
        }
        let num = den.clone() + hi.expect("nonempty") - lo.expect("nonempty");
        ratio(num, n * den)
    }
}

fn check_1d(points: &[UnitPoint]) -> Result<Columns> {
    let cols = Columns::new(points)?;
    if cols.scaled.d() != 1 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            found: cols.scaled.d(),
        });
    }
    Ok(cols)
}

fn result(value: BigRational, mode: Mode, kind: DiscKind, n: usize) -> DiscrepancyResult {
    DiscrepancyResult {
        value: DiscValue::Exact(value),
        mode,
        kind,
        n,
        d: 1,
    }
}

/// Exact one-dimensional star discrepancy,
/// `1/(2N) + max_i |x_(i) - (2i - 1)/(2N)|`.
pub fn star_disc_1d(points: &[UnitPoint]) -> Result<DiscrepancyResult> {
    let cols = check_1d(points)?;
    let v = dispatch(&cols, &Star1d);
    Ok(result(v, cols.mode, DiscKind::Star, points.len()))
}

/// Exact one-dimensional extreme discrepancy,
/// `1/N + max_i (i/N - x_(i)) - min_i (i/N - x_(i))`.
pub fn extreme_disc_1d(points: &[UnitPoint]) -> Result<DiscrepancyResult> {
    let cols = check_1d(points)?;
    let v = dispatch(&cols, &Extreme1d);
    Ok(result(v, cols.mode, DiscKind::Extreme, points.len()))
}

struct Prefixes;

impl Kernel for Prefixes {
    type Output = Vec<BigRational>;
    fn run<T: Scalar>(&self, s: &Scaled<T>) -> Vec<BigRational> {
        let den = s.dens[0].clone();
        let mut sorted: Vec<T> = Vec::with_capacity(s.n);
        let mut out = Vec::with_capacity(s.n);
        for (i, u) in s.cols[0].iter().enumerate() {
            let pos = sorted.partition_point(|v| v <= u);
            sorted.insert(pos, u.clone());
            let two_n = T::from(2 * (i as u64 + 1));
            out.push(ratio(star_numerator(&sorted, &den), two_n * den.clone()));
        }
        out
    }
}

/// `D*_N` of every prefix `N = 1 ..= len` of a one-dimensional point list.
///
/// Incremental insertion keeps the cost at `O(N^2)` overall instead of
/// re-sorting each prefix.
pub fn star_disc_1d_prefixes(points: &[UnitPoint]) -> Result<Vec<DiscrepancyResult>> {
    let cols = check_1d(points)?;
    let values = dispatch(&cols, &Prefixes);
    Ok(values
        .into_iter()
        .enumerate()
        .map(|(i, v)| result(v, cols.mode, DiscKind::Star, i + 1))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use num_bigint::BigInt;

    fn r(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    fn pts(v: &[(i64, i64)]) -> Vec<UnitPoint> {
        v.iter().map(|&(a, b)| UnitPoint::exact(vec![r(a, b)]).unwrap()).collect()
    }

    #[test]
    fn equidistant_points() {
        for n in 1..20i64 {
            let p: Vec<UnitPoint> = (0..n).map(|i| UnitPoint::exact(vec![r(i, n)]).unwrap()).collect();
            assert_eq!(star_disc_1d(&p).unwrap().exact(), Some(&r(1, n)));
            assert_eq!(extreme_disc_1d(&p).unwrap().exact(), Some(&r(1, n)));
        }
    }

    #[test]
    fn single_centered_point() {
        assert_eq!(star_disc_1d(&pts(&[(1, 2)])).unwrap().exact(), Some(&r(1, 2)));
    }

    #[test]
    fn van_der_corput_four() {
        let p = pts(&[(0, 1), (1, 2), (1, 4), (3, 4)]);
        assert_eq!(star_disc_1d(&p).unwrap().exact(), Some(&r(1, 4)));
        assert_eq!(extreme_disc_1d(&p).unwrap().exact(), Some(&r(1, 4)));
    }

    #[test]
    fn empty_and_wrong_dimension() {
        assert_eq!(star_disc_1d(&[]), Err(Error::EmptyPointSet));
        let two = vec![UnitPoint::exact(vec![r(0, 1), r(0, 1)]).unwrap()];
        assert!(matches!(extreme_disc_1d(&two), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn prefixes_match_one_shot() {
        let p = pts(&[(1, 3), (0, 1), (5, 7), (1, 3), (2, 9), (8, 9)]);
        let pre = star_disc_1d_prefixes(&p).unwrap();
        for n in 1..=p.len() {
            assert_eq!(pre[n - 1], star_disc_1d(&p[..n]).unwrap());
        }
    }

    #[test]
    fn big_denominators_take_the_bigint_path() {
        let big = BigInt::from(1u8) << 200u32;
        let p: Vec<UnitPoint> = (0..4)
            .map(|i| UnitPoint::exact(vec![BigRational::new(BigInt::from(i) * &big / 4, big.clone())]).unwrap())
            .collect();
        assert_eq!(star_disc_1d(&p).unwrap().exact(), Some(&r(1, 4)));
    }
}
