use alloc::vec::Vec;

use super::cf::cf_surd;
use crate::{Error, Result};

/// One row of a multiplier scan: the statistic at `n` and the smallest
/// multiplier attaining it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanRow {
    pub n: u64,
    pub value: u64,
    pub witness: u64,
}

/// Rows of a scan over a range of moduli plus the row with the largest value
/// (first such row on ties).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub rows: Vec<ScanRow>,
    pub extremal: Option<ScanRow>,
}

impl ScanReport {
    fn from_rows(rows: Vec<ScanRow>) -> Self {
        let extremal = rows
            .iter()
            .copied()
            .reduce(|best, r| if r.value > best.value { r } else { best });
        ScanReport { rows, extremal }
    }
}

// Partial quotients of a / n after the leading zero: (max, sum).
fn quotient_stats(a: u64, n: u64) -> (u64, u64) {
    let (mut num, mut den) = (n, a);
    let (mut max, mut sum) = (0, 0);
    while den != 0 {
        let q = num / den;
        max = max.max(q);
        sum += q;
        (num, den) = (den, num % den);
    }
    (max, sum)
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn scan(n: u64, stat: impl Fn(u64, u64) -> u64) -> Result<ScanRow> {
    if n < 2 {
        return Err(Error::InvalidSpec("modulus must be at least 2".into()));
    }
    let mut best: Option<(u64, u64)> = None;
    for a in 1..n {
        if gcd(a, n) != 1 {
            continue;
        }
        let v = stat(a, n);
        if best.map_or(true, |(bv, _)| v < bv) {
            best = Some((v, a));
        }
    }
    let (value, witness) = best.expect("1 is coprime to every modulus");
    Ok(ScanRow { n, value, witness })
}

/// `min over gcd(a, n) = 1` of the largest partial quotient of `a / n`.
pub fn zaremba_scan(n: u64) -> Result<ScanRow> {
    scan(n, |a, n| quotient_stats(a, n).0)
}

/// `min over gcd(a, n) = 1` of the sum of partial quotients of `a / n`.
pub fn moser_scan(n: u64) -> Result<ScanRow> {
    scan(n, |a, n| quotient_stats(a, n).1)
}

pub fn zaremba_report(range: core::ops::RangeInclusive<u64>) -> Result<ScanReport> {
    range.map(zaremba_scan).collect::<Result<_>>().map(ScanReport::from_rows)
}

pub fn moser_report(range: core::ops::RangeInclusive<u64>) -> Result<ScanReport> {
    range.map(moser_scan).collect::<Result<_>>().map(ScanReport::from_rows)
}

/// `A_K`: the largest partial quotient of `2^K sqrt(2) = sqrt(2^(2K+1))`.
pub fn largest_pq_2k_sqrt2(k: u32) -> Result<u128> {
    if k > 62 {
        return Err(Error::Overflow("2^(2K+1) exceeds the surd range"));
    }
    Ok(cf_surd(1u128 << (2 * k + 1))?.max_partial_quotient())
}

/// `B_L = max_{0 <= K <= L} A_K`.
pub fn b_statistic(l: u32) -> Result<u128> {
    (0..=l).try_fold(0, |m, k| Ok(m.max(largest_pq_2k_sqrt2(k)?)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn surd_statistics() {
        assert_eq!(largest_pq_2k_sqrt2(0).unwrap(), 2);
        assert_eq!(largest_pq_2k_sqrt2(1).unwrap(), 4);
        assert_eq!(largest_pq_2k_sqrt2(2).unwrap(), 10);
        assert_eq!(b_statistic(2).unwrap(), 10);
        assert!(b_statistic(1).unwrap() <= b_statistic(2).unwrap());
    }

    #[test]
    fn zaremba_small() {
        let row = zaremba_scan(6).unwrap();
        // 1/6 = [0; 6], 5/6 = [0; 1, 5].
        assert_eq!((row.value, row.witness), (5, 5));
        let row = zaremba_scan(5).unwrap();
        assert_eq!((row.value, row.witness), (2, 2));
        assert!(zaremba_scan(1).is_err());
    }

    #[test]
    fn moser_small() {
        // 2/5 = [0; 2, 2], 3/5 = [0; 1, 1, 2].
        let row = moser_scan(5).unwrap();
        assert_eq!((row.value, row.witness), (4, 2));
    }

    #[test]
    fn report_picks_first_maximum() {
        let report = zaremba_report(2..=12).unwrap();
        assert_eq!(report.rows.len(), 11);
        let ext = report.extremal.unwrap();
        assert_eq!(ext.value, report.rows.iter().map(|r| r.value).max().unwrap());
        assert_eq!(ext.n, report.rows.iter().find(|r| r.value == ext.value).unwrap().n);
    }
}
