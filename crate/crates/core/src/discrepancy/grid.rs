use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;

use super::scaled::{dispatch, distinct_sorted, ratio, Columns, Kernel, Scalar, Scaled};
use super::{DiscKind, DiscValue, DiscrepancyResult, WorkBudget};
use crate::generators::UnitPoint;
use crate::Result;

struct StarGrid;

impl Kernel for StarGrid {
    type Output = BigRational;

    fn run<T: Scalar>(&self, s: &Scaled<T>) -> BigRational {
        let d = s.d();
        let vals: Vec<Vec<T>> = s.cols.iter().map(|c| distinct_sorted(c)).collect();
        // Corner index k_j in 0..=m_j: value vals_j[k_j], or D_j when k_j = m_j.
        let sizes: Vec<usize> = vals.iter().map(|v| v.len() + 1).collect();
        let mut strides = vec![1usize; d];
        for j in (0..d.saturating_sub(1)).rev() {
            strides[j] = strides[j + 1] * sizes[j + 1];
        }
        let total: usize = sizes.iter().product();

        // counts[k] = #{points with rank_j < k_j for all j}, built as a histogram
        // at (rank + 1) followed by prefix sums along every axis.
        let mut counts = vec![0u32; total];
        for i in 0..s.n {
            let mut flat = 0;
            for j in 0..d {
                let rank = vals[j].binary_search(&s.cols[j][i]).expect("value present");
                flat += (rank + 1) * strides[j];
            }
            counts[flat] += 1;
        }
        for j in 0..d {
            let stride = strides[j];
            for flat in 0..total {
                if (flat / stride) % sizes[j] != 0 {
                    counts[flat] += counts[flat - stride];
                }
            }
        }

        let n = s.big_n();
        let den_prod = s.den_product();
        let mut best = T::zero();
        let mut idx = vec![0usize; d];
        for flat in 0..total {
            let mut volume = n.clone();
            let mut closed_flat = 0;
            for j in 0..d {
                let k = idx[j];
                let c = if k < vals[j].len() {
                    vals[j][k].clone()
                } else {
                    s.dens[j].clone()
                };
                volume = volume * c;
                closed_flat += (k + 1).min(sizes[j] - 1) * strides[j];
            }
            let open = T::from(u64::from(counts[flat])) * den_prod.clone();
            let closed = T::from(u64::from(counts[closed_flat])) * den_prod.clone();
            if volume > open && volume.clone() - open.clone() > best {
                best = volume.clone() - open;
            }
            if closed > volume && closed.clone() - volume.clone() > best {
                best = closed - volume;
            }
            for j in (0..d).rev() {
                idx[j] += 1;
                if idx[j] < sizes[j] {
                    break;
                }
                idx[j] = 0;
            }
        }
        ratio(best, n * den_prod)
    }
}

/// Exact star discrepancy in any dimension by enumerating the critical grid
/// `prod_j ({x_{n,j}} + {1})`.
///
/// At each corner `b` the open count `A(<b)` and the closed count `A(<=b)`
/// come from a `d`-dimensional cumulative count table, so the cost is
/// `O(#corners * d)`. Fails with `WorkBudgetExceeded` when the number of
/// corners exceeds the budget.
pub fn star_disc_exact(points: &[UnitPoint], budget: &WorkBudget) -> Result<DiscrepancyResult> {
    let cols = Columns::new(points)?;
    let corners = cols
        .scaled
        .cols
        .iter()
        .map(|c| distinct_sorted(c).len() as u128 + 1)
        .try_fold(1u128, |acc, m| acc.checked_mul(m))
        .unwrap_or(u128::MAX);
    budget.check(corners)?;
    let value = dispatch(&cols, &StarGrid);
    Ok(DiscrepancyResult {
        value: DiscValue::Exact(value),
        mode: cols.mode,
        kind: DiscKind::Star,
        n: cols.scaled.n,
        d: cols.scaled.d(),
    })
}

struct ExtremeGrid;

impl Kernel for ExtremeGrid {
    type Output = BigRational;

    fn run<T: Scalar>(&self, s: &Scaled<T>) -> BigRational {
        let d = s.d();
        // Per axis: closed intervals [a, b] with a <= b drawn from the point
        // values, and open intervals (a, b) with a in values + {0}, b in
        // values + {1}, a < b.
        let mut closed: Vec<Vec<(T, T)>> = Vec::with_capacity(d);
        let mut open: Vec<Vec<(T, T)>> = Vec::with_capacity(d);
        for j in 0..d {
            let vals = distinct_sorted(&s.cols[j]);
            let mut c = Vec::new();
            for (i, a) in vals.iter().enumerate() {
                for b in &vals[i..] {
                    c.push((a.clone(), b.clone()));
                }
            }
            let mut lower = vec![T::zero()];
            lower.extend(vals.iter().filter(|v| !v.is_zero()).cloned());
            let mut upper = vals.clone();
            upper.push(s.dens[j].clone());
            let mut o = Vec::new();
            for a in &lower {
                for b in &upper {
                    if a < b {
                        o.push((a.clone(), b.clone()));
                    }
                }
            }
            closed.push(c);
            open.push(o);
        }
        let n = s.big_n();
        let den_prod = s.den_product();
        let mut best = T::zero();

        let scan = |intervals: &[Vec<(T, T)>], strict: bool, best: &mut T| {
            let mut idx = vec![0usize; d];
            if intervals.iter().any(|v| v.is_empty()) {
                return;
            }
            loop {
                let mut volume = n.clone();
                for j in 0..d {
                    let (a, b) = &intervals[j][idx[j]];
                    volume = volume * (b.clone() - a.clone());
                }
                let count = (0..s.n)
                    .filter(|&i| {
                        (0..d).all(|j| {
                            let (a, b) = &intervals[j][idx[j]];
                            let x = &s.cols[j][i];
                            if strict {
                                a < x && x < b
                            } else {
                                a <= x && x <= b
                            }
                        })
                    })
                    .count();
                let mass = T::from(count as u64) * den_prod.clone();
                let dev = if strict {
                    (volume > mass).then(|| volume - mass)
                } else {
                    (mass > volume).then(|| mass - volume)
                };
                if let Some(dev) = dev {
                    if dev > *best {
                        *best = dev;
                    }
                }
                let mut j = d;
                loop {
                    if j == 0 {
                        return;
                    }
                    j -= 1;
                    idx[j] += 1;
                    if idx[j] < intervals[j].len() {
                        break;
                    }
                    idx[j] = 0;
                }
            }
        };
        scan(&closed, false, &mut best);
        scan(&open, true, &mut best);
        ratio(best, n * den_prod)
    }
}

/// Exact extreme discrepancy by enumerating pairs of critical corners; each
/// box is counted against every point, so the work is `#boxes * N`.
pub fn extreme_disc_exact(points: &[UnitPoint], budget: &WorkBudget) -> Result<DiscrepancyResult> {
    let cols = Columns::new(points)?;
    let n = cols.scaled.n as u128;
    let mut boxes = 1u128;
    for c in &cols.scaled.cols {
        let m = distinct_sorted(c).len() as u128;
        boxes = boxes.saturating_mul((m + 1) * (m + 1));
    }
    budget.check(boxes.saturating_mul(n))?;
    let value = dispatch(&cols, &ExtremeGrid);
    Ok(DiscrepancyResult {
        value: DiscValue::Exact(value),
        mode: cols.mode,
        kind: DiscKind::Extreme,
        n: cols.scaled.n,
        d: cols.scaled.d(),
    })
}
