use alloc::vec::Vec;

use num_rational::BigRational;

use super::scaled::{dispatch, distinct_sorted, ratio, Columns, Kernel, Scalar, Scaled};
use super::{DiscKind, DiscValue, DiscrepancyResult, WorkBudget};
use crate::generators::UnitPoint;
use crate::{Error, Result};

struct Sweep;

impl Kernel for Sweep {
    type Output = BigRational;

    fn run<T: Scalar>(&self, s: &Scaled<T>) -> BigRational {
        let (xs, ys) = (&s.cols[0], &s.cols[1]);
        let mut order: Vec<usize> = (0..s.n).collect();
        order.sort_by(|&a, &b| xs[a].cmp(&xs[b]).then(a.cmp(&b)));

        let mut y_corners = distinct_sorted(ys);
        y_corners.push(s.dens[1].clone());

        let n = s.big_n();
        let den_prod = s.den_product();
        let mut best = T::zero();
        // y-values of points strictly left of the current x-corner, and of
        // points at or left of it; both kept sorted.
        let mut below: Vec<T> = Vec::with_capacity(s.n);
        let mut upto: Vec<T> = Vec::with_capacity(s.n);

        let evaluate = |x: &T, below: &[T], upto: &[T], best: &mut T| {
            let (mut open, mut closed) = (0usize, 0usize);
            let nx = n.clone() * x.clone();
            for w in &y_corners {
                while open < below.len() && below[open] < *w {
                    open += 1;
                }
                while closed < upto.len() && upto[closed] <= *w {
                    closed += 1;
                }
                let volume = nx.clone() * w.clone();
                let open_mass = T::from(open as u64) * den_prod.clone();
                let closed_mass = T::from(closed as u64) * den_prod.clone();
                if volume > open_mass && volume.clone() - open_mass.clone() > *best {
                    *best = volume.clone() - open_mass;
                }
                if closed_mass > volume && closed_mass.clone() - volume.clone() > *best {
                    *best = closed_mass - volume;
                }
            }
        };

        let mut i = 0;
        while i < order.len() {
            let x = xs[order[i]].clone();
            let mut j = i;
            while j < order.len() && xs[order[j]] == x {
                let y = &ys[order[j]];
                let pos = upto.partition_point(|v| v <= y);
                upto.insert(pos, y.clone());
                j += 1;
            }
            evaluate(&x, &below, &upto, &mut best);
            below.clone_from(&upto);
            i = j;
        }
        evaluate(&s.dens[0], &below, &upto, &mut best);
        ratio(best, n * den_prod)
    }
}

/// Exact two-dimensional star discrepancy by sweeping the first coordinate.
///
/// Points are sorted on the first coordinate; for each critical abscissa the
/// second coordinates of the points to its left are kept as sorted order
/// statistics and walked against every critical ordinate. `O(N^2)` overall,
/// with the same value as [`super::star_disc_exact`].
pub fn star_disc_2d_sweep(points: &[UnitPoint], budget: &WorkBudget) -> Result<DiscrepancyResult> {
    let cols = Columns::new(points)?;
    if cols.scaled.d() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: cols.scaled.d(),
        });
    }
    let mx = distinct_sorted(&cols.scaled.cols[0]).len() as u128 + 1;
    let my = distinct_sorted(&cols.scaled.cols[1]).len() as u128 + 1;
    budget.check(mx * my)?;
    let value = dispatch(&cols, &Sweep);
    Ok(DiscrepancyResult {
        value: DiscValue::Exact(value),
        mode: cols.mode,
        kind: DiscKind::Star,
        n: cols.scaled.n,
        d: 2,
    })
}
