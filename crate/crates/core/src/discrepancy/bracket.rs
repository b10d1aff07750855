use alloc::vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use super::scaled::Columns;
use super::{DiscKind, DiscValue, DiscrepancyResult, Mode, WorkBudget};
use crate::generators::UnitPoint;
use crate::{Error, Result};

/// Star discrepancy bracketed by the corner lattice `{0, 1/k, ..., 1}^d`.
///
/// With `m` the largest local discrepancy on the lattice, the true `D*_N`
/// lies in `[m, m + d/k]` (the upper end is capped at 1): inside a lattice
/// cell the count is monotone and the volume moves by at most `d/k`.
/// Works for every representation since only `floor(k x)` is needed.
pub fn star_disc_bracket(points: &[UnitPoint], k: u32, budget: &WorkBudget) -> Result<DiscrepancyResult> {
    if k < 2 {
        return Err(Error::InvalidSpec("bracket resolution must be at least 2".into()));
    }
    let cols = Columns::new(points)?;
    let s = &cols.scaled;
    let d = s.d();
    let side = k as usize + 1;
    let corners = (side as u128)
        .checked_pow(d as u32)
        .unwrap_or(u128::MAX);
    budget.check(corners)?;
    let total = corners as usize;
    let mut strides = vec![1usize; d];
    for j in (0..d.saturating_sub(1)).rev() {
        strides[j] = strides[j + 1] * side;
    }

    // counts[i] = #{points with floor(k x_j) < i_j for all j}
    let kb = BigInt::from(k);
    let mut counts = vec![0u32; total];
    for i in 0..s.n {
        let mut flat = 0;
        for j in 0..d {
            let cell = (&s.cols[j][i] * &kb / &s.dens[j])
                .to_usize()
                .expect("cell index is below k");
            flat += (cell + 1) * strides[j];
        }
        counts[flat] += 1;
    }
    for j in 0..d {
        let stride = strides[j];
        for flat in 0..total {
            if (flat / stride) % side != 0 {
                counts[flat] += counts[flat - stride];
            }
        }
    }

    // |A(i) k^d - N prod(i_j)| over N k^d, in i128.
    let n = s.n as i128;
    let kd = (k as i128)
        .checked_pow(d as u32)
        .and_then(|kd| kd.checked_mul(n))
        .filter(|v| *v < 1i128 << 120)
        .map(|v| v / n)
        .ok_or(Error::Overflow("bracket corner arithmetic"))?;
    let mut best = 0i128;
    let mut idx = vec![0i128; d];
    for count in counts.iter().take(total) {
        let volume = n * idx.iter().product::<i128>();
        let mass = i128::from(*count) * kd;
        best = best.max((volume - mass).abs());
        for j in (0..d).rev() {
            idx[j] += 1;
            if idx[j] < side as i128 {
                break;
            }
            idx[j] = 0;
        }
    }
    let lo = BigRational::new(best.into(), (n * kd).into());
    let width = BigRational::new(BigInt::from(d), BigInt::from(k));
    let one = BigRational::one();
    let hi = (&lo + width).min(one);
    Ok(DiscrepancyResult {
        value: DiscValue::Interval { lo, hi },
        mode: Mode::Bracketed { resolution: k },
        kind: DiscKind::Star,
        n: s.n,
        d,
    })
}
