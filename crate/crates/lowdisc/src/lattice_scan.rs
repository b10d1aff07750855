//! Distribution of `D*_N` over lattice generating vectors.

use lowdisc_core::algebra::BigRational;
use lowdisc_core::discrepancy::{DiscKind, WorkBudget};
use lowdisc_core::generators::lattice_point_set;
use lowdisc_core::Error as CoreError;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::disc::{compute, Algo};
use crate::error::{Error, Result};
use crate::format::NumberStyle;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanMode {
    /// Every vector in `[0, N)^d`.
    Exhaustive,
    /// `count` vectors drawn uniformly from `[0, N)^d` by a ChaCha8 stream.
    Sample { count: usize, seed: u64 },
}

/// Quantile levels in percent.
pub const QUANTILES: [u32; 5] = [1, 10, 50, 90, 99];

#[derive(Clone, Debug, PartialEq)]
pub struct LatticeScan {
    pub n: u64,
    pub d: usize,
    pub mode: ScanMode,
    /// `(gens, D*_N)` in enumeration order.
    pub values: Vec<(Vec<u64>, BigRational)>,
    /// Nearest-rank quantiles at [`QUANTILES`].
    pub quantiles: Vec<BigRational>,
    /// First vector attaining the minimum and the maximum.
    pub min: usize,
    pub max: usize,
}

fn vectors(n: u64, d: usize, mode: ScanMode) -> Vec<Vec<u64>> {
    match mode {
        ScanMode::Exhaustive => {
            let total = (n as usize).pow(d as u32);
            (0..total)
                .map(|mut idx| {
                    let mut g = vec![0; d];
                    for slot in g.iter_mut().rev() {
                        *slot = (idx % n as usize) as u64;
                        idx /= n as usize;
                    }
                    g
                })
                .collect()
        }
        ScanMode::Sample { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..count).map(|_| (0..d).map(|_| rng.gen_range(0..n)).collect()).collect()
        }
    }
}

/// Exact `D*_N` (1D formula, 2D sweep, grid for `d >= 3`) for every vector.
/// The budget bounds the total work `vectors * N^d`.
pub fn lattice_scan(n: u64, d: usize, mode: ScanMode, budget: &WorkBudget) -> Result<LatticeScan> {
    if n < 1 || d < 1 {
        return Err(Error::Invalid("lattice scan needs N >= 1 and d >= 1".into()));
    }
    let count: u128 = match mode {
        ScanMode::Exhaustive => u128::from(n).checked_pow(d as u32).unwrap_or(u128::MAX),
        ScanMode::Sample { count, .. } => count as u128,
    };
    if count == 0 {
        return Err(Error::Invalid("lattice scan needs at least one vector".into()));
    }
    let per_vector = u128::from(n).checked_pow(d.min(3) as u32).unwrap_or(u128::MAX);
    let work = count.saturating_mul(per_vector);
    if work > budget.max_work {
        return Err(CoreError::WorkBudgetExceeded { work, budget: budget.max_work }.into());
    }
    let unlimited = WorkBudget::unlimited();
    let values = vectors(n, d, mode)
        .into_par_iter()
        .map(|g| {
            let set = lattice_point_set(n, &g)?;
            let r = compute(set.points(), DiscKind::Star, Algo::Auto, 2, &unlimited)?;
            let v = r.exact().cloned().expect("exact algorithms only");
            Ok((g, v))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut sorted: Vec<&BigRational> = values.iter().map(|(_, v)| v).collect();
    sorted.sort();
    let m = sorted.len();
    let quantiles = QUANTILES
        .iter()
        .map(|&q| {
            let rank = (q as usize * m).div_ceil(100).max(1);
            sorted[rank - 1].clone()
        })
        .collect();
    let min = (0..m).min_by(|&a, &b| values[a].1.cmp(&values[b].1)).expect("nonempty");
    let max = (0..m).rev().max_by(|&a, &b| values[a].1.cmp(&values[b].1)).expect("nonempty");
    Ok(LatticeScan { n, d, mode, values, quantiles, min, max })
}

impl LatticeScan {
    pub fn to_json(&self, style: NumberStyle) -> Value {
        let mode = match self.mode {
            ScanMode::Exhaustive => json!("exhaustive"),
            ScanMode::Sample { count, seed } => json!({"sample": count, "seed": seed}),
        };
        let quantiles: serde_json::Map<String, Value> = QUANTILES
            .iter()
            .zip(&self.quantiles)
            .map(|(q, v)| (format!("{q}%"), json!(style.render(v))))
            .collect();
        let witness = |i: usize| json!({"gens": self.values[i].0, "value": style.render(&self.values[i].1)});
        json!({
            "N": self.n,
            "d": self.d,
            "mode": mode,
            "vectors": self.values.len(),
            "quantiles": quantiles,
            "min": witness(self.min),
            "max": witness(self.max),
        })
    }
}
