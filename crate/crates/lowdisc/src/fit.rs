use crate::error::{Error, Result};

/// Least-squares estimate of `p` in `N D_N ~ C (ln N)^p`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FitResult {
    pub exponent: f64,
    pub intercept: f64,
    /// Weighted residual 2-norm.
    pub residual: f64,
    pub samples: usize,
}

/// One input row: point count, discrepancy estimate and a weight (1 for exact
/// values).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FitRow {
    pub n: u64,
    pub d: f64,
    pub weight: f64,
}

/// Smallest `N` used by the fit; below it `ln ln N <= 1`.
pub const FIT_MIN_N: u64 = 16;

/// Weighted least squares of `ln(N D)` against `ln ln N` over rows with
/// `N >= 16` and a positive discrepancy.
pub fn fit_exponent(rows: &[FitRow]) -> Result<FitResult> {
    let pts: Vec<(f64, f64, f64)> = rows
        .iter()
        .filter(|r| r.n >= FIT_MIN_N && r.d > 0.0 && r.weight > 0.0)
        .map(|r| {
            let n = r.n as f64;
            (n.ln().ln(), (n * r.d).ln(), r.weight)
        })
        .collect();
    if pts.len() < 3 {
        return Err(Error::Invalid(format!(
            "fit needs at least 3 rows with N >= {FIT_MIN_N}, got {}",
            pts.len()
        )));
    }
    let sw: f64 = pts.iter().map(|p| p.2).sum();
    let mx = pts.iter().map(|p| p.2 * p.0).sum::<f64>() / sw;
    let my = pts.iter().map(|p| p.2 * p.1).sum::<f64>() / sw;
    let sxx: f64 = pts.iter().map(|p| p.2 * (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| p.2 * (p.0 - mx) * (p.1 - my)).sum();
    if sxx <= f64::EPSILON * sw {
        return Err(Error::Invalid("degenerate design: all N are equal".into()));
    }
    let exponent = sxy / sxx;
    let intercept = my - exponent * mx;
    let residual = pts
        .iter()
        .map(|p| p.2 * (p.1 - intercept - exponent * p.0).powi(2))
        .sum::<f64>()
        .sqrt();
    Ok(FitResult {
        exponent,
        intercept,
        residual,
        samples: pts.len(),
    })
}
