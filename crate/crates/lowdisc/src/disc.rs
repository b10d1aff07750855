use std::str::FromStr;

use lowdisc_core::discrepancy::{
    extreme_disc_1d, extreme_disc_exact, star_disc_1d, star_disc_2d_sweep, star_disc_bracket,
    star_disc_exact, DiscKind, DiscrepancyResult, WorkBudget,
};
use lowdisc_core::generators::UnitPoint;
use lowdisc_core::Error as CoreError;

use crate::error::{Error, Result};

/// Discrepancy algorithm selection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Algo {
    /// 1D formula, 2D sweep or critical grid by dimension; a star request
    /// that exceeds the work budget falls back to the bracket.
    #[default]
    Auto,
    OneD,
    Sweep2d,
    Grid,
    Bracket,
}

impl FromStr for Algo {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "auto" => Algo::Auto,
            "1d" => Algo::OneD,
            "2d" => Algo::Sweep2d,
            "grid" => Algo::Grid,
            "bracket" => Algo::Bracket,
            _ => return Err(Error::Invalid(format!("unknown algorithm {s:?} (auto|1d|2d|grid|bracket)"))),
        })
    }
}

pub fn parse_kind(s: &str) -> Result<DiscKind> {
    match s {
        "star" => Ok(DiscKind::Star),
        "extreme" => Ok(DiscKind::Extreme),
        _ => Err(Error::Invalid(format!("unknown discrepancy kind {s:?} (star|extreme)"))),
    }
}

fn exact_star(points: &[UnitPoint], d: usize, budget: &WorkBudget) -> lowdisc_core::Result<DiscrepancyResult> {
    match d {
        1 => star_disc_1d(points),
        2 => star_disc_2d_sweep(points, budget),
        _ => star_disc_exact(points, budget),
    }
}

/// Runs the selected algorithm on a point list.
pub fn compute(
    points: &[UnitPoint],
    kind: DiscKind,
    algo: Algo,
    resolution: u32,
    budget: &WorkBudget,
) -> Result<DiscrepancyResult> {
    let d = points.first().ok_or(CoreError::EmptyPointSet)?.dim();
    let r = match (kind, algo) {
        (DiscKind::Star, Algo::Auto) => match exact_star(points, d, budget) {
            Err(CoreError::WorkBudgetExceeded { .. }) => star_disc_bracket(points, resolution, budget),
            other => other,
        },
        (DiscKind::Star, Algo::OneD) => star_disc_1d(points),
        (DiscKind::Star, Algo::Sweep2d) => star_disc_2d_sweep(points, budget),
        (DiscKind::Star, Algo::Grid) => star_disc_exact(points, budget),
        (DiscKind::Star, Algo::Bracket) => star_disc_bracket(points, resolution, budget),
        (DiscKind::Extreme, Algo::Auto) if d == 1 => extreme_disc_1d(points),
        (DiscKind::Extreme, Algo::Auto | Algo::Grid) => extreme_disc_exact(points, budget),
        (DiscKind::Extreme, Algo::OneD) => extreme_disc_1d(points),
        (DiscKind::Extreme, a) => {
            return Err(Error::Invalid(format!(
                "extreme discrepancy supports auto, 1d and grid, not {a:?}"
            )))
        }
    };
    Ok(r?)
}
