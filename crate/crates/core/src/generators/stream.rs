use alloc::vec::Vec;

use super::families::{
    digital_kronecker_point, digital_point, digitsum_filtered_index, hammersley_point,
    kronecker_point, lattice_point, power_ratio_point, radical_inverse, rational_net_point,
};
use super::{PointSet, SequenceSpec, UnitPoint};
use crate::Result;

/// Point `n` of a (validated) sequence.
pub fn point_at(spec: &SequenceSpec, n: u64) -> Result<UnitPoint> {
    match spec {
        SequenceSpec::Kronecker { alphas } => kronecker_point(n, alphas),
        SequenceSpec::Halton { bases } => {
            UnitPoint::exact(bases.iter().map(|&b| radical_inverse(n, b)).collect())
        }
        SequenceSpec::Digital {
            q,
            matrices,
            precision,
        } => digital_point(n, *q, matrices, *precision),
        SequenceSpec::DigitalKronecker {
            q,
            series,
            precision,
        } => digital_kronecker_point(n, *q, series, *precision),
        SequenceSpec::Lattice { n: size, gens } => lattice_point(n, *size, gens),
        SequenceSpec::RationalNet { q, f, gs } => rational_net_point(n, *q, f, gs),
        SequenceSpec::Hammersley { n: size, bases } => hammersley_point(n, *size, bases),
        SequenceSpec::PowerRatio { p, r } => {
            UnitPoint::exact(alloc::vec![power_ratio_point(n, *p, *r)])
        }
        SequenceSpec::DigitSumFiltered { inner } => point_at(inner, digitsum_filtered_index(n)),
        SequenceSpec::Hybrid { left, right } => {
            Ok(UnitPoint::concat(&point_at(left, n)?, &point_at(right, n)?))
        }
    }
}

/// Points `start .. start + count` of `spec`.
///
/// Every point is a pure function of its index, so consecutive calls on
/// adjacent ranges concatenate to the call on the union.
pub fn stream(spec: &SequenceSpec, start: u64, count: u64) -> Result<PointSet> {
    spec.validate()?;
    let points = (start..start + count)
        .map(|n| point_at(spec, n))
        .collect::<Result<Vec<_>>>()?;
    PointSet::new(points, Some(spec.clone()), start)
}
