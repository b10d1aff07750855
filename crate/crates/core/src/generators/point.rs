use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::SequenceSpec;
use crate::{Error, Result};

/// How the coordinates of a point are stored.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Repr {
    Exact,
    /// Every coordinate is `bits / 2^width`; `coerced` records that some
    /// coordinates were exact rationals floored into this width.
    FixedPoint { width: u32, coerced: bool },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Coords {
    Exact(Vec<BigRational>),
    Fixed {
        width: u32,
        bits: Vec<BigUint>,
        coerced: bool,
    },
}

/// A point of `[0, 1)^d`. All coordinates share one representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnitPoint {
    coords: Coords,
}

impl UnitPoint {
    pub fn exact(coords: Vec<BigRational>) -> Result<Self> {
        for c in &coords {
            if c.is_negative() || *c >= BigRational::one() {
                return Err(Error::InvalidSpec(alloc::format!(
                    "coordinate {c} is outside [0, 1)"
                )));
            }
        }
        Ok(UnitPoint {
            coords: Coords::Exact(coords),
        })
    }

    pub fn fixed(width: u32, bits: Vec<BigUint>) -> Result<Self> {
        Self::fixed_tagged(width, bits, false)
    }

    fn fixed_tagged(width: u32, bits: Vec<BigUint>, coerced: bool) -> Result<Self> {
        for b in &bits {
            if b.bits() > u64::from(width) {
                return Err(Error::InvalidSpec(alloc::format!(
                    "fixed-point coordinate {b} does not fit in {width} bits"
                )));
            }
        }
        Ok(UnitPoint {
            coords: Coords::Fixed {
                width,
                bits,
                coerced,
            },
        })
    }

    /// The origin in dimension `d`.
    pub fn origin(d: usize) -> Self {
        UnitPoint {
            coords: Coords::Exact(alloc::vec![BigRational::zero(); d]),
        }
    }

    pub fn dim(&self) -> usize {
        match &self.coords {
            Coords::Exact(c) => c.len(),
            Coords::Fixed { bits, .. } => bits.len(),
        }
    }

    pub fn repr(&self) -> Repr {
        match &self.coords {
            Coords::Exact(_) => Repr::Exact,
            Coords::Fixed { width, coerced, .. } => Repr::FixedPoint {
                width: *width,
                coerced: *coerced,
            },
        }
    }

    /// Coordinate `j` as an exact rational (fixed-point values are `bits / 2^W`).
    pub fn coord(&self, j: usize) -> BigRational {
        match &self.coords {
            Coords::Exact(c) => c[j].clone(),
            Coords::Fixed { width, bits, .. } => BigRational::new(
                BigInt::from_biguint(Sign::Plus, bits[j].clone()),
                BigInt::one() << *width,
            ),
        }
    }

    pub fn to_rationals(&self) -> Vec<BigRational> {
        (0..self.dim()).map(|j| self.coord(j)).collect()
    }

    /// Exact coordinates, if this point is exact.
    pub fn exact_coords(&self) -> Option<&[BigRational]> {
        match &self.coords {
            Coords::Exact(c) => Some(c),
            Coords::Fixed { .. } => None,
        }
    }

    /// Fixed-point bits, if this point is fixed-point.
    pub fn fixed_bits(&self) -> Option<(u32, &[BigUint])> {
        match &self.coords {
            Coords::Fixed { width, bits, .. } => Some((*width, bits)),
            Coords::Exact(_) => None,
        }
    }

    /// Re-expresses the point with `width` fractional bits (floor).
    pub fn to_fixed(&self, width: u32) -> UnitPoint {
        match &self.coords {
            Coords::Exact(c) => {
                let bits = c
                    .iter()
                    .map(|r| {
                        let scaled = (r.numer() << width) / r.denom();
                        scaled.to_biguint().expect("coordinate is nonnegative")
                    })
                    .collect();
                UnitPoint {
                    coords: Coords::Fixed {
                        width,
                        bits,
                        coerced: true,
                    },
                }
            }
            Coords::Fixed { width: w, bits, .. } => {
                if *w == width {
                    return self.clone();
                }
                assert!(width < *w, "fixed-point coordinates are never widened");
                let drop = *w - width;
                UnitPoint {
                    coords: Coords::Fixed {
                        width,
                        bits: bits.iter().map(|b| b >> drop).collect(),
                        coerced: true,
                    },
                }
            }
        }
    }

    /// Concatenates two points. Exact coordinates are floored into the
    /// partner's fixed-point width; two fixed-point halves meet at the
    /// narrower width.
    pub fn concat(left: &UnitPoint, right: &UnitPoint) -> UnitPoint {
        match (&left.coords, &right.coords) {
            (Coords::Exact(a), Coords::Exact(b)) => {
                let mut c = a.clone();
                c.extend(b.iter().cloned());
                UnitPoint {
                    coords: Coords::Exact(c),
                }
            }
            _ => {
                let width = match (left.repr(), right.repr()) {
                    (Repr::FixedPoint { width: a, .. }, Repr::FixedPoint { width: b, .. }) => a.min(b),
                    (Repr::FixedPoint { width, .. }, Repr::Exact)
                    | (Repr::Exact, Repr::FixedPoint { width, .. }) => width,
                    (Repr::Exact, Repr::Exact) => unreachable!(),
                };
                let l = left.to_fixed(width);
                let r = right.to_fixed(width);
                let (Coords::Fixed { bits: mut lb, coerced: lc, .. }, Coords::Fixed { bits: rb, coerced: rc, .. }) =
                    (l.coords, r.coords)
                else {
                    unreachable!()
                };
                lb.extend(rb);
                UnitPoint {
                    coords: Coords::Fixed {
                        width,
                        bits: lb,
                        coerced: lc || rc,
                    },
                }
            }
        }
    }
}

/// The points `start .. start + count` of a sequence.
#[derive(Clone, Debug, PartialEq)]
pub struct PointSet {
    points: Vec<UnitPoint>,
    spec: Option<SequenceSpec>,
    start: u64,
}

impl PointSet {
    /// Wraps points that share a dimension and representation.
    pub fn new(points: Vec<UnitPoint>, spec: Option<SequenceSpec>, start: u64) -> Result<Self> {
        if let Some(first) = points.first() {
            let (d, r) = (first.dim(), first.repr());
            for p in &points {
                if p.dim() != d {
                    return Err(Error::DimensionMismatch {
                        expected: d,
                        found: p.dim(),
                    });
                }
                if p.repr() != r {
                    return Err(Error::InvalidSpec(
                        "points of one set must share a representation".into(),
                    ));
                }
            }
        }
        Ok(PointSet { points, spec, start })
    }

    pub fn from_points(points: Vec<UnitPoint>) -> Result<Self> {
        Self::new(points, None, 0)
    }

    pub fn points(&self) -> &[UnitPoint] {
        &self.points
    }

    pub fn into_points(self) -> Vec<UnitPoint> {
        self.points
    }

    pub fn spec(&self) -> Option<&SequenceSpec> {
        self.spec.as_ref()
    }

    pub fn start(&self) -> u64 {
        self.start
    }

    pub fn count(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> Option<usize> {
        self.points.first().map(UnitPoint::dim)
    }

    pub fn repr(&self) -> Option<Repr> {
        self.points.first().map(UnitPoint::repr)
    }

    /// The first `n` points.
    pub fn prefix(&self, n: usize) -> PointSet {
        PointSet {
            points: self.points[..n.min(self.points.len())].to_vec(),
            spec: self.spec.clone(),
            start: self.start,
        }
    }
}
