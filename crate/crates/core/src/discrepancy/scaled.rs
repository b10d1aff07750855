//! Integer form of a point set: column `j` holds numerators over a common
//! denominator `D_j`, so every comparison is between integers.

use alloc::vec::Vec;
use core::fmt::Debug;
use core::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::Mode;
use crate::generators::{Repr, UnitPoint};
use crate::{Error, Result};

pub(crate) trait Scalar:
    Clone
    + Ord
    + Debug
    + Zero
    + One
    + From<u64>
    + Into<BigInt>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + Ord
        + Debug
        + Zero
        + One
        + From<u64>
        + Into<BigInt>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
{
}

pub(crate) struct Scaled<T> {
    pub n: usize,
    /// `cols[j][i]`: numerator of coordinate `j` of point `i`.
    pub cols: Vec<Vec<T>>,
    pub dens: Vec<T>,
}

impl<T: Scalar> Scaled<T> {
    pub fn d(&self) -> usize {
        self.cols.len()
    }

    pub fn den_product(&self) -> T {
        self.dens.iter().cloned().fold(T::one(), |a, b| a * b)
    }

    pub fn big_n(&self) -> T {
        T::from(self.n as u64)
    }
}

pub(crate) struct Columns {
    pub scaled: Scaled<BigInt>,
    pub mode: Mode,
}

impl Columns {
    pub fn new(points: &[UnitPoint]) -> Result<Self> {
        let first = points.first().ok_or(Error::EmptyPointSet)?;
        let d = first.dim();
        let repr = first.repr();
        for p in points {
            if p.dim() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: p.dim(),
                });
            }
            if p.repr() != repr {
                return Err(Error::InvalidSpec(
                    "points of one set must share a representation".into(),
                ));
            }
        }
        if d == 0 {
            return Err(Error::InvalidSpec("zero-dimensional points".into()));
        }
        let (cols, dens, mode) = match repr {
            Repr::Exact => {
                let mut cols = Vec::with_capacity(d);
                let mut dens = Vec::with_capacity(d);
                for j in 0..d {
                    let vals: Vec<&BigRational> =
                        points.iter().map(|p| &p.exact_coords().expect("exact")[j]).collect();
                    let den = vals.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
                    cols.push(vals.iter().map(|v| v.numer() * (&den / v.denom())).collect());
                    dens.push(den);
                }
                (cols, dens, Mode::Exact)
            }
            Repr::FixedPoint { width, .. } => {
                let den = BigInt::one() << width;
                let cols = (0..d)
                    .map(|j| {
                        points
                            .iter()
                            .map(|p| BigInt::from(p.fixed_bits().expect("fixed").1[j].clone()))
                            .collect()
                    })
                    .collect();
                (cols, alloc::vec![den; d], Mode::ExactForRepresented { width })
            }
        };
        Ok(Columns {
            scaled: Scaled {
                n: points.len(),
                cols,
                dens,
            },
            mode,
        })
    }

    /// The `i128` form, if `2 N prod(D_j)` stays well inside its range.
    pub fn narrow(&self) -> Option<Scaled<i128>> {
        let bound = BigInt::from(2 * self.scaled.n as u64) * self.scaled.den_product();
        if bound.bits() > 120 {
            return None;
        }
        Some(Scaled {
            n: self.scaled.n,
            cols: self
                .scaled
                .cols
                .iter()
                .map(|c| c.iter().map(|v| v.to_i128().expect("fits")).collect())
                .collect(),
            dens: self
                .scaled
                .dens
                .iter()
                .map(|v| v.to_i128().expect("fits"))
                .collect(),
        })
    }
}

/// A computation that runs on either integer width.
pub(crate) trait Kernel {
    type Output;
    fn run<T: Scalar>(&self, s: &Scaled<T>) -> Self::Output;
}

pub(crate) fn dispatch<K: Kernel>(cols: &Columns, kernel: &K) -> K::Output {
    match cols.narrow() {
        Some(small) => kernel.run(&small),
        None => kernel.run(&cols.scaled),
    }
}

/// `num / den` as a rational.
pub(crate) fn ratio<T: Scalar>(num: T, den: T) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// Sorted distinct values of a column.
pub(crate) fn distinct_sorted<T: Scalar>(col: &[T]) -> Vec<T> {
    let mut v = col.to_vec();
    v.sort();
    v.dedup();
    v
}
