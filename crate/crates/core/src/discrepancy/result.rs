use num_bigint::BigInt;
use num_rational::BigRational;

/// Which supremum is taken.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DiscKind {
    /// Boxes anchored at the origin, `D*_N`.
    Star,
    /// All axis-parallel boxes, `D_N`.
    Extreme,
}

/// How far a value can be trusted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Exact for exact-rational input points.
    Exact,
    /// Exact for the stored fixed-point approximations of the points.
    ExactForRepresented { width: u32 },
    /// The true value lies in the reported interval.
    Bracketed { resolution: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DiscValue {
    Exact(BigRational),
    Interval { lo: BigRational, hi: BigRational },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiscrepancyResult {
    pub value: DiscValue,
    pub mode: Mode,
    pub kind: DiscKind,
    pub n: usize,
    pub d: usize,
}

impl DiscrepancyResult {
    /// The exact value, if this is not a bracket.
    pub fn exact(&self) -> Option<&BigRational> {
        match &self.value {
            DiscValue::Exact(v) => Some(v),
            DiscValue::Interval { .. } => None,
        }
    }

    pub fn lo(&self) -> &BigRational {
        match &self.value {
            DiscValue::Exact(v) => v,
            DiscValue::Interval { lo, .. } => lo,
        }
    }

    pub fn hi(&self) -> &BigRational {
        match &self.value {
            DiscValue::Exact(v) => v,
            DiscValue::Interval { hi, .. } => hi,
        }
    }

    /// Midpoint of the interval (the value itself when exact).
    pub fn midpoint(&self) -> BigRational {
        (self.lo() + self.hi()) / BigRational::from_integer(BigInt::from(2))
    }

    /// Half the interval width (zero when exact).
    pub fn half_width(&self) -> BigRational {
        (self.hi() - self.lo()) / BigRational::from_integer(BigInt::from(2))
    }
}

/// Upper limit on the work an exact algorithm may do, so oversized requests
/// fail deterministically instead of running unbounded.
///
/// One unit is one corner (grid and bracket), one corner-box/point test
/// (extreme), or one sweep step (2D sweep).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WorkBudget {
    pub max_work: u128,
}

impl WorkBudget {
    pub const DEFAULT: WorkBudget = WorkBudget {
        max_work: 100_000_000,
    };

    pub fn unlimited() -> Self {
        WorkBudget { max_work: u128::MAX }
    }

    pub(crate) fn check(&self, work: u128) -> crate::Result<()> {
        if work > self.max_work {
            Err(crate::Error::WorkBudgetExceeded {
                work,
                budget: self.max_work,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for WorkBudget {
    fn default() -> Self {
        Self::DEFAULT
    }
}
