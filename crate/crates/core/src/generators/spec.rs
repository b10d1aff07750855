use alloc::boxed::Box;
use alloc::format;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::algebra::{FixedPointReal, GenMatrix, LaurentSeries, Poly, Prime};
use crate::{Error, Result};

/// Description of a sequence family and its parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum SequenceSpec {
    /// `({n a_1}, ..., {n a_d})` with fixed-point `a_j` of one common width.
    Kronecker { alphas: Vec<FixedPointReal> },
    /// Radical inverses in pairwise coprime bases.
    Halton { bases: Vec<u64> },
    /// Digital sequence over `Z_q`, points truncated to `precision` digits.
    Digital {
        q: Prime,
        matrices: Vec<GenMatrix>,
        precision: u32,
    },
    /// `({n(x) f_j(x)})` evaluated at `x = q`, truncated to `precision` digits.
    DigitalKronecker {
        q: Prime,
        series: Vec<LaurentSeries>,
        precision: u32,
    },
    /// `({n a_j / N})`, `n = 0 .. N - 1`.
    Lattice { n: u64, gens: Vec<u64> },
    /// `({n(x) g_j(x) / f(x)})` at `x = q`, `n < q^deg f`.
    RationalNet { q: Prime, f: Poly, gs: Vec<Poly> },
    /// `(n / N, Halton point of n)`, `n = 0 .. N - 1`.
    Hammersley { n: u64, bases: Vec<u64> },
    /// `{(p / r)^n}`.
    PowerRatio { p: u64, r: u64 },
    /// The inner sequence along indices with even binary digit sum.
    DigitSumFiltered { inner: Box<SequenceSpec> },
    /// Coordinate-wise concatenation at the same index.
    Hybrid {
        left: Box<SequenceSpec>,
        right: Box<SequenceSpec>,
    },
}

impl SequenceSpec {
    pub fn hybrid(left: SequenceSpec, right: SequenceSpec) -> Self {
        SequenceSpec::Hybrid {
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    pub fn digit_sum_filtered(inner: SequenceSpec) -> Self {
        SequenceSpec::DigitSumFiltered {
            inner: Box::new(inner),
        }
    }

    /// Van der Corput sequence in base `b`.
    pub fn van_der_corput(b: u64) -> Self {
        SequenceSpec::Halton { bases: alloc::vec![b] }
    }

    pub fn dim(&self) -> usize {
        match self {
            SequenceSpec::Kronecker { alphas } => alphas.len(),
            SequenceSpec::Halton { bases } => bases.len(),
            SequenceSpec::Digital { matrices, .. } => matrices.len(),
            SequenceSpec::DigitalKronecker { series, .. } => series.len(),
            SequenceSpec::Lattice { gens, .. } => gens.len(),
            SequenceSpec::RationalNet { gs, .. } => gs.len(),
            SequenceSpec::Hammersley { bases, .. } => bases.len() + 1,
            SequenceSpec::PowerRatio { .. } => 1,
            SequenceSpec::DigitSumFiltered { inner } => inner.dim(),
            SequenceSpec::Hybrid { left, right } => left.dim() + right.dim(),
        }
    }

    /// Number of points for finite families (`None` for infinite sequences).
    pub fn size(&self) -> Option<u64> {
        match self {
            SequenceSpec::Lattice { n, .. } | SequenceSpec::Hammersley { n, .. } => Some(*n),
            SequenceSpec::RationalNet { q, f, .. } => {
                let t = f.degree().unwrap_or(0) as u32;
                q.get().checked_pow(t)
            }
            SequenceSpec::DigitSumFiltered { inner } => inner.size().map(|m| m.div_ceil(2)),
            SequenceSpec::Hybrid { left, right } => match (left.size(), right.size()) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            },
            _ => None,
        }
    }

    /// Checks every family invariant, recursively.
    pub fn validate(&self) -> Result<()> {
        let invalid = |msg: alloc::string::String| Err(Error::InvalidSpec(msg));
        match self {
            SequenceSpec::Kronecker { alphas } => {
                let Some(first) = alphas.first() else {
                    return invalid("Kronecker needs at least one alpha".into());
                };
                if alphas.iter().any(|a| a.width() != first.width()) {
                    return invalid("Kronecker alphas must share one fixed-point width".into());
                }
            }
            SequenceSpec::Halton { bases } => {
                if bases.is_empty() {
                    return invalid("Halton needs at least one base".into());
                }
                check_bases(bases)?;
            }
            SequenceSpec::Digital {
                q,
                matrices,
                precision,
            } => {
                if matrices.is_empty() {
                    return invalid("digital sequence needs at least one matrix".into());
                }
                if *precision == 0 {
                    return invalid("digital precision must be at least 1".into());
                }
                if let Some(m) = matrices.iter().find(|m| m.modulus() != *q) {
                    return invalid(format!(
                        "matrix over Z_{} in a digital sequence over Z_{q}",
                        m.modulus()
                    ));
                }
            }
            SequenceSpec::DigitalKronecker {
                q,
                series,
                precision,
            } => {
                if series.is_empty() {
                    return invalid("digital Kronecker sequence needs at least one series".into());
                }
                if *precision == 0 {
                    return invalid("digital precision must be at least 1".into());
                }
                if series.iter().any(|s| s.modulus() != *q) {
                    return invalid("series modulus differs from the sequence modulus".into());
                }
            }
            SequenceSpec::Lattice { n, gens } => {
                if *n == 0 {
                    return invalid("lattice size N must be at least 1".into());
                }
                if gens.is_empty() {
                    return invalid("lattice needs at least one generator".into());
                }
                if let Some(g) = gens.iter().find(|&&g| g >= *n) {
                    return invalid(format!("lattice generator {g} is not in [0, {n})"));
                }
            }
            SequenceSpec::RationalNet { q, f, gs } => {
                let Some(t) = f.degree().filter(|&t| t >= 1) else {
                    return invalid("rational net denominator must have degree >= 1".into());
                };
                if f.modulus() != *q {
                    return invalid("denominator modulus differs from q".into());
                }
                if gs.is_empty() {
                    return invalid("rational net needs at least one numerator".into());
                }
                for g in gs {
                    if g.modulus() != *q {
                        return invalid("numerator modulus differs from q".into());
                    }
                    if g.degree().is_some_and(|d| d >= t) {
                        return invalid("numerator degree must be below the denominator degree".into());
                    }
                    if g.gcd(f).degree() != Some(0) {
                        return invalid("numerator and denominator must be coprime".into());
                    }
                }
                if q.get().checked_pow(t as u32).is_none() {
                    return invalid("q^deg(f) overflows u64".into());
                }
            }
            SequenceSpec::Hammersley { n, bases } => {
                if *n == 0 {
                    return invalid("Hammersley size N must be at least 1".into());
                }
                check_bases(bases)?;
            }
            SequenceSpec::PowerRatio { p, r } => {
                if !(*p > *r && *r >= 2) || p.gcd(r) != 1 {
                    return invalid(format!("power ratio needs coprime p > r >= 2, got {p}/{r}"));
                }
            }
            SequenceSpec::DigitSumFiltered { inner } => inner.validate()?,
            SequenceSpec::Hybrid { left, right } => {
                left.validate()?;
                right.validate()?;
            }
        }
        Ok(())
    }
}

fn check_bases(bases: &[u64]) -> Result<()> {
    for (i, &b) in bases.iter().enumerate() {
        if !(2..=u64::from(u32::MAX)).contains(&b) {
            return Err(Error::InvalidSpec(format!("base {b} is out of range")));
        }
        for &c in &bases[..i] {
            if b.gcd(&c) != 1 {
                return Err(Error::InvalidSpec(format!(
                    "bases {c} and {b} are not coprime"
                )));
            }
        }
    }
    Ok(())
}

/// `ceil(log_q n_max) + 16`: digits kept for digital points.
pub fn default_digital_precision(q: u64, n_max: u64) -> u32 {
    let mut digits = 0u32;
    let mut reach = 1u128;
    while reach < u128::from(n_max) {
        reach *= u128::from(q);
        digits += 1;
    }
    digits + 16
}

/// `2 ceil(log2 n_max) + 64`: fixed-point width for Kronecker parameters.
pub fn default_fixed_width(n_max: u64) -> u32 {
    let log = if n_max <= 1 {
        0
    } else {
        64 - (n_max - 1).leading_zeros()
    };
    2 * log + 64
}
