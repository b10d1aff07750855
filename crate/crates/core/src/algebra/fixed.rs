use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// What a fixed-point value was computed from, kept so specs can be printed
/// and re-parsed without losing the symbolic parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Origin {
    /// `(a + b * sqrt(d)) / c`.
    Quadratic { a: i64, b: i64, d: u64, c: u64 },
    /// Raw bits with no symbolic description.
    Raw,
}

/// A real number stored as `floor(x * 2^W) / 2^W`.
///
/// The fractional bits satisfy `0 <= frac < 2^W`. When `exact` is set the
/// stored value equals `x` (a dyadic rational, or a perfect-square root) and
/// no precision budget applies to its multiples.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FixedPointReal {
    width: u32,
    integer_part: BigInt,
    frac: BigUint,
    exact: bool,
    origin: Origin,
}

impl FixedPointReal {
    /// `floor((a + b * sqrt(d)) / c * 2^width) / 2^width`.
    pub fn quadratic(a: i64, b: i64, d: u64, c: u64, width: u32) -> Self {
        assert!(c > 0, "denominator must be positive");
        let one = BigInt::one() << width;
        // floor(b * sqrt(d) * 2^W)
        let radicand: BigUint =
            BigUint::from(b.unsigned_abs()).pow(2u32) * BigUint::from(d) * (BigUint::one() << (2 * width));
        let root = radicand.sqrt();
        let root_exact = &root * &root == radicand;
        let root = BigInt::from(root);
        let irr = if b >= 0 {
            root
        } else if root_exact {
            -root
        } else {
            -root - 1
        };
        let numerator = BigInt::from(a) * &one + irr;
        let c = BigInt::from(c);
        let (total, rem) = numerator.div_mod_floor(&c);
        let exact = root_exact && rem.is_zero();
        Self::from_scaled(total, width, exact, Origin::Quadratic { a, b, d, c: c.try_into().unwrap() })
    }

    /// `floor(p / q * 2^width) / 2^width`.
    pub fn from_ratio(p: i64, q: u64, width: u32) -> Self {
        Self::quadratic(p, 0, 0, q, width)
    }

    /// Builds a value from its full scaled integer `floor(x * 2^width)`.
    pub fn from_scaled(total: BigInt, width: u32, exact: bool, origin: Origin) -> Self {
        let one = BigInt::one() << width;
        let (integer_part, frac) = total.div_mod_floor(&one);
        FixedPointReal {
            width,
            integer_part,
            frac: frac.to_biguint().expect("mod_floor is nonnegative"),
            exact,
            origin,
        }
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn integer_part(&self) -> &BigInt {
        &self.integer_part
    }

    /// Fractional bits, `floor({x} * 2^W)`.
    pub fn frac_bits(&self) -> &BigUint {
        &self.frac
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn origin(&self) -> Origin {
        self.origin
    }

    /// `floor(x * 2^W)` as a single integer.
    pub fn scaled(&self) -> BigInt {
        (&self.integer_part << self.width) + BigInt::from_biguint(Sign::Plus, self.frac.clone())
    }

    /// The represented value as an exact rational.
    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.scaled(), BigInt::one() << self.width)
    }

    /// Drops fractional bits down to `width` (floor).
    pub fn truncate(&self, width: u32) -> Self {
        assert!(width <= self.width, "truncate cannot widen");
        let drop = self.width - width;
        let total = self.scaled() >> drop;
        let lost = !(&self.frac & ((BigUint::one() << drop) - 1u32)).is_zero();
        Self::from_scaled(total, width, self.exact && !lost, self.origin)
    }

    /// Fractional bits of `n * x_hat`, i.e. `(n * frac) mod 2^W`.
    pub fn frac_of_multiple(&self, n: u64) -> BigUint {
        let mask = (BigUint::one() << self.width) - 1u32;
        (&self.frac * n) & mask
    }

    /// Whether `x` is negative (the integer part carries the sign).
    pub fn is_negative(&self) -> bool {
        self.integer_part.is_negative()
    }
}

/// `floor(sqrt(d) * 2^width) / 2^width`, from the integer square root of `d * 4^width`.
pub fn fixedpoint_sqrt(d: u64, width: u32) -> FixedPointReal {
    FixedPointReal::quadratic(0, 1, d, 1, width)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_square() {
        let x = fixedpoint_sqrt(4, 8);
        assert_eq!(x.integer_part(), &BigInt::from(2));
        assert!(x.frac_bits().is_zero());
        assert!(x.is_exact());
    }

    #[test]
    fn sqrt_two_four_bits() {
        let x = fixedpoint_sqrt(2, 4);
        assert_eq!(x.integer_part(), &BigInt::from(1));
        assert_eq!(x.frac_bits(), &BigUint::from(6u32));
        assert_eq!(x.scaled(), BigInt::from(22));
        assert!(!x.is_exact());
    }

    #[test]
    fn wider_is_refinement_of_narrower() {
        let a = fixedpoint_sqrt(2, 64);
        let b = fixedpoint_sqrt(2, 128);
        assert_eq!(b.scaled() >> 64u32, a.scaled());
        assert_eq!(b.truncate(64), a);
    }

    #[test]
    fn bracket_property() {
        for d in 1..200u64 {
            for w in [1u32, 7, 33, 64, 100] {
                let s = fixedpoint_sqrt(d, w).scaled();
                let target = BigInt::from(d) << (2 * w);
                assert!(&s * &s <= target);
                assert!((&s + 1) * (&s + 1) > target);
            }
        }
    }

    #[test]
    fn negative_and_ratio_values() {
        // sqrt(2) - 1 = 0.41421356...
        let x = FixedPointReal::quadratic(-1, 1, 2, 1, 16);
        assert_eq!(x.integer_part(), &BigInt::zero());
        assert_eq!(x.frac_bits(), &BigUint::from(27145u32)); // floor(0.41421356 * 65536)
        // 1 - sqrt(2) = -0.414...: floor(-27145.6) = -27146
        let y = FixedPointReal::quadratic(1, -1, 2, 1, 16);
        assert_eq!(y.scaled(), BigInt::from(-27146));
        assert!(y.is_negative());
        let q = FixedPointReal::from_ratio(1, 4, 8);
        assert!(q.is_exact());
        assert_eq!(q.frac_bits(), &BigUint::from(64u32));
        assert!(!FixedPointReal::from_ratio(1, 3, 8).is_exact());
        // golden ratio conjugate (sqrt5 - 1)/2 = 0.6180339887
        let g = FixedPointReal::quadratic(-1, 1, 5, 2, 20);
        assert_eq!(g.frac_bits(), &BigUint::from(648055u32));
    }
}
