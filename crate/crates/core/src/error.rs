use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong in the core crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// The modulus handed to a field constructor is not a prime.
    NotPrime(u64),
    /// A digit or coefficient does not lie in `[0, q)`.
    DigitOutOfRange { value: u64, q: u64 },
    /// A sequence description violates one of its invariants.
    InvalidSpec(String),
    /// A Laurent series does not carry enough coefficients for the request.
    TruncationInsufficient { requested: i64, available: i64 },
    /// The index is too large for the fixed-point width of an irrational parameter.
    PrecisionBudgetExceeded { index: u64, width: u32 },
    /// A fixed-point continued fraction ran out of trustworthy digits.
    PrecisionExhausted { quotients: usize },
    /// An exact algorithm would exceed its configured work budget.
    WorkBudgetExceeded { work: u128, budget: u128 },
    /// The brute-force oracle only accepts tiny instances.
    SizeRejected { n: usize, d: usize },
    EmptyPointSet,
    DimensionMismatch { expected: usize, found: usize },
    PerfectSquare(u128),
    /// Integer overflow in a fixed-width computation.
    Overflow(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(q) => write!(f, "modulus {q} is not prime"),
            Error::DigitOutOfRange { value, q } => {
                write!(f, "digit {value} is out of range for modulus {q}")
            }
            Error::InvalidSpec(msg) => write!(f, "invalid sequence spec: {msg}"),
            Error::TruncationInsufficient {
                requested,
                available,
            } => write!(
                f,
                "series truncation insufficient: need coefficients up to index {requested}, \
                 only known up to {available}"
            ),
            Error::PrecisionBudgetExceeded { index, width } => write!(
                f,
                "index {index} exceeds the precision budget of a {width}-bit fixed-point parameter"
            ),
            Error::PrecisionExhausted { quotients } => write!(
                f,
                "fixed-point precision exhausted after {quotients} partial quotients"
            ),
            Error::WorkBudgetExceeded { work, budget } => {
                write!(f, "work budget exceeded: {work} units requested, budget {budget}")
            }
            Error::SizeRejected { n, d } => {
                write!(f, "instance too large for the oracle (N = {n}, d = {d})")
            }
            Error::EmptyPointSet => f.write_str("point set is empty"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::PerfectSquare(d) => write!(f, "{d} is a perfect square"),
            Error::Overflow(what) => write!(f, "integer overflow in {what}"),
        }
    }
}

impl core::error::Error for Error {}
