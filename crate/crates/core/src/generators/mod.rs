//! Point sequences: Kronecker, Halton, digital, digital-Kronecker, lattice,
//! rational-function nets, Hammersley, power ratios, digit-sum filtered
//! subsequences and hybrids. Indices start at `n = 0`.

pub(crate) mod families;
mod point;
mod spec;
mod stream;

pub use families::{
    digital_kronecker_point, digital_point, digitsum_filtered_index, hammersley_point,
    kronecker_point, lattice_point, lattice_point_set, power_ratio_point, radical_inverse,
    rational_net_point, MIN_CORRECT_BITS,
};
pub use point::{PointSet, Repr, UnitPoint};
pub use spec::{default_digital_precision, default_fixed_width, SequenceSpec};
pub use stream::{point_at, stream};
