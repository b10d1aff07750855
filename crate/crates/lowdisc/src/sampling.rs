//! Seeded random generating matrices.
//!
//! Random digital sequences draw i.i.d. uniform entries over `Z_q` in the
//! top-left `m x m` block with `m = 2 ceil(log_q N_max)` and zeros outside it;
//! entries past that depth cannot affect points with index `< N_max` at
//! precision `m`. Finite-row matrices give row `i` the support `1 ..= i + G`
//! with `G` geometric with success probability [`FINITE_ROW_P`], uniform
//! entries inside and zeros beyond.

use lowdisc_core::algebra::{GenMatrix, Prime};
use lowdisc_core::generators::SequenceSpec;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Geometric};

use crate::error::Result;

pub const FINITE_ROW_P: f64 = 0.5;

/// `ceil(log_q n)` for `n >= 1`.
pub fn ceil_log(q: u64, n: u64) -> u32 {
    let mut k = 0;
    let mut p: u128 = 1;
    while p < u128::from(n) {
        p *= u128::from(q);
        k += 1;
    }
    k
}

/// Depth of the sampled block for indices `< n_max`.
pub fn sample_depth(q: Prime, n_max: u64) -> usize {
    (2 * ceil_log(q.get(), n_max)).max(1) as usize
}

pub fn random_matrix<R: Rng>(q: Prime, depth: usize, rng: &mut R) -> GenMatrix {
    let rows = (0..depth)
        .map(|_| (0..depth).map(|_| rng.gen_range(0..q.get())).collect())
        .collect();
    GenMatrix::dense(q, rows).expect("entries are below q")
}

pub fn random_finite_row_matrix<R: Rng>(q: Prime, rows: usize, rng: &mut R) -> GenMatrix {
    let geom = Geometric::new(FINITE_ROW_P).expect("valid probability");
    let rows = (1..=rows)
        .map(|i| {
            let len = i + geom.sample(rng) as usize;
            (0..len).map(|_| rng.gen_range(0..q.get())).collect()
        })
        .collect();
    GenMatrix::dense(q, rows).expect("entries are below q")
}

/// A `d`-dimensional digital sequence with random matrices, for indices
/// `< n_max`, reproducible from `seed`.
pub fn random_digital_spec(q: Prime, d: usize, n_max: u64, seed: u64) -> Result<SequenceSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let depth = sample_depth(q, n_max);
    let matrices = (0..d).map(|_| random_matrix(q, depth, &mut rng)).collect();
    let spec = SequenceSpec::Digital { q, matrices, precision: depth as u32 };
    spec.validate()?;
    Ok(spec)
}
