//! Star and extreme discrepancy.
//!
//! Boxes are half-open, `[0, b)` for the star form and `[a, b)` for the
//! extreme form. The supremum over boxes is realized on a finite critical
//! grid by evaluating each candidate corner twice: once with strict
//! inequalities (open count, the limit from below) and once with `<=`
//! (closed count, the limit from above).
//!
//! Exact algorithms return rationals. For fixed-point points the value is
//! exact for the represented points; moving every coordinate by at most `eps`
//! moves the star discrepancy by at most `2 d eps`.

mod bracket;
mod grid;
mod one_dim;
mod oracle;
mod result;
mod scaled;
mod sweep;

pub use bracket::star_disc_bracket;
pub use grid::{extreme_disc_exact, star_disc_exact};
pub use one_dim::{extreme_disc_1d, star_disc_1d, star_disc_1d_prefixes};
pub use oracle::{brute_force_oracle, ORACLE_MAX_DIM, ORACLE_MAX_POINTS};
pub use result::{DiscKind, DiscValue, DiscrepancyResult, Mode, WorkBudget};
pub use sweep::star_disc_2d_sweep;
