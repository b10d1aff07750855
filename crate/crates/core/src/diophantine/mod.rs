//! Continued fractions and the counting scans built on them.

mod cf;
mod littlewood;
mod scans;
mod schmidt;

pub use cf::{cf_rational, cf_surd, fold_convergent, max_pq_of_real, ContinuedFraction};
pub use littlewood::{littlewood_scan, LittlewoodScan, Real};
pub use scans::{
    b_statistic, largest_pq_2k_sqrt2, moser_report, moser_scan, zaremba_report, zaremba_scan,
    ScanReport, ScanRow,
};
pub use schmidt::{schmidt_count, Phi, SchmidtCount};
