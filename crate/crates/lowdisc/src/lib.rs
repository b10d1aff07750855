//! Text formats, experiment harness and command-line front end over
//! `lowdisc-core`.

pub mod cli;
pub mod disc;
mod error;
pub mod experiment;
pub mod fit;
pub mod format;
pub mod lattice_scan;
pub mod sampling;
pub mod syntax;

pub use error::{Error, Result};
pub use lowdisc_core as core;
