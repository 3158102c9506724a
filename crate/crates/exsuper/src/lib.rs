//! Std companion of `exsuper-core`: exhaustive verification, JSON reports and
//! the `exsuper` command-line tool.

pub mod cli;
pub mod report;
pub mod verify;

pub use verify::{char0_check, verify_box, zeta_sweep, SweepReport, VerifyReport};
