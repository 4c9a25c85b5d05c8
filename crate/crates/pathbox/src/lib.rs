//! Reports, file formats, sweeps, and benchmarks on top of `pathbox-core`.

pub mod bench;
pub mod format;
pub mod report;
pub mod suite;
pub mod sweep;

pub use report::{verify, verify_all, DetReport};
pub use sweep::{Format, SweepConfig};
