//! File formats, reports and the command-line workbench for `tiltkit-core`.

pub mod cli;
pub mod format;
pub mod report;

pub use tiltkit_core as core;
