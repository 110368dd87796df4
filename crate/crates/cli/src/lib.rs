//! File formats, reports, verification suites and the `leibniz` command line
//! on top of [`leibniz_core`].

#![warn(missing_docs)]

pub mod cli;
pub mod format;
pub mod report;
pub mod suites;
