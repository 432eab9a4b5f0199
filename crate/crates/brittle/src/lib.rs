//! File formats, reports, the verification harness and the command line
//! front end for `brittle-core`.

pub mod cli;
pub mod formats;
pub mod harness;
pub mod report;
