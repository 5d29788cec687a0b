//! File formats, invariant suites and the command-line front end for `iwalog-core`.

pub mod json;
pub mod suites;
