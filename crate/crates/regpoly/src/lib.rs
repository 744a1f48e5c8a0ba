//! Command-line front end for `regpoly-core`: presentation files, the
//! built-in corpus, reproduction suites and JSON reports.

pub mod cli;
pub mod corpus;
pub mod family;
pub mod report;
pub mod verify;
