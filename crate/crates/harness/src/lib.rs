//! Command-line driver, reports and named verification suites for
//! `closurelab-core`.

pub mod cli;
pub mod error;
pub mod input;
pub mod report;
pub mod suites;

pub use cli::run;
pub use error::CliError;
pub use suites::{run_suite, Claim, SuiteOptions, SuiteResult, SUITES};
