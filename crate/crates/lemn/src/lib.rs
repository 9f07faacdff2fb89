//! Command-line front end and verification suites for `lemn-core`.

pub mod cli;
pub mod commands;
pub mod error;
pub mod suites;

pub use error::CliError;
