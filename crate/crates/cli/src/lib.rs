//! Shared pieces of the `qss` command-line tool: the code-file format,
//! error-to-exit-code mapping, and JSON report helpers.

pub mod codefile;
pub mod error;
pub mod report;

pub use error::CliError;
