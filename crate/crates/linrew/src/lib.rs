//! IO companion to `linrew-core`: expression and system-file parsing,
//! deterministic rendering, the JSON report schema, and the CLI.

pub mod cli;
pub mod error;
pub mod expr;
mod lexer;
pub mod render;
pub mod report;
pub mod sysfile;

pub use error::CliError;
pub use report::{Report, Verdict};
