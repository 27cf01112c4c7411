//! Library side of the `coneproj` command-line tool: argument definitions,
//! command runners, and the matrix-file and benchmark-report formats.

pub mod args;
pub mod commands;
pub mod matrix_file;
pub mod numfmt;
pub mod report;

pub use commands::{run, CliError};
