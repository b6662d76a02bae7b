//! The `seqcm` command line tool as a library: ideal files, report documents
//! and command execution. `main.rs` only wires these to the process.

pub mod builtins;
pub mod commands;
pub mod document;
pub mod report;

pub use commands::{run, Cli, CliError, Command, Format, Outcome};
