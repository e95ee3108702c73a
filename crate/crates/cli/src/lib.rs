//! File formats and subcommands behind the `hlysa` binary.

pub mod commands;
pub mod files;

pub use commands::{run, run_args, Cli, Format, Outcome};
