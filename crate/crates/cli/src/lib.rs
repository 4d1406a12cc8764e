//! File formats, catalog, demos and the command-line front end.

pub mod catalog;
mod cli;
pub mod demo;
pub mod document;
mod error;
pub mod table;

pub use cli::{run_cli, CAP_ENV};
pub use error::CliError;
