//! Command-line companion to `critline-core`: layered configuration, a content-addressed
//! zero-table cache, oracle fixture files, and CSV/JSON/SVG artifacts.

pub mod cache;
pub mod commands;
pub mod config;
pub mod error;
pub mod figures;
pub mod fixtures;
pub mod functions;
pub mod report;
pub mod svg;
pub mod table;

pub use commands::{run, Cli, Command, Output};
pub use error::{CliError, Result};
