//! Command-line front end: square file formats, report rendering and the
//! `oddmagic` command dispatcher.

pub mod app;
pub mod document;
pub mod error;
pub mod report;

pub use app::{run, run_captured, EXIT_ERROR, EXIT_FAILED, EXIT_OK};
pub use document::{Format, SquareDocument};
pub use error::CliError;
