//! Command line front end for `parteq-core`, plus the JSON forms of its
//! objects and reports.

mod app;
mod error;
pub mod json;
pub mod report;
pub mod table;

pub use app::{run, Cli, Command, Format, Target};
pub use error::CliError;
