//! File formats, configuration resolution, and the subcommand
//! implementations behind the `itemsum` binary.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod formats;
pub mod report;

pub use error::AppError;
