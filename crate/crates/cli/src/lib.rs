//! Command implementations behind the `kuptv` binary.

pub mod commands;
pub mod corpus;
pub mod error;
pub mod inputs;
pub mod report;

pub use error::CliError;
