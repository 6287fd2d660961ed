//! Report building and the verification runner behind the CLI.

pub mod report;
pub mod verify;
