//! Command-line front end: instance files, seeded generation, experiments
//! with growth-exponent fits, and JSON reports.

pub mod commands;
pub mod config;
pub mod experiment;
pub mod instance;
pub mod report;
pub mod rng;

pub use commands::{run, Cli, Command};
