//! Library half of the `unmixed` binary: command implementations and the
//! JSON report types, kept here so tests can drive them in-process.

pub mod commands;
pub mod crosscheck;
pub mod report;

use std::io;

use thiserror::Error;
use unmixed_core::generate::GenerateError;
use unmixed_core::oracle::OracleError;
use unmixed_core::GraphError;

pub const EXIT_UNMIXED: u8 = 0;
pub const EXIT_MIXED: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

/// Everything that ends a run with [`EXIT_INPUT`].
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: GraphError },
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Generate(#[from] GenerateError),
    #[error("{0}")]
    Param(String),
    #[error("writing output: {0}")]
    Output(#[from] io::Error),
}
