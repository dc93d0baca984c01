//! Command-line surface of the cevian toolkit: reads configurations and
//! writes suite reports, exact constructions, angle-family samples and
//! SVG figures.

pub mod cli;
pub mod construct;
pub mod family;
pub mod input;
pub mod runner;
pub mod svg;

use cevian_core::morley::MorleyError;
use cevian_core::GeomError;

/// Failure of a command, mapped to the process exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Morley(#[from] MorleyError),
    #[error("{0} failing cells")]
    Failures(usize),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 1 for failed checks, 2 for usage and parse errors, 3 for geometric degeneracy.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Failures(_) => 1,
            CliError::Geom(GeomError::ConcurrencyViolation(_)) => 1,
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Geom(GeomError::InvalidSpec(_)) => 2,
            CliError::Morley(MorleyError::InvalidK(_)) => 2,
            CliError::Geom(_) | CliError::Morley(_) => 3,
        }
    }
}
