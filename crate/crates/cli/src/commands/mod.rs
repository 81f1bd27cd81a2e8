pub mod filtration;
pub mod lacunar;
pub mod reps_check;
pub mod specht;
pub mod spectrum;
pub mod verify_all;

use std::fmt;

/// Usage errors exit with 2, falsified identities with 1.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Falsified(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Falsified(m) => f.write_str(m),
        }
    }
}

impl From<shuffle_spectra::Error> for CliError {
    fn from(e: shuffle_spectra::Error) -> Self {
        match e {
            shuffle_spectra::Error::Invariant(_) => CliError::Falsified(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub fn check_n(n: usize, max: usize, what: &str) -> CliResult<()> {
    if n == 0 || n > max {
        return Err(CliError::Usage(format!("{what} needs 1 ≤ n ≤ {max}, got {n}")));
    }
    Ok(())
}
