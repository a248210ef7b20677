use f1_core::{DslError, KError, OracleError, SchemeError, SpectrumError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Dsl(#[from] DslError),
    #[error(transparent)]
    Scheme(#[from] SchemeError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    K(#[from] KError),
    #[error("verification failed")]
    Verification,
    #[error("oracle out of bounds at q = {0:?}")]
    Unchecked(Vec<u64>),
}

pub const EXIT_IO: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_SEMANTIC: u8 = 3;
pub const EXIT_VERIFY: u8 = 4;
pub const EXIT_CAP: u8 = 5;

impl CliError {
    pub fn semantic(name: &str, reason: &str) -> Self {
        CliError::Dsl(DslError::Semantic {
            name: name.to_string(),
            reason: reason.to_string(),
        })
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } => EXIT_IO,
            CliError::Usage(_) => EXIT_PARSE,
            CliError::Dsl(DslError::Syntax { .. }) => EXIT_PARSE,
            CliError::Dsl(DslError::Semantic { .. }) => EXIT_SEMANTIC,
            CliError::Dsl(DslError::ResourceCap { .. }) => EXIT_CAP,
            CliError::Scheme(SchemeError::Spectrum(SpectrumError::SizeExceeded { .. })) => EXIT_CAP,
            CliError::Scheme(_) => EXIT_SEMANTIC,
            CliError::Spectrum(SpectrumError::SizeExceeded { .. }) => EXIT_CAP,
            CliError::Spectrum(_) => EXIT_SEMANTIC,
            CliError::Oracle(OracleError::Scheme(e)) => CliError::Scheme(e.clone()).exit_code(),
            CliError::Oracle(_) => EXIT_CAP,
            CliError::K(KError::CapExceeded { .. } | KError::OutOfTable(_)) => EXIT_CAP,
            CliError::K(_) => EXIT_SEMANTIC,
            CliError::Verification => EXIT_VERIFY,
            CliError::Unchecked(_) => EXIT_CAP,
        }
    }
}
