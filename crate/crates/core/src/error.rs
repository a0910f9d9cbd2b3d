use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{map} map: state {state} is outside its native domain")]
    ChaoticDomain { map: &'static str, state: f64 },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("invalid search space: {0}")]
    SearchSpace(String),

    #[error("objective returned {value} at position {position:?}")]
    Objective { value: f64, position: Vec<f64> },

    #[error("unknown benchmark function `{0}`")]
    UnknownFunction(String),

    #[error("{0}: composite pack not installed")]
    CompositeNotInstalled(String),

    #[error("{0} is already registered")]
    Collision(String),

    #[error("{id} expects dimension {expected}, got {got}")]
    Dimension { id: String, expected: usize, got: usize },

    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("{0}")]
    Data(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }

    pub(crate) fn csv(path: impl Into<PathBuf>, source: csv::Error) -> Self {
        Error::Csv { path: path.into(), source }
    }
}

impl Error {
    /// Whether the error stems from invalid input rather than a failure while running.
    pub fn is_config(&self) -> bool {
        matches!(
            self,
            Error::ChaoticDomain { .. }
                | Error::Parameter(_)
                | Error::SearchSpace(_)
                | Error::UnknownFunction(_)
                | Error::CompositeNotInstalled(_)
                | Error::Collision(_)
                | Error::Dimension { .. }
                | Error::LengthMismatch(..)
                | Error::Config(_)
        )
    }
}
