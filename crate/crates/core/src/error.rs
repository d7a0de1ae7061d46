use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{func}: argument {value} is outside the domain ({requirement})")]
    Domain {
        func: &'static str,
        value: f64,
        requirement: &'static str,
    },

    #[error("requested tolerance {requested:e} cannot be met (floor {floor:e}, achieved {achieved:e})")]
    UnreachableTolerance {
        requested: f64,
        floor: f64,
        achieved: f64,
    },

    #[error("{0}: result overflows the working precision")]
    Overflow(&'static str),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("families do not share a target quantity: {0}")]
    MixedTargets(String),

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("reference constructions disagree: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn domain(func: &'static str, value: f64, requirement: &'static str) -> Self {
        Error::Domain {
            func,
            value,
            requirement,
        }
    }
}
