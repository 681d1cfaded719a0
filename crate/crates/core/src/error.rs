use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("character {0:?} is outside the A-Z alphabet")]
    OutOfAlphabet(char),

    #[error("empty word")]
    EmptyWord,

    #[error("letter {0} in two groups")]
    DuplicateLetter(char),

    #[error("group {0:?} needs at least two distinct letters")]
    GroupTooSmall(String),

    #[error("group weight {0} is outside (0, 1.0]")]
    WeightOutOfRange(String),

    #[error("invalid cost {0:?}: expected a decimal with one fractional digit, like 0.4")]
    InvalidCost(String),

    #[error("invalid probability {name}={value}: must lie in [0, 1]")]
    InvalidProbability { name: &'static str, value: f64 },

    #[error("empty lexicon")]
    EmptyLexicon,

    #[error("k must be at least 1")]
    InvalidK,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    /// True for errors caused by a malformed confusion-group configuration.
    pub fn is_config(&self) -> bool {
        matches!(
            self,
            Error::DuplicateLetter(_)
                | Error::GroupTooSmall(_)
                | Error::WeightOutOfRange(_)
                | Error::InvalidCost(_)
                | Error::InvalidProbability { .. }
        )
    }
}
