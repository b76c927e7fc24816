use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed rational {0:?}")]
    MalformedRational(String),

    #[error("a function needs at least two breakpoints, got {0}")]
    TooFewPoints(usize),

    #[error("breakpoint x-coordinates must be strictly increasing (at index {index})")]
    NotIncreasing { index: usize },

    #[error("breakpoints must span [0, 1], got [{first}, {last}]")]
    DomainNotUnit { first: Rational, last: Rational },

    #[error("endpoint value must be zero, f({x}) = {y}")]
    NonzeroEndpoint { x: Rational, y: Rational },

    #[error("{what} = {value} is outside {range}")]
    OutOfRange {
        what: &'static str,
        value: Rational,
        range: &'static str,
    },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("{0} is not in the chord set")]
    NotAChord(Rational),

    #[error("interval set is not a chord set: {0}")]
    NotAChordSet(&'static str),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
