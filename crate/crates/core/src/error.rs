use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("polynomial is not monic (leading coefficient {0}); normalize it first")]
    NotMonic(String),
    #[error("invalid symmetric pair: {0}")]
    InvalidPair(String),
    #[error("route {0} is unavailable for this pair")]
    RouteUnavailable(String),
    #[error("point is outside the domain of this operation: {0}")]
    Domain(String),
    #[error("pair has no root datum")]
    MissingRootDatum,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("malformed certificate: {0}")]
    Certificate(String),
}

impl Error {
    /// Short stable tag, used by the CLI for machine-parsable errors.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Dimension(_) => "dimension",
            Error::NotMonic(_) => "not-monic",
            Error::InvalidPair(_) => "invalid-pair",
            Error::RouteUnavailable(_) => "route-unavailable",
            Error::Domain(_) => "domain",
            Error::MissingRootDatum => "missing-root-datum",
            Error::Precondition(_) => "precondition",
            Error::Parse(_) => "parse",
            Error::Certificate(_) => "certificate",
        }
    }
}
