use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("generators have gcd {gcd}, not 1")]
    GcdNotOne { gcd: u64 },

    #[error("no generators given")]
    Empty,

    #[error("{value} is not an element of the semigroup")]
    NotMember { value: u64 },

    #[error("{value} is not odd")]
    NotOdd { value: u64 },

    #[error("generator {generator} is redundant in {generators:?}")]
    NotMinimal {
        generator: u64,
        generators: Vec<u64>,
    },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("ideal is not monomial: {0}")]
    NotMonomial(String),

    #[error("tangent cone is not defined by quadrics")]
    NotQuadratic,

    #[error("x1 is a zero divisor on the tangent cone")]
    NotRegular,

    #[error("expected quadratic monomials and pure binomials, got {0}")]
    NotQuadraticInput(String),

    #[error("independent computations disagree on {what}: {left} vs {right}")]
    OracleMismatch {
        what: String,
        left: String,
        right: String,
    },

    #[error("parse error at byte {position} in `{input}`: {message}")]
    Parse {
        input: String,
        position: usize,
        message: String,
    },

    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },

    #[error("{context}: {source}")]
    Json {
        context: String,
        #[source]
        source: serde_json::Error,
    },
}

impl Error {
    /// Stable variant name, used by the command line in error messages.
    pub fn name(&self) -> &'static str {
        match self {
            Error::GcdNotOne { .. } => "GcdNotOne",
            Error::Empty => "Empty",
            Error::NotMember { .. } => "NotMember",
            Error::NotOdd { .. } => "NotOdd",
            Error::NotMinimal { .. } => "NotMinimal",
            Error::InvalidParams(_) => "InvalidParams",
            Error::NotMonomial(_) => "NotMonomial",
            Error::NotQuadratic => "NotQuadratic",
            Error::NotRegular => "NotRegular",
            Error::NotQuadraticInput(_) => "NotQuadraticInput",
            Error::OracleMismatch { .. } => "OracleMismatch",
            Error::Parse { .. } => "Parse",
            Error::Io { .. } => "Io",
            Error::Json { .. } => "Json",
        }
    }
}
