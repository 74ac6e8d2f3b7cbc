use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The restriction sequence only computes curve cohomology when the
    /// twisted hyperplane class has no higher cohomology on the surface.
    #[error("restriction sequence not usable at t={t}: h1={h1}, h2={h2} for tH on the surface")]
    SequenceAssumptionViolated { t: i64, h1: i64, h2: i64 },

    #[error("class ({a}; {b:?}) has non-integral genus")]
    ParityViolation { a: i64, b: [i64; 4] },

    #[error("unknown component {id} for (d, g) = ({d}, {g})")]
    UnknownComponent { d: i64, g: i64, id: String },

    #[error("unsupported format: {0}")]
    UnsupportedFormat(String),

    #[error("catalog: {0}")]
    Catalog(String),

    #[error("reading {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
