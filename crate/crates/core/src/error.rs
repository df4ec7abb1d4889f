use thiserror::Error;

/// Errors raised by family construction, evaluation and the searches.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ground set size {0} exceeds the 64-element limit")]
    GroundSetTooLarge(usize),
    #[error("ground set size must be at least 1")]
    EmptyGroundSet,
    #[error("element {element} is outside the ground set [1, {n}]")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("set {set:?} has {size} distinct elements, expected {k}")]
    NonUniformSet { set: Vec<usize>, size: usize, k: usize },
    #[error("uniformity k = {k} exceeds ground set size n = {n}")]
    UniformityTooLarge { k: usize, n: usize },
    #[error("the sets A and B overlap")]
    OverlappingAB,
    #[error("query p + q = {sum} exceeds ground set size n = {n}")]
    QueryTooLarge { sum: usize, n: usize },
    #[error("the intersection variant requires p >= 1")]
    ZeroP,
    #[error("cover of size {size} exceeds uniformity k = {k}")]
    CoverTooLarge { size: usize, k: usize },
    #[error("family is not intersecting")]
    NotIntersecting,
    #[error("ground sets differ: {0} vs {1}")]
    GroundSetMismatch(usize, usize),
    #[error("bad parameters for {name}: {reason}")]
    BadParams { name: String, reason: String },
    #[error("support of {support} vertices exceeds the canonical-form limit of {limit} (use --force)")]
    SupportTooLarge { support: usize, limit: usize },
    #[error("instance C({n},{k}) = {size} exceeds the limit of {limit} (use --force)")]
    InstanceTooLarge { n: usize, k: usize, size: u64, limit: u64 },
    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("unknown {kind} '{name}' (available: {available})")]
    UnknownName { kind: &'static str, name: String, available: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// True for errors caused by bad input rather than an internal failure.
    pub fn is_validation(&self) -> bool {
        !matches!(self, Error::Io(_))
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
