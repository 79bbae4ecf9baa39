use thiserror::Error;

/// Errors produced by complex construction, closure operators and the
/// searches built on top of them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed vertex label `{0}`")]
    MalformedLabel(String),
    #[error("complex has {count} vertices, at most {max} are supported")]
    TooManyVertices { count: usize, max: usize },
    #[error("{0} is not a face of the complex")]
    NotAFace(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("join factors share the vertex {0}")]
    OverlappingJoin(String),
    #[error("the void complex has no dimension")]
    VoidComplex,

    #[error("invalid element name `{0}`")]
    InvalidElement(String),
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("element `{0}` is not in the ground set")]
    UnknownElement(String),
    #[error("ground set has {0} elements, at most 64 are supported")]
    GroundSetTooLarge(usize),
    #[error("the ground set is missing from the flat family")]
    MissingGroundSet,
    #[error("flats {first} and {second} meet in {meet}, which is not listed")]
    NotIntersectionClosed {
        first: String,
        second: String,
        meet: String,
    },
    #[error("{0} is not a flat")]
    NotAFlat(String),
    #[error("{0} is not a proper flat")]
    NotProperFlat(String),
    #[error("enumeration over {size} elements exceeds the limit of {limit}")]
    EnumerationBudget { size: usize, limit: usize },
    #[error("bases {first} and {second} violate the exchange property at {element}")]
    ExchangeViolation {
        first: String,
        second: String,
        element: String,
    },
    #[error("closure operator is not a matroid: {0}")]
    NotAMatroid(String),
    #[error("not an upper-set: {lower} is listed but {upper} is not")]
    NotUpperSet { lower: String, upper: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("search budget of {0} expansions exhausted")]
    BudgetExhausted(u64),
    #[error("order is not a permutation of the facets: {0}")]
    NotAPermutation(String),
    #[error("order is not a shelling: position {0} fails")]
    NotAShelling(usize),
    #[error("the Bergman complex of the contraction by {0} is not shellable")]
    ContractionNotShellable(String),
    #[error("not a linear extension of the independence complex: {0}")]
    NotALinearExtension(String),

    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Json(err.to_string())
    }
}
