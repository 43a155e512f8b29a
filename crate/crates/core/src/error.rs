use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AjsError {
    #[error("unsupported root system type `{0}`")]
    UnsupportedType(String),
    #[error("`{0}` is not a root")]
    NotARoot(String),
    #[error("invalid word: {0}")]
    BadWord(String),
    #[error("word is not a reduced expression of the longest element")]
    NotReducedForW0,
    #[error("alcove is not in the anti-fundamental box")]
    NotInBox,
    #[error("alcove is not in the given support")]
    NotInSupport,
    #[error("reflection {0} is affine; a finite simple reflection is required")]
    AffineReflection(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("edge ({alcove}, {beta}) is not dense")]
    NotDense { alcove: String, beta: String },
    #[error("entry `{0}` is not a monomial in the edge root")]
    NonUnivariate(String),
    #[error("inhomogeneous entry: {0}")]
    Inhomogeneous(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("field {field} is not allowed for type {ty}")]
    BadField { field: String, ty: String },
    #[error("verification failed at {stage}: {detail}")]
    Verification { stage: String, detail: String },
    #[error("schema violation: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, AjsError>;
