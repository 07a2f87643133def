use thiserror::Error;

/// Errors raised anywhere in the workbench.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input shape mismatch: {0}")]
    InputShape(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("quotient is infinite dimensional: {0}")]
    InfiniteDimensional(String),
    #[error("malformed relation: {0}")]
    MalformedRelation(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("unsupported algebra: {0}")]
    UnsupportedAlgebra(String),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("invalid homomorphism: {0}")]
    InvalidHom(String),
    #[error("lift failed: {0}")]
    LiftFailed(String),
    #[error("no null-homotopy: {0}")]
    NoHomotopy(String),
    #[error("profile not certified: {0}")]
    ProfileNotCertified(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    /// A checked mathematical property failed. `property` names the statement.
    #[error("property `{property}` violated: {detail}")]
    Violation { property: String, detail: String },
    #[error("{file}: field `{field}`: {message}")]
    Parse {
        file: String,
        field: String,
        message: String,
    },
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn violation(property: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Violation {
            property: property.into(),
            detail: detail.into(),
        }
    }

    pub fn parse(file: impl Into<String>, field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            file: file.into(),
            field: field.into(),
            message: message.into(),
        }
    }
}
