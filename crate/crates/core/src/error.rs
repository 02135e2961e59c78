use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate arrow name `{0}`")]
    DuplicateArrowName(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("path `{0}` is not composable")]
    NonComposablePath(String),
    #[error("inadmissible relation `{0}`: {1}")]
    InadmissibleRelation(String, String),
    #[error("ideal is not admissible: powers of the cycle `{witness}` never vanish")]
    NotAdmissible { witness: String },
    #[error("path search exceeded the length cap {0}")]
    SearchCapExceeded(usize),
    #[error("field characteristic {0} is not a prime below 65536")]
    InvalidCharacteristic(u32),
    #[error("not special biserial: {0}")]
    NotSpecialBiserial(String),
    #[error("band `{0}` exists; the algebra is representation-infinite")]
    BandExists(String),
    #[error("`{0}` is not a string")]
    NotAString(String),
    #[error("cannot parse walk `{0}`: {1}")]
    BadWalk(String, String),
    #[error("the zero module has no degree")]
    ZeroModule,
    #[error("{what}: size {size} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("subspace is not closed under the arrow action")]
    NotClosed,
    #[error("module `{0}` is projective")]
    ProjectiveModule(String),
    #[error("module `{0}` is not covered by a right 4-Nakayama case")]
    NotApplicable(String),
    #[error("algebra is not right 4-Nakayama ({0})")]
    NotRight4(String),
    #[error("precondition failed: algebra is not right 4-Nakayama ({0})")]
    PreconditionNotRight4(String),
    #[error("construction mismatch: {0}")]
    ConstructionMismatch(String),
    #[error("ambiguous case dispatch: {0}")]
    Ambiguous(String),
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("random generation failed after {0} attempts")]
    GenerationFailed(usize),
    #[error("unknown module selector `{0}`")]
    UnknownModule(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
