use thiserror::Error;

use crate::pgl::GroupType;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields ({0} vs {1})")]
    FieldMismatch(String, String),
    #[error("input must be nonzero")]
    ZeroInput,
    #[error("invalid field descriptor: {0}")]
    InvalidField(String),
    #[error("cannot parse element {text:?} of {field}")]
    InvalidElement { text: String, field: String },
    #[error("operation not supported over {0}")]
    UnsupportedField(String),
    #[error("characteristic {characteristic} divides the order {order}")]
    CharacteristicDividesOrder { order: u64, characteristic: u64 },
    #[error("{field} does not contain a primitive {r}-th root of unity")]
    MissingRootsOfUnity { field: String, r: u64 },
    #[error("conic x^2 - ({alpha})y^2 - ({beta})z^2 = 0 has no rational point")]
    NoSolution { alpha: String, beta: String },
    #[error("conic for ({alpha}, {beta}) is split but only points with mu = 0 exist")]
    DegenerateOnly { alpha: String, beta: String },
    #[error("no conic point with mu != 0 found up to height {bound}")]
    NoSolutionInBound { bound: u64 },
    #[error("expected a {expected}x{expected} matrix, got {got}x{got}")]
    DimensionError { expected: usize, got: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("subgroup closure exceeded {cap} elements")]
    ClosureExceedsCap { cap: usize },
    #[error("finite group of order {order} is not cyclic, dihedral, A4, S4 or A5")]
    UnrecognizedType { order: usize },
    #[error("q = {q} exceeds the configured cap {cap}")]
    CapExceeded { q: u64, cap: u64 },
    #[error("{group} does not embed in PGL2({field}): {reason}")]
    NotEmbeddable {
        group: GroupType,
        field: String,
        reason: String,
    },
    #[error("Hilbert symbol ({alpha},{beta})_2 is non-split; no Klein four-group with these invariants")]
    SymbolObstruction { alpha: String, beta: String },
    #[error("no conic solution with mu != 0 within the search bound")]
    NoConicSolutionInBound,
    #[error("dihedral group of order 4 is the Klein four-group; request V4 instead")]
    UseKlein4,
    #[error("conjugacy classes of {group} over {field} are not classified: {reason}")]
    OutsideScope {
        group: GroupType,
        field: String,
        reason: String,
    },
    #[error("square classes {0} do not form a subgroup of order 1, 2 or 4")]
    NotASubgroup(String),
    #[error("hypothesis fails: {0}")]
    HypothesisFailure(String),
    #[error("invalid cyclic module: {0}")]
    InvalidAction(String),
    #[error("invalid group name {0:?}")]
    InvalidGroup(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("schema version mismatch: file has {found}, expected {expected}")]
    SchemaVersionMismatch { found: String, expected: u32 },
}

impl Error {
    /// Short machine-readable tag used in structured CLI output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::FieldMismatch(..) => "FieldMismatch",
            Error::ZeroInput => "ZeroInput",
            Error::InvalidField(_) => "InvalidField",
            Error::InvalidElement { .. } => "InvalidElement",
            Error::UnsupportedField(_) => "UnsupportedField",
            Error::CharacteristicDividesOrder { .. } => "CharacteristicDividesOrder",
            Error::MissingRootsOfUnity { .. } => "MissingRootsOfUnity",
            Error::NoSolution { .. } => "NoSolution",
            Error::DegenerateOnly { .. } => "DegenerateOnly",
            Error::NoSolutionInBound { .. } => "NoSolutionInBound",
            Error::DimensionError { .. } => "DimensionError",
            Error::SingularMatrix => "SingularMatrix",
            Error::ClosureExceedsCap { .. } => "ClosureExceedsCap",
            Error::UnrecognizedType { .. } => "UnrecognizedType",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::NotEmbeddable { .. } => "NotEmbeddable",
            Error::SymbolObstruction { .. } => "SymbolObstruction",
            Error::NoConicSolutionInBound => "NoConicSolutionInBound",
            Error::UseKlein4 => "UseKlein4",
            Error::OutsideScope { .. } => "OutsideScope",
            Error::NotASubgroup(_) => "NotASubgroup",
            Error::HypothesisFailure(_) => "HypothesisFailure",
            Error::InvalidAction(_) => "InvalidAction",
            Error::InvalidGroup(_) => "InvalidGroup",
            Error::Io(_) => "IoError",
            Error::SchemaVersionMismatch { .. } => "SchemaVersionMismatch",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
