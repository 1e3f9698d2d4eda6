use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid vertex name `{0}`")]
    InvalidName(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("class of `{0}` has more than one il declaration")]
    DuplicateIl(String),
    #[error("class of `{0}` has no il declaration")]
    MissingIl(String),
    #[error("line {line}: expected header `rkp 1`")]
    BadHeader { line: usize },
    #[error("line {line}: {message}")]
    MalformedLine { line: usize, message: String },
    #[error("profile is not admissible: {0}")]
    InvalidProfile(String),
    #[error("product of an empty factor list")]
    EmptyFactorList,
    #[error("product of the given factors is not isomorphic to the profile")]
    FactorMismatch,
    #[error("quotient is not a lattice")]
    NotALattice,
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("catalog entry `{entry}` requires parameter `{name}`")]
    MissingParameter { entry: String, name: String },
    #[error("catalog entry `{entry}` does not take parameter `{name}`")]
    UnexpectedParameter { entry: String, name: String },
    #[error("admissibility violation: {0}")]
    AdmissibilityViolation(String),
    #[error("invalid total {total}: {reason}")]
    InvalidTotal { total: u64, reason: String },
}
