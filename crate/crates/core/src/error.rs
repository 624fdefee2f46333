use thiserror::Error;

pub type Result<T> = std::result::Result<T, GroupError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("malformed Cayley table at line {line}: {message}")]
    MalformedTable { line: usize, message: String },

    #[error("table row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },

    #[error("not a Latin square: value {value} repeats at row {row}, column {col}")]
    NotLatinSquare { row: usize, col: usize, value: usize },

    #[error("no identity element")]
    NoIdentity,

    #[error("element {element} has no inverse")]
    MissingInverse { element: usize },

    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },

    #[error("invalid permutation {index}: {message}")]
    InvalidPermutation { index: usize, message: String },

    #[error("group order exceeds cap of {cap}")]
    ClosureExceedsCap { cap: usize },

    #[error("group of order {order} exceeds cap of {cap}")]
    OrderExceedsCap { order: usize, cap: usize },

    #[error("subgroup count exceeds cap of {cap}")]
    LatticeExceedsCap { cap: usize },

    #[error("subgroup is not normal (conjugation by element {by} moves it)")]
    NotNormal { by: usize },

    #[error("element set is not a subgroup: {reason}")]
    NotASubgroup { reason: String },

    #[error("element {element} is out of range for a group of order {order}")]
    ElementOutOfRange { element: usize, order: usize },

    #[error("unsupported parameter for {family}: {message}")]
    UnsupportedParameter { family: String, message: String },

    #[error("{p} is not a prime dividing the group order {order}")]
    PrimeDoesNotDivideOrder { p: usize, order: usize },

    #[error("factor orders {left} and {right} are not coprime")]
    NotCoprimeFactors { left: usize, right: usize },

    #[error("subgroup does not factor as a product of its projections")]
    DecompositionMismatch,

    #[error("invalid group spec `{token}`: {message}")]
    InvalidSpec { token: String, message: String },

    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

impl GroupError {
    /// True for errors caused by a configured resource limit.
    pub fn is_cap_violation(&self) -> bool {
        matches!(
            self,
            GroupError::ClosureExceedsCap { .. }
                | GroupError::OrderExceedsCap { .. }
                | GroupError::LatticeExceedsCap { .. }
        )
    }
}
