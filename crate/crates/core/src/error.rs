use thiserror::Error;

/// Crate-wide error type; the CLI maps variants onto its exit-code contract.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("element 0 is not a two-sided identity")]
    NoIdentity,
    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: u16 },
    #[error("associativity fails at ({a}, {b}, {c})")]
    NotAssociative { a: u16, b: u16, c: u16 },
    #[error("table entry out of range at ({row}, {col}): {value}")]
    InvalidEntry { row: usize, col: usize, value: usize },
    #[error("generator {index} is not a permutation of the domain")]
    NotAPermutation { index: usize },
    #[error("generated group exceeds the {cap}-element cap")]
    ClosureExceedsCap { cap: usize },
    #[error("group of order {order} is not a p-group")]
    NotAPGroup { order: usize },
    #[error("group is not abelian")]
    NotAbelian,
    #[error("subgroup is not normal: conjugating element {conjugator} moves {moved} outside")]
    NotNormal { conjugator: u16, moved: u16 },
    #[error("subgroups belong to different parent groups")]
    ParentMismatch,
    #[error("family parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("this family requires an odd prime")]
    OddPrimeRequired,
    #[error("order {order} exceeds the enumeration cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("operation undefined for abelian input")]
    AbelianInput,
    #[error("isomorphism search budget exhausted after {explored} partial assignments")]
    SearchBudgetExceeded { explored: u64 },
    #[error("internal consistency check failed: {0}")]
    InternalInconsistency(String),
    #[error("linear algebra error: {0}")]
    Fp(#[from] crate::fp::FpError),
    #[error("vector lies inside the hyperplane; a witness outside is required")]
    VectorInsideHyperplane,
    #[error("subspace is not a hyperplane of the ambient space")]
    NotMaximal,
    #[error("invalid group file: {0}")]
    GroupFile(String),
}

pub type Result<T> = std::result::Result<T, Error>;
