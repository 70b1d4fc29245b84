use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed graph document: {0}")]
    MalformedDocument(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("letter index {0} is not a vertex of the graph")]
    UnknownLetter(usize),
    #[error("vector {0:?} has mixed signs or is zero and is not a root")]
    NotARoot(Vec<i64>),
    #[error("root has {found} coordinates but the graph has {expected} vertices")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("word is not reduced")]
    NotReduced,
    #[error("braid move {0} does not apply to the word")]
    MoveMismatch(String),
    #[error("word set exceeded the cap of {cap} words")]
    CapExceeded { cap: usize },
    #[error("element budget of {budget} exceeded")]
    BudgetExceeded { budget: usize },
    #[error("root sequence is not realizable by any reduced word")]
    NotRealizable,
    #[error("triple is not an inversion triple of the element")]
    NotInversionTriple,
    #[error("triple is not a contractible inversion triple of the element")]
    NotContractibleTriple,
    #[error("element is not freely braided")]
    NotFreelyBraided,
    #[error("word is not a contracted reduced expression")]
    NotContracted,
    #[error("cannot delete {requested} times from a word whose element has N = {available}")]
    TooManyDeletions { requested: usize, available: usize },
    #[error("deletion is undefined when N = 0")]
    DeletionUndefined,
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// True for errors caused by a resource cap rather than by bad input.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::CapExceeded { .. } | Error::BudgetExceeded { .. }
        )
    }
}
