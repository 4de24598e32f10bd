use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid symbol name {0:?}")]
    InvalidSymbol(String),
    #[error("duplicate symbol {0:?}")]
    DuplicateSymbol(String),
    #[error("symbol {symbol:?} is not in alphabet {alphabet}")]
    UnknownSymbol { symbol: String, alphabet: String },
    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: String, right: String },
    #[error("rank or arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("monoid mismatch: cannot combine {left} with {right}")]
    MonoidMismatch { left: String, right: String },
    #[error("integer overflow in register arithmetic")]
    Overflow,
    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("multiplier {0} cannot be written over the given generators")]
    Inexpressible(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}
