use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("word is empty")]
    EmptyWord,

    #[error("alphabet has more than 256 symbols")]
    AlphabetTooLarge,

    #[error("letter {letter:?} has no complement in the involution")]
    UnknownLetter { letter: char },

    #[error("exponent k must be at least {min}, got {k}")]
    InvalidExponent { k: usize, min: usize },

    #[error("window [{start}..{end}] is outside the word of length {len}")]
    WindowOutOfRange { start: usize, end: usize, len: usize },

    #[error("tree covers positions from {current}; cannot extend to {requested}")]
    NotPreviousWindow { current: usize, requested: usize },

    #[error("node {0} is not in the tree")]
    NodeNotInTree(u32),

    #[error("node {0} is not in the indexed subtree")]
    NodeNotInIndex(u32),

    #[error("input is empty")]
    EmptyInput,

    #[error("malformed FASTA at line {line}: {reason}")]
    MalformedFasta { line: usize, reason: String },

    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),

    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
