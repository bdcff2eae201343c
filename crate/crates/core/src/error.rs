use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A pointer reaches before the start of the text, past the end of the
    /// declared output, or (without overlap) beyond its own start.
    #[error("pointer out of range at position {position}: offset {offset}, length {length}")]
    PointerOutOfRange {
        position: usize,
        offset: usize,
        length: usize,
    },

    #[error("phrase index {index} out of range for a dictionary of {size} phrases")]
    PhraseOutOfRange { index: usize, size: usize },

    #[error("{what} of {actual} exceeds the scale limit {limit}")]
    ScaleExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("operation requires a {expected} dictionary")]
    FamilyMismatch { expected: &'static str },

    #[error("the empty phrase cannot be a dictionary entry")]
    EmptyPhrase,

    #[error("{name} = {value} is outside {min}..={max}")]
    ParamOutOfRange {
        name: &'static str,
        value: u64,
        min: u64,
        max: u64,
    },

    #[error("bad magic bytes; not an lzpl stream")]
    BadMagic,

    #[error("unsupported stream version {0}")]
    UnsupportedVersion(u8),

    #[error("stream ends in the middle of a token or header")]
    TruncatedStream,

    #[error("malformed scale limit setting: {0}")]
    BadScaleSetting(String),
}
