//! Error types shared across the crate.

use thiserror::Error;

/// Errors raised by the assembly engine itself.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    /// A tile was queried or placed at a position that already holds one.
    #[error("position ({x}, {y}) is already occupied")]
    OccupiedPosition { x: i32, y: i32 },
    /// Two distinct tiles were simultaneously attachable at one position.
    /// Every arithmetic system here is supposed to grow a unique final
    /// configuration, so this always signals a tile-set construction bug.
    #[error("ambiguous attachment at ({x}, {y}): tiles `{first}` and `{second}` both fit")]
    AmbiguousAttachment {
        x: i32,
        y: i32,
        first: String,
        second: String,
    },
    /// A tile id referenced a tile that is not part of the active set.
    #[error("unknown tile id {0}")]
    UnknownTile(usize),
    /// A seed placed two tiles on the same cell.
    #[error("seed places two tiles at ({x}, {y})")]
    OverlappingSeed { x: i32, y: i32 },
    /// Replay was handed an event that does not fit the assembly state.
    #[error("trace replay diverged at step {step}")]
    ReplayDiverged { step: usize },
}

/// Errors raised by the reference oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("subtraction underflow: minuend is smaller than subtrahend")]
    Underflow,
    #[error("insert position {i} outside 1..={max}")]
    InsertOutOfRange { i: usize, max: usize },
    #[error("expected a proper fraction: numerator {p} is not below denominator {q}")]
    ImproperFraction { p: String, q: String },
}

/// Errors raised while parsing numbers or serialized documents.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("invalid character {found:?} in {context}")]
    InvalidCharacter { found: char, context: &'static str },
    #[error("malformed number `{0}`")]
    Malformed(String),
    #[error("decimal fraction {0} is not exactly representable in binary; give the value in binary (e.g. 0b101.01) instead")]
    NonDyadicDecimal(String),
    #[error("line {line}: {message}")]
    Document { line: usize, message: String },
}

/// Errors raised while reading or writing tile-set documents.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TileFileError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("cannot write token {0:?}: names and glue labels in documents must be non-empty and whitespace-free")]
    UnwritableToken(String),
    #[error("refusing to export a tile set that fails determinism validation:\n{0}")]
    NonDeterministic(String),
}

/// Errors raised by the end-to-end arithmetic tasks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TaskError {
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("operands must share one width; got {left} and {right} bits")]
    WidthMismatch { left: usize, right: usize },
    #[error("the assembly hit its growth limit before the answer was complete")]
    IncompleteGrowth,
    #[error("tile set failed determinism validation:\n{0}")]
    NonDeterministicTileSet(String),
    #[error("{0}")]
    Unsupported(String),
}
