use thiserror::Error;

/// Errors surfaced by diagram, tally and move operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("entries must be strictly increasing, got {0:?}")]
    NotStrictlyIncreasing(Vec<i64>),

    #[error("cannot parse weight function from {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("cap must run left to right over an odd span, got ({start}, {end})")]
    InvalidCap { start: i64, end: i64 },

    #[error("invalid cap diagram: {0}")]
    InvalidCapDiagram(String),

    #[error("empty weight function has no anchor to normalize against")]
    EmptyWeightFunction,

    #[error("window [{lo}, {hi}] does not cover [{need_lo}, {need_hi}]")]
    WindowTooSmall {
        lo: i64,
        hi: i64,
        need_lo: i64,
        need_hi: i64,
    },

    #[error("point {0} is too close to the window edge to classify")]
    WindowEdge(i64),

    #[error("window reaches only {lo} with tally value {value}; zeros may extend further left")]
    ZeroWindowIncomplete { lo: i64, value: i64 },

    #[error("move source {0} is not an entry")]
    MoveSourceNotEntry(i64),

    #[error("move target {0} is already an entry")]
    MoveTargetOccupied(i64),

    #[error("move target {to} lies right of source {from}")]
    MoveTargetRightOfSource { from: i64, to: i64 },

    #[error("move from {from} to {to} violates the tally condition")]
    IllegalMove { from: i64, to: i64 },

    #[error("Catalan number C_{0} overflows 64-bit arithmetic")]
    CatalanOverflow(usize),

    #[error("window [{lo}, {hi}] does not cover rendered content at {at}")]
    RenderOutsideWindow { lo: i64, hi: i64, at: i64 },
}
