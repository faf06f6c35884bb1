//! Error type shared across the library.
//!
//! Every fallible operation returns [`Result`].  Variants carry enough
//! context to make precondition violations diagnosable from the message
//! alone; none of them are ever used for control flow.

use thiserror::Error;

/// Library-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Grid dimensions outside the supported range.
    #[error("invalid grid: p = {p}, q = {q} (need p ≥ 2 and q ≥ 2)")]
    InvalidGrid { p: usize, q: usize },

    /// A vertex index outside `1..=pq`, or outside a documented subrange.
    #[error("vertex {v} out of range: {msg}")]
    VertexOutOfRange { v: usize, msg: String },

    /// Token count unsupported for the requested complex.
    #[error("unsupported token count n = {n} for a grid with {vertices} vertices")]
    UnsupportedTokenCount { n: usize, vertices: usize },

    /// A set of ambient cells that is not pairwise disjoint.
    #[error("ingredients are not pairwise disjoint: {msg}")]
    NotDisjoint { msg: String },

    /// An ambient cell that does not exist in the given grid.
    #[error("no such ambient cell in this grid: {msg}")]
    NoSuchAmbientCell { msg: String },

    /// Asked for the tree-edge key of an edge that is not a tree edge.
    #[error("edge [{a},{b}] is not a spanning-tree edge")]
    NotATreeEdge { a: usize, b: usize },

    /// A configuration cell that is not present in the complex.
    #[error("cell not present in the complex: {msg}")]
    CellNotInComplex { msg: String },

    /// Operation defined only for cells of a specific dimension.
    #[error("cell has dimension {got}, expected {expected}")]
    WrongDimension { got: usize, expected: usize },

    /// Duality is defined only on square-free complexes.
    #[error("duality requires a square-free complex: {msg}")]
    DualityUnavailable { msg: String },

    /// The discrete gradient field failed a validation check.
    #[error("gradient field invalid: {msg}")]
    FieldInvalid { msg: String },

    /// Word rewriting exceeded its step budget (indicates a bug upstream).
    #[error("word reduction exceeded {max_steps} steps")]
    MaxStepsExceeded { max_steps: usize },

    /// A cell that is not a critical one-cell in standard compacted form.
    #[error("not a standard-form critical one-cell: {msg}")]
    NotStandardForm { msg: String },

    /// A generator label or index that the presentation does not contain.
    #[error("unknown generator: {msg}")]
    UnknownGenerator { msg: String },

    /// A Tietze script step that cannot be applied.
    #[error("tietze script step failed: {msg}")]
    BadScript { msg: String },

    /// A presentation whose relators are not all two-generator commutators.
    #[error("not right-angled: relator {relator} reduces to {word}")]
    NotRightAngled { relator: String, word: String },

    /// A generator map that is not triangular with unit pivots.
    #[error("map is not triangular: {msg}")]
    NotTriangular { msg: String },

    /// Parameters outside the range of a two-row reduction formula.
    #[error("two-row parameter range violated: {msg}")]
    RangeGuard { msg: String },

    /// Composed boundary operators failed to square to zero.
    #[error("boundary check failed: ∂∘∂ ≠ 0 in dimension {dim} (entry at row {row}, col {col})")]
    BoundaryNotSquareZero { dim: usize, row: usize, col: usize },

    /// A verification-suite assertion did not hold.
    #[error("{msg}")]
    CheckFailed { msg: String },

    /// Input/output or serialization failure.
    #[error("serialization: {0}")]
    Serde(#[from] serde_json::Error),

    /// Malformed graph description (builtin spec string or DOT source).
    #[error("cannot parse graph description: {msg}")]
    BadGraphSpec { msg: String },
}

/// Library-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
