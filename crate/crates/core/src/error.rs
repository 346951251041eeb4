use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("both sides must be nonempty (got m = {m}, n = {n})")]
    EmptySide { m: usize, n: usize },
    #[error("at least one color is required")]
    NoColors,
    #[error("{0} colors exceeds the supported maximum")]
    TooManyColors(usize),
    #[error("expected {expected} rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("row {row}: expected {expected} entries, found {found}")]
    RowLength { row: usize, expected: usize, found: usize },
    #[error("expected {expected} cells, found {found}")]
    CellCount { expected: usize, found: usize },
    #[error("entry ({row}, {col}) has color {color}, outside [0, {r})")]
    ColorOutOfRange { row: usize, col: usize, color: i64, r: usize },
    #[error("entries ({i}, {j}) and ({j}, {i}) differ")]
    Asymmetric { i: usize, j: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    MissingHeader,
    #[error("malformed header {0:?}; expected \"m n r\"")]
    MalformedHeader(String),
    #[error("line {line}: {token:?} is not an integer")]
    NonInteger { line: usize, token: String },
    #[error("invalid JSON coloring: {0}")]
    Json(String),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BalancedError {
    #[error(
        "balanced components are only guaranteed for r <= 3; for every r >= 4 there are colorings without one (got r = {0})"
    )]
    Unsupported(usize),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("node budget of {budget} exhausted after {nodes} nodes; result unknown")]
    BudgetExceeded { budget: u64, nodes: u64 },
    #[error("canonical form refused: {m}x{n} exceeds the practical limit")]
    TooLarge { m: usize, n: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("construction produced an inconsistent coloring: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

/// A certificate that does not check out; `invariant` names the first failed check.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("certificate rejected ({invariant}): {detail}")]
pub struct VerifyError {
    pub invariant: &'static str,
    pub detail: String,
}

impl VerifyError {
    pub(crate) fn new(invariant: &'static str, detail: impl Into<String>) -> Self {
        VerifyError { invariant, detail: detail.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("the path bound needs r >= 3 (got {0})")]
    TooFewColors(usize),
    #[error("n must be positive")]
    EmptySide,
}
