use thiserror::Error;

/// Errors raised by constructions, loaders and searches.
#[derive(Debug, Error)]
pub enum GeoError {
    #[error("coordinate ({x}, {y}) outside supported bound |c| <= {bound}")]
    CoordinateBound { x: i64, y: i64, bound: i64 },

    #[error("points {0} and {1} coincide")]
    DuplicatePoint(usize, usize),

    #[error("points {0}, {1}, {2} are collinear")]
    Collinear(usize, usize, usize),

    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unsupported order {0}: no finite field table for it")]
    UnsupportedOrder(usize),

    #[error("search exhausted: {0}")]
    SearchExhausted(String),

    #[error("design check failed: {0}")]
    DesignInvalid(String),

    #[error("difference table row {row}: {reason}")]
    TableRow { row: usize, reason: String },

    #[error("schema error: {0}")]
    Schema(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, GeoError>;
