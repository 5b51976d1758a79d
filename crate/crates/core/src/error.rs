use num_rational::BigRational;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{name}` (ring has {nvars} variables)")]
    UnknownVariable { name: String, nvars: usize },

    #[error("schema error at {pointer}: {msg}")]
    Schema { pointer: String, msg: String },

    #[error("algebra violation for ({left}, {right}) in degree {degree}: {msg}")]
    AlgebraViolation {
        left: String,
        right: String,
        degree: usize,
        msg: String,
    },

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error(
        "inconclusive: no admissible residues found for beta ({}) within shift bound {bound}",
        join_rationals(.beta)
    )]
    Inconclusive { beta: Vec<BigRational>, bound: u32 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn schema(pointer: impl Into<String>, msg: impl Into<String>) -> Self {
        Error::Schema {
            pointer: pointer.into(),
            msg: msg.into(),
        }
    }
}

pub(crate) fn join_rationals(v: &[BigRational]) -> String {
    v.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(",")
}
