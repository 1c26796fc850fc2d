use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid size: {0}")]
    InvalidSize(String),

    #[error("invalid chord ({a}, {b}) on {n} vertices")]
    InvalidChord { n: usize, a: usize, b: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("edge ({i}, {j}) out of range for {n} vertices")]
    VertexOutOfRange { n: usize, i: usize, j: usize },

    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),

    #[error("invalid primary midpoint pair ({0}', {1}')")]
    InvalidPair(usize, usize),

    #[error("{what} supports n in [{min}, {max}], got {n}")]
    SizeLimit {
        what: &'static str,
        n: usize,
        min: usize,
        max: usize,
    },

    /// Two geometric quantities sit closer than the ambiguity margin but
    /// farther than the coincidence tolerance.
    #[error("coincidence ambiguity at n = {n}: {detail} (distance {distance:e}, tol {tol:e})")]
    CoincidenceAmbiguity {
        n: usize,
        detail: String,
        distance: f64,
        tol: f64,
    },

    #[error("unsupported parity: {0}")]
    UnsupportedParity(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("entropy {value} is not an integer number of ebits (residual {residual:e})")]
    NonIntegralEntropy { value: f64, residual: f64 },

    #[error("inconsistent input: {0}")]
    Inconsistency(String),

    #[error("parse error: {0}")]
    Parse(String),
}
