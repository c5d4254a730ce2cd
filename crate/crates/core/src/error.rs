use thiserror::Error;

use crate::vector::Vector;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters k={k}, n={n}: need 1 <= k <= n-1")]
    InvalidParameters { k: usize, n: usize },

    #[error("parameter mismatch: ({k1},{n1}) vs ({k2},{n2})")]
    ParameterMismatch {
        k1: usize,
        n1: usize,
        k2: usize,
        n2: usize,
    },

    #[error("invalid vector {entries:?} for n={n}: {reason}")]
    InvalidVector {
        entries: Vec<u32>,
        n: usize,
        reason: String,
    },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no column of the table carries two marks")]
    NoDoublyMarkedColumn,

    #[error("{0} is a cyclic interval; its ridge lies on the boundary")]
    BoundaryRidge(Vector),

    #[error("{0} is not a member of the facet")]
    NotInFacet(Vector),

    #[error("{0} is not a vertex of the cube face")]
    NotOnCubeFace(Vector),

    #[error("operation not supported: {0}")]
    Unsupported(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_params(k: usize, n: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::InvalidParameters { k, n });
    }
    Ok(())
}
