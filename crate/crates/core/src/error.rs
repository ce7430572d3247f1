use std::path::PathBuf;

use crate::partition::Partition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("cannot parse partition: offending token `{token}`")]
    ParsePartition { token: String },

    #[error("parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<usize>),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("{0} does not lie in a Rouquier block")]
    NotRouquier(Partition),

    #[error("{0} is not 2-regular")]
    NotRegular(Partition),

    #[error("{0} and {1} do not lie in the same block")]
    DifferentBlocks(Partition, Partition),

    #[error("[{inner}] is not contained in [{outer}]")]
    NotContained { inner: Partition, outer: Partition },

    #[error("node ({row}, {col}) does not have residue {residue}")]
    LadderCondition { row: usize, col: usize, residue: u8 },

    #[error("invalid row move: d={d}, t={t}")]
    InvalidMove { d: usize, t: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed cache file {path}: {reason}")]
    Cache { path: PathBuf, reason: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}
