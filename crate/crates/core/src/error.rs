use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("probability out of range: {name} = {value}")]
    InvalidProbability { name: &'static str, value: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The two hypotheses cannot be told apart by any measurement at this threshold.
    #[error("degenerate states: the Helstrom operator has no positive eigenvalue")]
    DegenerateStates,

    #[error("prior {xi} is on the boundary; no measurement basis exists")]
    PriorBoundary { xi: f64 },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("empty stratum: no {0} documents judged")]
    EmptyStratum(&'static str),

    #[error("degenerate probability {0}: density needs 0 < p < 1")]
    DegenerateProbability(f64),

    #[error("{}:{line}: {reason}", path.display())]
    Parse {
        path: PathBuf,
        line: usize,
        reason: String,
    },

    #[error("duplicate doc_id {0:?}")]
    DuplicateDocId(String),

    #[error("duplicate judgment for topic {topic_id:?}, doc {doc_id:?}")]
    DuplicateJudgment { topic_id: String, doc_id: String },

    #[error("unknown topic {0:?}")]
    UnknownTopic(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn parse(path: impl Into<PathBuf>, line: usize, reason: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            line,
            reason: reason.into(),
        }
    }
}
