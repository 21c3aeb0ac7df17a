use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid body {id}: {reason}")]
    InvalidBody { id: usize, reason: String },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("degenerate separator quadruple {0:?}: all separators coincide")]
    DegenerateQuadruple([usize; 4]),

    #[error("need at least 4 witness points, have {0}")]
    InsufficientWitnesses(usize),

    #[error("body {0} contains no candidate point")]
    IncompleteCandidates(usize),

    #[error("linear program is {0}")]
    Lp(&'static str),

    #[error("replicated multiset is empty")]
    EmptyMultiset,

    #[error("(p,2)-condition not satisfied: {0}")]
    ConditionNotSatisfied(String),

    #[error("generator failed: {0}")]
    Generator(String),

    #[error("stage `{stage}` failed: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },

    #[error("malformed file: {0}")]
    Format(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn in_stage(self, stage: &'static str) -> Self {
        Error::Stage {
            stage,
            source: Box::new(self),
        }
    }
}
