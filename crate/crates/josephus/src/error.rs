use thiserror::Error;

/// Failure modes shared by the oracles and both evaluation engines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The request exceeds a hard resource bound, such as the simulation cap.
    #[error("{what} = {requested} exceeds the cap of {cap}")]
    Capacity {
        what: &'static str,
        requested: String,
        cap: String,
    },

    /// An identity the algorithms rely on failed to hold. Always a bug in
    /// this crate or a violated caller precondition, never a user error.
    #[error("internal consistency violation: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
