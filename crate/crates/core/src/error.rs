//! Failure vocabulary shared by every engine and the reader layers.

use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum Error {
    /// No layer in the chain provides the requested capability. Carries the
    /// capability name and the chain it was requested on, outermost first.
    #[error("unsupported functionality '{capability}' on chain [{}]", .chain.join(", "))]
    Unsupported {
        capability: String,
        chain: Vec<String>,
    },

    #[error("unknown layer kind: {0}")]
    UnknownKind(String),

    /// The capability has no table entry at all, reported where no chain is
    /// in play (for example when constructing a dispatcher).
    #[error("unknown capability: {0}")]
    UnknownCapability(String),

    #[error("invalid parameters for layer kind '{kind}': {reason}")]
    InvalidParams { kind: String, reason: String },

    /// A capability name was re-registered with a different signature.
    #[error("capability '{0}' is already registered with a different signature")]
    SignatureConflict(String),

    /// Arguments do not fit the registered signature.
    #[error("capability '{capability}': {reason}")]
    SignatureMismatch { capability: String, reason: String },

    #[error("pushback buffer full (capacity {0})")]
    PushbackOverflow(usize),

    #[error("configuration error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn unsupported(capability: &str, chain: Vec<String>) -> Self {
        Error::Unsupported {
            capability: capability.to_string(),
            chain,
        }
    }

    pub fn is_unsupported(&self) -> bool {
        matches!(self, Error::Unsupported { .. })
    }
}
