//! Error type shared by the whole kernel.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown basis label `{label}` in `{spec}`")]
    UnknownLabel { label: String, spec: String },

    #[error("{op} requires the `{flag}` flag on `{spec}`")]
    MissingFlag {
        op: &'static str,
        flag: &'static str,
        spec: String,
    },

    #[error("`{spec}` already has a unit; refusing to adjoin a second one")]
    AlreadyUnital { spec: String },

    #[error("the adjoined unit cannot be used as a letter")]
    UnitLetter,

    #[error("graph has {n} vertices, above the bound {bound}")]
    SizeExceeded { n: usize, bound: usize },

    #[error("syntax error at offset {offset}: {msg}")]
    Syntax { offset: usize, msg: String },

    #[error("{0}")]
    InvalidInput(String),

    #[error("series did not terminate at the declared bound {bound}")]
    Termination { bound: usize },

    #[error("operands belong to different hosts")]
    HostMismatch,

    #[error("the empty word is outside the domain of the reduced coproduct")]
    EmptyWordReduced,

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
