use thiserror::Error;

use crate::polyhedra::Solid;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed cycles: index {index} appears more than once")]
    MalformedCycles { index: usize },

    #[error("index {index} is out of range for a domain of size {domain_size}")]
    OutOfRange { index: usize, domain_size: usize },

    #[error("bad cycle notation at byte {offset}: {message}")]
    CycleSyntax { offset: usize, message: String },

    #[error("domain mismatch: {left} vs {right} points")]
    DomainMismatch { left: usize, right: usize },

    #[error("cannot generate a group from an empty generator list")]
    EmptyGenerators,

    #[error("not a bijection on 0..{domain_size}")]
    NotABijection { domain_size: usize },

    #[error("unknown solid `{0}`")]
    UnknownSolid(String),

    #[error("unknown direction `{0}`")]
    UnknownDirection(String),

    #[error("unknown body plane `{0}`")]
    UnknownPlane(String),

    #[error("operation requires the {expected}, got the {found}")]
    UnsupportedSolid { expected: Solid, found: Solid },

    #[error("solid mismatch: {left} vs {right}")]
    SolidMismatch { left: Solid, right: Solid },

    #[error("movement sequence is empty")]
    EmptySequence,

    #[error("unknown limb `{0}`")]
    UnknownLimb(String),

    #[error("invalid scale: {0}")]
    InvalidScale(String),

    #[error("{step}Z12 is not a subgroup of Z12")]
    InvalidSubgroup { step: usize },

    #[error("unknown scale `{0}`")]
    UnknownScale(String),

    #[error("unknown trace form `{0}`")]
    UnknownTraceForm(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("{0}")]
    Parse(#[from] crate::notation::ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
