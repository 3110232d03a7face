use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("tadpole at vertex {0}")]
    Tadpole(usize),
    #[error("colour mismatch: {0}")]
    ColourMismatch(String),
    #[error("illegal composition: {0}")]
    IllegalComposition(String),
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("no preimage: {0}")]
    NoPreimage(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
