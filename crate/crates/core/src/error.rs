use thiserror::Error;

use crate::sidon::BhkWitness;

/// Errors raised by set predicates, matroid queries, and the CLI layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("resource cap exceeded: {needed} items requested, cap is {cap}")]
    ResourceCap { needed: u128, cap: u128 },

    #[error("usage error: {0}")]
    Usage(String),

    #[error("duplicate element {0}")]
    DuplicateElement(i64),

    #[error("element {0} is not in the ground set")]
    NotInGround(i64),

    /// The ground set failed the B_{2h-1,h-1} check a matroid requires.
    #[error("ground set is not a B_{{{order},{k}}} set: {witness}", order = .witness.order(), k = .witness.k())]
    NotGeneralizedSidon { witness: Box<BhkWitness> },

    /// A computation contradicted a structural guarantee that should hold.
    #[error("integrity failure: {0}")]
    Integrity(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}
