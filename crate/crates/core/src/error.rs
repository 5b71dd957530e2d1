use crate::cartan::CartanError;
use crate::ncalg::AlgebraError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Cartan(#[from] CartanError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    /// A documented precondition of an operation does not hold.
    #[error("{0}")]
    Precondition(String),
    /// A computation contradicts a claimed identity.
    #[error("claim falsified: {0}")]
    Falsified(String),
    /// A degree or iteration cap was reached.
    #[error("resource cap reached: {0}")]
    Cap(String),
}

impl Error {
    pub fn is_unsupported(&self) -> bool {
        matches!(self, Error::Algebra(AlgebraError::UnsupportedLocalization(_)))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
