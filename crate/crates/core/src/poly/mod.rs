//! Exact polynomial and rational-function arithmetic.

pub mod field;
pub mod linalg;
pub mod modular;
pub mod mpoly;
pub mod ratfunc;
pub mod upoly;

pub use field::Field;
pub use mpoly::{MPoly, Mono};
pub use ratfunc::RatFunc;
pub use upoly::UPoly;
