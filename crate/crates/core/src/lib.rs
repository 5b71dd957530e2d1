//! Exact computation of the quantum birational Weyl group action on the
//! dependent variables, parameters and τ-monomials attached to a symmetrizable
//! generalized Cartan matrix, together with the identities it satisfies.

pub mod cartan;
pub mod classical;
pub mod text;
pub mod poly;
pub mod ncalg;
pub mod scalars;
pub mod error;
pub mod hirota;
pub mod report;
pub mod verma;
pub mod weylaction;
