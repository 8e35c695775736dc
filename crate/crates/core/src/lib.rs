//! Spectrum of the planar Landau Hamiltonian perturbed by a penetrable circular
//! δ-wall.

pub mod cli;
pub mod error;
pub mod landau;
pub mod oracle;
pub mod quad;
pub mod roots;
pub mod specfun;
pub mod spectrum;
pub mod tridiag;
pub mod weyl;

pub use error::{Error, Result};
