//! Exact-arithmetic models of homotopy 3-types for commutative algebras.

pub mod cli;
pub mod error;
pub mod exactalg;
pub mod fixtures;
pub mod functors;
pub mod homotopy;
pub mod pairings;
pub mod report;
pub mod simplicial;
pub mod structures;

pub use error::{Error, Result};
