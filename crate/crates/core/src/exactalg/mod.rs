//! Exact linear algebra over Q and prime fields.

pub mod action;
pub mod algebra;
pub mod field;
pub mod matrix;
pub mod subspace;

pub use action::{semidirect, Action, Bilinear};
pub use algebra::{closure, FinAlgebra, Quotient};
pub use field::{Field, Scalar};
pub use matrix::{LinMap, Vector};
pub use subspace::{image, kernel, Subspace};
