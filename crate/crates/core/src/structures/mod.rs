//! Crossed-type models and their axiom checkers.

pub mod precrossed;
pub mod quadratic;
pub mod square;
pub mod two_crossed;

pub use precrossed::PreCrossedModule;
pub use quadratic::QuadraticModule;
pub use square::CrossedSquare;
pub use two_crossed::TwoCrossedModule;
