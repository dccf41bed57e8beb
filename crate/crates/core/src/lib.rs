//! Exact and numerical tools for torus stability, moment polytopes,
//! Littlewood–Richardson puzzles, Horn inequalities and localization.

pub mod characters;
pub mod error;
pub mod horn;
pub mod lie;
pub mod linalg;
pub mod localization;
pub mod polytopes;
pub mod puzzles;
pub mod rational;
pub mod torus_git;

pub use characters::LaurentPoly;
pub use error::{Error, Result};
pub use lie::{DominantWeight, Weight, WeylElement};
pub use rational::Q;
