//! Exact computations with noncommutative quadrics and noncommutative planes
//! presented as Z-algebras.

pub mod cli;
pub mod error;
pub mod helix;
pub mod linalg;
pub mod pointscheme;
pub mod quintuple;
pub mod zalgebra;

pub use error::{Error, Result};
