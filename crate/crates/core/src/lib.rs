//! Exact second (co)homology of current algebras `A ⊗ k` over ℚ.

pub mod battery;
pub mod catalog;
pub mod combinatorics;
pub mod comm;
pub mod current;
pub mod error;
pub mod forms;
pub mod io;
pub mod lie;
pub mod linalg;
pub mod par;
pub mod scalar;

pub use error::{Error, Result};
pub use linalg::{LinearMap, Matrix, Subspace};
pub use scalar::Scalar;
