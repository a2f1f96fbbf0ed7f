//! Zeta functions of braids through the Burau representation.

pub mod algebra;
pub mod braid;
pub mod burau;
pub mod error;
pub mod numeric;
pub mod torus;
pub mod zeta;

pub use error::{Error, Result};
