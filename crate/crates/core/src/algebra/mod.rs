//! Exact arithmetic over `Λ = Z[q, q^-1]` and `Λ[s]`.

mod integer;
mod laurent;
mod matrix;
mod polys;
mod rational;
mod ring;

pub use integer::Integer;
pub use laurent::LaurentPoly;
pub use matrix::{det_fraction_free, LaurentMatrix, Matrix};
pub use polys::PolyS;
pub use rational::{RationalFn, RationalQ};
pub use ring::{ExactDivision, Ring};
