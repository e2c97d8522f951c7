//! Vectors and matrices over the two-element field.

mod matrix;
mod vector;

pub use matrix::{Gf2Matrix, Rref};
pub use vector::Gf2Vector;
