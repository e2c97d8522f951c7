//! Exact analysis of binary linear codes.
//!
//! Bit-packed GF(2) linear algebra, weight distributions by Gray-code
//! enumeration, MacWilliams duality in exact integers, the low power-moment
//! identities of a spanning code, projection and shortening, an exhaustive
//! small-scale classifier, and a replayable proof that a code in `F^66`
//! with weights in `{24, 32, 40, 56}` has dimension at most 12.

pub mod codes;
pub mod error;
pub mod exact;
pub mod fixtures;
pub mod gf2;
pub mod moments;
pub mod prover;
pub mod search;
pub mod text;
pub mod transforms;

pub use codes::{LinearCode, PredicateProfile, WeightEnumerator, DEFAULT_ENUMERATION_CAP};
pub use error::{Error, Result};
pub use gf2::{Gf2Matrix, Gf2Vector, Rref};
