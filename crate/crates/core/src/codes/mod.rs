//! Linear codes, their weight distributions and duals.

mod code;
mod enumerator;
mod profile;

pub use code::{LinearCode, DEFAULT_ENUMERATION_CAP};
pub use enumerator::WeightEnumerator;
pub use profile::PredicateProfile;
