use serde::{Deserialize, Serialize};

use super::LinearCode;

/// Structural flags of a code.
///
/// Evenness is read off the generator rows: a code is even iff every row has
/// even weight, and doubly even iff every row weight is `≡ 0 (mod 4)` and
/// every pair of rows meets in an even number of coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PredicateProfile {
    pub is_even: bool,
    pub is_doubly_even: bool,
    pub is_isotropic: bool,
    pub is_self_dual: bool,
    pub is_spanning: bool,
}

impl PredicateProfile {
    pub fn of(code: &LinearCode) -> Self {
        let rows = code.generator().rows();
        let is_even = rows.iter().all(|r| r.weight() % 2 == 0);
        // Pairwise dot products vanish: G·Gᵀ = 0.
        let is_isotropic = rows.iter().enumerate().all(|(i, a)| {
            rows[i..]
                .iter()
                .all(|b| !a.dot(b).expect("rows share a length"))
        });
        let is_doubly_even = is_isotropic && rows.iter().all(|r| r.weight() % 4 == 0);
        let is_self_dual = is_isotropic && 2 * code.dimension() == code.ambient_length();
        Self {
            is_even,
            is_doubly_even,
            is_isotropic,
            is_self_dual,
            is_spanning: code.is_spanning(),
        }
    }
}
