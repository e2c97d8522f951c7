//! Inputs shared by the criterion benches.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gf2codes::{Gf2Matrix, Gf2Vector, LinearCode};

/// A seeded `[n, d]` code: an identity block followed by random columns.
pub fn pseudo_random_code(n: usize, d: usize, seed: u64) -> LinearCode {
    assert!(d <= n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = (0..d)
        .map(|i| {
            let bits: Vec<bool> = (0..n)
                .map(|j| if j < d { j == i } else { rng.gen() })
                .collect();
            Gf2Vector::from_bools(&bits)
        })
        .collect();
    LinearCode::from_rows(&Gf2Matrix::new(rows, n).expect("uniform rows"))
}
