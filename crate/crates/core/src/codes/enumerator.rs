use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{binomial, pow2, serde_exact};

/// Weight distribution `a_0..a_n`, i.e. the coefficients of
/// `W(x, y) = Σ a_i x^{n-i} y^i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightEnumerator {
    #[serde(with = "serde_exact::biguint_vec")]
    counts: Vec<BigUint>,
}

impl WeightEnumerator {
    /// `counts[i]` is the number of words of weight `i`; the ambient length
    /// is `counts.len() - 1`.
    pub fn from_counts(counts: Vec<BigUint>) -> Self {
        assert!(!counts.is_empty(), "a distribution has at least a_0");
        Self { counts }
    }

    pub fn from_u64s(counts: &[u64]) -> Self {
        Self::from_counts(counts.iter().map(|&c| c.into()).collect())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.counts.len() - 1
    }

    #[inline]
    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// `a_i`, zero past the ambient length.
    pub fn count(&self, i: usize) -> BigUint {
        self.counts.get(i).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// `(weight, count)` pairs with nonzero count.
    pub fn support(&self) -> Vec<(usize, BigUint)> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect()
    }

    /// Nonzero weights carried by at least one word.
    pub fn nonzero_weights(&self) -> Vec<usize> {
        self.support()
            .into_iter()
            .map(|(i, _)| i)
            .filter(|&i| i > 0)
            .collect()
    }

    /// Distribution of the dual of a `dim`-dimensional code with this
    /// distribution, via `W(x+y, x−y) / 2^dim`.
    ///
    /// Every coefficient is computed as an exact integer and must divide by
    /// `2^dim` with a nonnegative quotient.
    pub fn macwilliams_transform(&self, dim: usize) -> Result<Self> {
        let n = self.n();
        if self.total() != pow2(dim as u64) {
            return Err(Error::InvalidDistribution(format!(
                "counts sum to {}, expected 2^{dim}",
                self.total()
            )));
        }
        let divisor = BigInt::from(pow2(dim as u64));
        let mut out = Vec::with_capacity(n + 1);
        for j in 0..=n {
            let mut acc = BigInt::zero();
            for (i, a) in self.counts.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                acc += BigInt::from(a.clone()) * krawtchouk(n, j, i);
            }
            let (q, r) = (&acc / &divisor, &acc % &divisor);
            if !r.is_zero() {
                return Err(Error::InvalidDistribution(format!(
                    "coefficient of x^{}y^{j} is {acc}, not divisible by 2^{dim}",
                    n - j
                )));
            }
            match q.into_parts() {
                (Sign::Minus, mag) => {
                    return Err(Error::InvalidDistribution(format!(
                        "dual count a_{j} = -{mag} is negative"
                    )))
                }
                (_, mag) => out.push(mag),
            }
        }
        Ok(Self::from_counts(out))
    }
}

/// Coefficient of `x^{n-j} y^j` in `(x+y)^{n-i} (x−y)^i`.
fn krawtchouk(n: usize, j: usize, i: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for s in 0..=j.min(i) {
        if j - s > n - i {
            continue;
        }
        let term =
            BigInt::from(binomial(i as u64, s as u64) * binomial((n - i) as u64, (j - s) as u64));
        if s % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

impl Default for WeightEnumerator {
    fn default() -> Self {
        Self::from_counts(vec![BigUint::one()])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn repetition_4_transform() {
        let we = WeightEnumerator::from_u64s(&[1, 0, 0, 0, 1]);
        let dual = we.macwilliams_transform(1).unwrap();
        assert_eq!(dual, WeightEnumerator::from_u64s(&[1, 0, 6, 0, 1]));
    }

    #[test]
    fn hamming_transform() {
        let we = WeightEnumerator::from_u64s(&[1, 0, 0, 7, 7, 0, 0, 1]);
        let dual = we.macwilliams_transform(4).unwrap();
        assert_eq!(dual, WeightEnumerator::from_u64s(&[1, 0, 0, 0, 7, 0, 0, 0]));
        assert_eq!(dual.macwilliams_transform(3).unwrap(), we);
    }

    #[test]
    fn golay_is_a_fixed_point() {
        let mut c = vec![0u64; 25];
        c[0] = 1;
        c[8] = 759;
        c[12] = 2576;
        c[16] = 759;
        c[24] = 1;
        let we = WeightEnumerator::from_u64s(&c);
        assert_eq!(we.macwilliams_transform(12).unwrap(), we);
    }

    #[test]
    fn invalid_distributions_rejected() {
        // Three weight-1 words in F^3: 6 x^2 y / 4 is not integral.
        let bad = WeightEnumerator::from_u64s(&[1, 3, 0, 0]);
        assert!(matches!(
            bad.macwilliams_transform(2),
            Err(Error::InvalidDistribution(_))
        ));
        let wrong_total = WeightEnumerator::from_u64s(&[1, 1, 1]);
        assert!(wrong_total.macwilliams_transform(1).is_err());
    }

    #[test]
    fn krawtchouk_small() {
        // (x+y)^2 (x−y)^1 = x^3 + x^2 y − x y^2 − y^3
        let k: Vec<i64> = (0..=3)
            .map(|j| i64::try_from(krawtchouk(3, j, 1)).unwrap())
            .collect();
        assert_eq!(k, vec![1, 1, -1, -1]);
    }
}
