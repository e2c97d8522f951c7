use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

#[inline]
pub(crate) fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// A word of `F^n`, bit-packed into 64-bit limbs.
///
/// Coordinate `i` lives in limb `i / 64` at bit `i % 64`. Bits past `len` are
/// always zero, so derived equality and hashing are exact.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Gf2Vector {
    len: usize,
    words: Vec<u64>,
}

impl Gf2Vector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self {
            len,
            words: vec![u64::MAX; words_for(len)],
        };
        v.clear_tail();
        v
    }

    /// Unit vector `e_i`.
    pub fn unit(len: usize, index: usize) -> Result<Self> {
        Self::from_support(len, [index])
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.words[i / WORD_BITS] |= 1 << (i % WORD_BITS);
            }
        }
        v
    }

    /// Builds a word from its support.
    pub fn from_support<I: IntoIterator<Item = usize>>(len: usize, support: I) -> Result<Self> {
        let mut v = Self::zeros(len);
        for i in support {
            if i >= len {
                return Err(Error::CoordinateOutOfRange { index: i, n: len });
            }
            v.words[i / WORD_BITS] |= 1 << (i % WORD_BITS);
        }
        Ok(v)
    }

    /// Builds a word of length `len <= 64` from the low bits of `bits`.
    pub fn from_u64(len: usize, bits: u64) -> Self {
        assert!(len <= WORD_BITS, "from_u64 supports at most 64 coordinates");
        let mut v = Self::zeros(len);
        if len > 0 {
            v.words[0] = bits;
            v.clear_tail();
        }
        v
    }

    /// Parses a `0`/`1` string, coordinate 0 first.
    pub fn parse_bits(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for (col, ch) in s.chars().enumerate() {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                other => {
                    return Err(Error::InvalidArgument(format!(
                        "unexpected character {other:?} at column {}",
                        col + 1
                    )))
                }
            }
        }
        Ok(Self::from_bools(&bits))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(
            i < self.len,
            "coordinate {i} out of range for length {}",
            self.len
        );
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(
            i < self.len,
            "coordinate {i} out of range for length {}",
            self.len
        );
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(
            i < self.len,
            "coordinate {i} out of range for length {}",
            self.len
        );
        self.words[i / WORD_BITS] ^= 1 << (i % WORD_BITS);
    }

    /// Number of nonzero coordinates.
    #[inline]
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Sorted list of nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight());
        for (k, &word) in self.words.iter().enumerate() {
            let mut w = word;
            while w != 0 {
                out.push(k * WORD_BITS + w.trailing_zeros() as usize);
                w &= w - 1;
            }
        }
        out
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, &w)| k * WORD_BITS + w.trailing_zeros() as usize)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        let mut out = self.clone();
        out.add_assign_unchecked(other);
        Ok(out)
    }

    /// In-place sum; lengths must already agree.
    #[inline]
    pub(crate) fn add_assign_unchecked(&mut self, other: &Self) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// `|Supp(self) ∩ Supp(other)|`.
    pub fn intersection_weight(&self, other: &Self) -> Result<usize> {
        self.check_len(other)?;
        Ok(self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum())
    }

    /// Standard bilinear form.
    pub fn dot(&self, other: &Self) -> Result<bool> {
        Ok(self.intersection_weight(other)? % 2 == 1)
    }

    /// Keeps only the coordinates where `keep` is true, preserving their order.
    pub fn restrict(&self, keep: &[bool]) -> Result<Self> {
        if keep.len() != self.len {
            return Err(Error::LengthMismatch {
                expected: self.len,
                found: keep.len(),
            });
        }
        let bits: Vec<bool> = keep
            .iter()
            .enumerate()
            .filter(|(_, &k)| k)
            .map(|(i, _)| self.get(i))
            .collect();
        Ok(Self::from_bools(&bits))
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                expected: self.len,
                found: other.len,
            });
        }
        Ok(())
    }

    fn clear_tail(&mut self) {
        let rem = self.len % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl fmt::Display for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Vector({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> Gf2Vector {
        Gf2Vector::parse_bits(s).unwrap()
    }

    #[test]
    fn weight_examples() {
        assert_eq!(Gf2Vector::zeros(8).weight(), 0);
        assert_eq!(Gf2Vector::ones(24).weight(), 24);
        assert_eq!(v("10110").weight(), 3);
    }

    #[test]
    fn add_examples() {
        let a = v("1101");
        assert!(a.add(&a).unwrap().is_zero());
        assert_eq!(v("1100").add(&v("0011")).unwrap(), v("1111"));
        let s = v("110").add(&v("011")).unwrap();
        assert_eq!(s, v("101"));
        assert_eq!(s.weight(), 2);
    }

    #[test]
    fn add_length_mismatch() {
        assert_eq!(
            v("10").add(&v("101")),
            Err(Error::LengthMismatch {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn support_examples() {
        assert_eq!(v("0101").support(), vec![1, 3]);
        assert!(Gf2Vector::zeros(5).support().is_empty());
        assert_eq!(Gf2Vector::ones(3).support(), vec![0, 1, 2]);
    }

    #[test]
    fn tail_bits_stay_clear() {
        let o = Gf2Vector::ones(70);
        assert_eq!(o.words()[1], (1 << 6) - 1);
        assert_eq!(Gf2Vector::ones(64).words(), &[u64::MAX]);
        assert_eq!(Gf2Vector::from_u64(3, u64::MAX), v("111"));
    }

    #[test]
    fn zero_length() {
        let z = Gf2Vector::zeros(0);
        assert!(z.is_empty());
        assert!(z.is_zero());
        assert_eq!(z.weight(), 0);
        assert_eq!(z.to_string(), "");
    }

    #[test]
    fn restrict_keeps_order() {
        let w = v("101101");
        let kept = w.restrict(&[true, false, true, true, false, true]).unwrap();
        assert_eq!(kept, v("1111"));
    }

    #[test]
    fn from_support_rejects_out_of_range() {
        assert!(Gf2Vector::from_support(4, [4]).is_err());
        assert_eq!(
            Gf2Vector::from_support(130, [0, 129]).unwrap().support(),
            vec![0, 129]
        );
    }
}
