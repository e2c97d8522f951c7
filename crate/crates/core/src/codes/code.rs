use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{PredicateProfile, WeightEnumerator};
use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, Gf2Vector};

/// Default maximum dimension for full codeword enumeration.
pub const DEFAULT_ENUMERATION_CAP: usize = 28;

/// Dimensions at or above this enumerate in parallel blocks.
const PARALLEL_THRESHOLD: usize = 16;
const BLOCK_BITS: usize = 12;

/// A binary linear code `V ⊂ F^n`, held by its fully reduced generator matrix.
///
/// Two codes are equal iff they have the same ambient length and the same
/// canonical generator.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearCode {
    n: usize,
    generator: Gf2Matrix,
    pivots: Vec<usize>,
}

impl LinearCode {
    /// The code spanned by the rows of `m`.
    pub fn from_rows(m: &Gf2Matrix) -> Self {
        let rref = m.rref();
        let rows = rref
            .matrix
            .into_rows()
            .into_iter()
            .take(rref.rank)
            .collect();
        Self {
            n: m.n_cols(),
            generator: Gf2Matrix::new(rows, m.n_cols()).expect("rref keeps row length"),
            pivots: rref.pivots,
        }
    }

    /// Like [`from_rows`](Self::from_rows) but taking possibly ragged rows.
    pub fn from_vectors(n: usize, rows: Vec<Gf2Vector>) -> Result<Self> {
        Ok(Self::from_rows(&Gf2Matrix::new(rows, n)?))
    }

    pub fn zero(n: usize) -> Self {
        Self::from_rows(&Gf2Matrix::empty(n))
    }

    pub fn full(n: usize) -> Self {
        Self::from_rows(&Gf2Matrix::identity(n))
    }

    /// Repetition code `[n, 1]` (for `n ≥ 1`).
    pub fn repetition(n: usize) -> Self {
        Self::from_vectors(n, vec![Gf2Vector::ones(n)]).expect("uniform rows")
    }

    /// All even-weight words of `F^n`.
    pub fn even_weight(n: usize) -> Self {
        Self::repetition(n).dual()
    }

    #[inline]
    pub fn ambient_length(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn dimension(&self) -> usize {
        self.generator.n_rows()
    }

    /// Canonical (fully reduced) generator matrix.
    #[inline]
    pub fn generator(&self) -> &Gf2Matrix {
        &self.generator
    }

    #[inline]
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coefficients of `v` in the canonical generator basis, or `None` when
    /// `v ∉ V`.
    pub fn coordinates(&self, v: &Gf2Vector) -> Result<Option<Vec<bool>>> {
        self.check_len(v)?;
        let mut rest = v.clone();
        let mut coeffs = vec![false; self.dimension()];
        for (i, (row, &p)) in self.generator.rows().iter().zip(&self.pivots).enumerate() {
            if rest.get(p) {
                rest.add_assign_unchecked(row);
                coeffs[i] = true;
            }
        }
        Ok(rest.is_zero().then_some(coeffs))
    }

    pub fn contains(&self, v: &Gf2Vector) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    /// The annihilator `V^*` under the standard bilinear form.
    pub fn dual(&self) -> Self {
        Self::from_rows(&self.generator.nullspace_basis())
    }

    /// Union of all supports.
    pub fn support_union(&self) -> Gf2Vector {
        let mut acc = Gf2Vector::zeros(self.n);
        for r in self.generator.rows() {
            for i in r.support() {
                acc.set(i, true);
            }
        }
        acc
    }

    /// Cardinality of the union of supports of all codewords.
    pub fn length(&self) -> usize {
        self.support_union().weight()
    }

    pub fn is_spanning(&self) -> bool {
        self.length() == self.n
    }

    /// The same code viewed inside `F^{length}` by dropping coordinates that
    /// vanish on every word.
    pub fn spanning_restriction(&self) -> Self {
        let keep: Vec<bool> = {
            let u = self.support_union();
            (0..self.n).map(|i| u.get(i)).collect()
        };
        self.delete_coordinates(&keep)
    }

    /// Image under the coordinate projection keeping the `true` entries.
    pub(crate) fn delete_coordinates(&self, keep: &[bool]) -> Self {
        let n_kept = keep.iter().filter(|&&k| k).count();
        let rows = self
            .generator
            .rows()
            .iter()
            .map(|r| r.restrict(keep).expect("keep mask has ambient length"))
            .collect();
        Self::from_rows(&Gf2Matrix::new(rows, n_kept).expect("uniform rows"))
    }

    /// Codeword with the given message bits (bit `i` selects generator row `i`).
    pub fn encode_index(&self, message: u64) -> Gf2Vector {
        let mut v = Gf2Vector::zeros(self.n);
        for (i, row) in self.generator.rows().iter().enumerate() {
            if (message >> i) & 1 == 1 {
                v.add_assign_unchecked(row);
            }
        }
        v
    }

    /// All `2^d` codewords in Gray-code order, starting at zero.
    pub fn codewords(&self, cap: usize) -> Result<Vec<Gf2Vector>> {
        self.check_cap(cap)?;
        let mut out = Vec::with_capacity(1 << self.dimension());
        self.gray_walk(0, 1u64 << self.dimension(), |v| out.push(v.clone()));
        Ok(out)
    }

    pub fn weight_distribution(&self) -> Result<WeightEnumerator> {
        self.weight_distribution_with_cap(DEFAULT_ENUMERATION_CAP)
    }

    /// Exact weight distribution by a Gray-code walk over all codewords.
    ///
    /// Large dimensions are split into disjoint message blocks whose
    /// histograms are summed, so the result does not depend on scheduling.
    pub fn weight_distribution_with_cap(&self, cap: usize) -> Result<WeightEnumerator> {
        self.check_cap(cap)?;
        let d = self.dimension();
        let hist = if d >= PARALLEL_THRESHOLD {
            let block = 1u64 << BLOCK_BITS;
            let n_blocks = 1u64 << (d - BLOCK_BITS);
            (0..n_blocks)
                .into_par_iter()
                .map(|b| self.histogram(b * block, block))
                .reduce(|| vec![0u64; self.n + 1], add_hist)
        } else {
            self.histogram(0, 1u64 << d)
        };
        Ok(WeightEnumerator::from_counts(
            hist.into_iter().map(Into::into).collect(),
        ))
    }

    /// Histogram of the codewords with Gray-code indices `start..start+len`.
    pub(crate) fn histogram(&self, start: u64, len: u64) -> Vec<u64> {
        let mut hist = vec![0u64; self.n + 1];
        self.gray_walk(start, len, |v| hist[v.weight()] += 1);
        hist
    }

    fn gray_walk(&self, start: u64, len: u64, mut visit: impl FnMut(&Gf2Vector)) {
        if len == 0 {
            return;
        }
        let rows = self.generator.rows();
        let mut current = self.encode_index(start ^ (start >> 1));
        visit(&current);
        for i in start + 1..start + len {
            let flip = i.trailing_zeros() as usize;
            current.add_assign_unchecked(&rows[flip]);
            visit(&current);
        }
    }

    pub fn predicate_profile(&self) -> PredicateProfile {
        PredicateProfile::of(self)
    }

    fn check_len(&self, v: &Gf2Vector) -> Result<()> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: v.len(),
            });
        }
        Ok(())
    }

    fn check_cap(&self, cap: usize) -> Result<()> {
        if self.dimension() > cap || self.dimension() >= 64 {
            return Err(Error::EnumerationCap {
                dimension: self.dimension(),
                cap,
            });
        }
        Ok(())
    }
}

fn add_hist(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

impl std::fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "LinearCode[n={}, d={}] {:?}",
            self.n,
            self.dimension(),
            self.generator
        )
    }
}
