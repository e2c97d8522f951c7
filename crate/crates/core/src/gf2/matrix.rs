use std::fmt;

use serde::{Deserialize, Serialize};

use super::Gf2Vector;
use crate::error::{Error, Result};

/// Dense matrix over GF(2), stored as packed rows.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Gf2Matrix {
    rows: Vec<Gf2Vector>,
    n_cols: usize,
}

/// Output of [`Gf2Matrix::rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    /// Fully reduced echelon form, same shape as the input, zero rows last.
    pub matrix: Gf2Matrix,
    pub rank: usize,
    /// Pivot column of each of the first `rank` rows, strictly increasing.
    pub pivots: Vec<usize>,
}

impl Gf2Matrix {
    pub fn new(rows: Vec<Gf2Vector>, n_cols: usize) -> Result<Self> {
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n_cols {
                return Err(Error::RaggedRows {
                    row: i,
                    expected: n_cols,
                    found: r.len(),
                });
            }
        }
        Ok(Self { rows, n_cols })
    }

    /// Builds from rows, taking the column count from the first row.
    /// An empty row list gives a 0×0 matrix.
    pub fn from_rows(rows: Vec<Gf2Vector>) -> Result<Self> {
        let n_cols = rows.first().map_or(0, Gf2Vector::len);
        Self::new(rows, n_cols)
    }

    pub fn empty(n_cols: usize) -> Self {
        Self {
            rows: Vec::new(),
            n_cols,
        }
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| Gf2Vector::from_support(n, [i]).expect("index in range"))
            .collect();
        Self { rows, n_cols: n }
    }

    /// Parses rows of `0`/`1` strings.
    pub fn parse_rows<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|s| Gf2Vector::parse_bits(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(parsed)
    }

    #[inline]
    pub fn rows(&self) -> &[Gf2Vector] {
        &self.rows
    }

    #[inline]
    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn into_rows(self) -> Vec<Gf2Vector> {
        self.rows
    }

    /// `M · vᵀ`, one output bit per row.
    pub fn mul_vec(&self, v: &Gf2Vector) -> Result<Gf2Vector> {
        if v.len() != self.n_cols {
            return Err(Error::LengthMismatch {
                expected: self.n_cols,
                found: v.len(),
            });
        }
        let bits: Vec<bool> = self
            .rows
            .iter()
            .map(|r| r.dot(v).expect("lengths checked"))
            .collect();
        Ok(Gf2Vector::from_bools(&bits))
    }

    /// `A · Bᵀ`; both operands must share the column count.
    pub fn mul_transpose(&self, other: &Self) -> Result<Self> {
        if other.n_cols != self.n_cols {
            return Err(Error::LengthMismatch {
                expected: self.n_cols,
                found: other.n_cols,
            });
        }
        let rows = self
            .rows
            .iter()
            .map(|r| other.mul_vec(r))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            rows,
            n_cols: other.n_rows(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Gf2Vector::is_zero)
    }

    /// Gauss–Jordan elimination to the fully reduced row echelon form.
    pub fn rref(&self) -> Rref {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..self.n_cols {
            if rank == rows.len() {
                break;
            }
            let Some(p) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot_row = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row.get(col) {
                    row.add_assign_unchecked(&pivot_row);
                }
            }
            pivots.push(col);
            rank += 1;
        }
        Rref {
            matrix: Self {
                rows,
                n_cols: self.n_cols,
            },
            rank,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of `{x : M·xᵀ = 0}`, one row per free column.
    pub fn nullspace_basis(&self) -> Self {
        let Rref {
            matrix,
            rank,
            pivots,
        } = self.rref();
        let mut is_pivot = vec![false; self.n_cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::with_capacity(self.n_cols - rank);
        for free in (0..self.n_cols).filter(|&c| !is_pivot[c]) {
            let mut x = Gf2Vector::zeros(self.n_cols);
            x.set(free, true);
            for (row, &p) in matrix.rows[..rank].iter().zip(&pivots) {
                if row.get(free) {
                    x.set(p, true);
                }
            }
            basis.push(x);
        }
        Self {
            rows: basis,
            n_cols: self.n_cols,
        }
    }

    /// Matrix text format: one `0`/`1` line per row.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.rows {
            s.push_str(&r.to_string());
            s.push('\n');
        }
        s
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{} [", self.n_rows(), self.n_cols)?;
        for r in &self.rows {
            writeln!(f, "  {r}")?;
        }
        write!(f, "]")
    }
}
