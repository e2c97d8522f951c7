//! Exhaustive search for the largest code whose nonzero weights lie in a
//! prescribed set, used to cross-check the moment feasibility test at toy
//! lengths.
//!
//! Codes are enumerated by their fully reduced generator matrices. Rows are
//! added in order of decreasing pivot (leading coordinate); a new row with
//! pivot `q` has zeros before `q` and at every earlier pivot, so each code is
//! reached exactly once. A branch is cut as soon as one of the `2^{k-1}` new
//! codewords has a weight outside the set, or when `k` plus the number of
//! pivots still available cannot beat the best dimension found.

use log::debug;
use serde::{Deserialize, Serialize};

use crate::codes::LinearCode;
use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, Gf2Vector};
use crate::moments::{feasibility_check, StarBounds};

pub const DEFAULT_NODE_CAP: u64 = 100_000_000;

/// Longest ambient length the bitmask search accepts.
pub const MAX_SEARCH_LENGTH: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    pub n: usize,
    pub weights: Vec<usize>,
    pub max_dimension: usize,
    /// Canonical generator of a maximal code; `None` when only the zero code
    /// qualifies.
    pub witness: Option<Gf2Matrix>,
    pub nodes_explored: u64,
    /// False when the node cap stopped the search early; `max_dimension` is
    /// then only a lower bound.
    pub complete: bool,
}

impl SearchResult {
    pub fn witness_code(&self) -> LinearCode {
        match &self.witness {
            Some(g) => LinearCode::from_rows(g),
            None => LinearCode::zero(self.n),
        }
    }
}

struct Dfs {
    n: usize,
    allowed: u128,
    node_cap: u64,
    nodes: u64,
    capped: bool,
    best_dim: usize,
    best_rows: Vec<u64>,
    rows: Vec<u64>,
    pivots: u64,
    words: Vec<u64>,
}

impl Dfs {
    fn allowed(&self, w: u64) -> bool {
        (self.allowed >> w.count_ones()) & 1 == 1
    }

    /// Extends the current code with rows whose pivot is below `limit`.
    fn descend(&mut self, limit: usize) {
        for q in (0..limit).rev() {
            if self.rows.len() + q < self.best_dim || self.capped {
                return;
            }
            // Free coordinates: after q and not an existing pivot.
            let above = if q + 1 >= 64 { 0 } else { !0u64 << (q + 1) };
            let free_mask = above & mask(self.n) & !self.pivots;
            let free: Vec<usize> = bits(free_mask).collect();
            let lead = 1u64 << q;
            for choice in 0u64..(1u64 << free.len()) {
                if self.capped {
                    return;
                }
                let mut row = lead;
                for (j, &c) in free.iter().enumerate() {
                    if (choice >> j) & 1 == 1 {
                        row |= 1 << c;
                    }
                }
                self.try_row(row, q);
            }
        }
    }

    fn try_row(&mut self, row: u64, pivot: usize) {
        let old = self.words.len();
        if !self.words.iter().all(|&w| self.allowed(w ^ row)) {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.node_cap {
            self.capped = true;
            return;
        }
        if self.nodes.is_multiple_of(10_000_000) {
            debug!(
                "search n={} explored {} nodes, best dimension {}",
                self.n, self.nodes, self.best_dim
            );
        }
        self.words.extend_from_within(..old);
        for w in &mut self.words[old..] {
            *w ^= row;
        }
        self.rows.push(row);
        self.pivots |= 1 << pivot;
        if self.rows.len() > self.best_dim {
            self.best_dim = self.rows.len();
            self.best_rows = self.rows.clone();
        }
        self.descend(pivot);
        self.pivots &= !(1 << pivot);
        self.rows.pop();
        self.words.truncate(old);
    }
}

fn mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

/// Largest dimension of a code in `F^n` whose nonzero weights all lie in
/// `weights`, with a witness.
pub fn max_dimension_exhaustive(
    n: usize,
    weights: &[usize],
    node_cap: u64,
) -> Result<SearchResult> {
    if n > MAX_SEARCH_LENGTH {
        return Err(Error::InvalidArgument(format!(
            "exhaustive search supports n <= {MAX_SEARCH_LENGTH}, got {n}"
        )));
    }
    let mut ws: Vec<usize> = weights
        .iter()
        .copied()
        .filter(|&w| w > 0 && w <= n)
        .collect();
    ws.sort_unstable();
    ws.dedup();
    let allowed = ws.iter().fold(0u128, |acc, &w| acc | (1u128 << w));

    let mut dfs = Dfs {
        n,
        allowed,
        node_cap,
        nodes: 0,
        capped: false,
        best_dim: 0,
        best_rows: Vec::new(),
        rows: Vec::new(),
        pivots: 0,
        words: vec![0],
    };
    dfs.descend(n);

    let witness = (!dfs.best_rows.is_empty()).then(|| {
        let rows = dfs
            .best_rows
            .iter()
            .map(|&r| Gf2Vector::from_u64(n, r))
            .collect();
        LinearCode::from_rows(&Gf2Matrix::new(rows, n).expect("uniform rows"))
            .generator()
            .clone()
    });
    let mut sorted_weights = weights.to_vec();
    sorted_weights.sort_unstable();
    sorted_weights.dedup();
    Ok(SearchResult {
        n,
        weights: sorted_weights,
        max_dimension: dfs.best_dim,
        witness,
        nodes_explored: dfs.nodes,
        complete: !dfs.capped,
    })
}

/// One `(n, W)` cell of a cross-validation sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossValidation {
    pub n: usize,
    pub weights: Vec<usize>,
    pub max_dimension: usize,
    /// Length of the witness code (size of the union of its supports).
    pub spanning_length: usize,
    /// Witness weights verified against `weights` by full enumeration.
    pub witness_verified: bool,
    /// Moment feasibility verdict at the witness's own length.
    pub feasible: bool,
    pub agrees: bool,
}

/// Every subset of `universe`, in order of its bitmask.
pub fn subsets(universe: &[usize]) -> Vec<Vec<usize>> {
    (0u32..1 << universe.len())
        .map(|m| {
            universe
                .iter()
                .enumerate()
                .filter(|(i, _)| (m >> i) & 1 == 1)
                .map(|(_, &w)| w)
                .collect()
        })
        .collect()
}

/// For every `n ≤ n_max` and `W ⊆ universe`, checks that the moment
/// feasibility test accepts the maximal code the search finds.
pub fn cross_validate(n_max: usize, universe: &[usize]) -> Result<Vec<CrossValidation>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for ws in subsets(universe) {
            let result = max_dimension_exhaustive(n, &ws, DEFAULT_NODE_CAP)?;
            if !result.complete {
                return Err(Error::InvalidArgument(format!(
                    "search for n={n}, W={ws:?} hit the node cap"
                )));
            }
            out.push(check_witness(&result)?);
        }
    }
    Ok(out)
}

pub fn check_witness(result: &SearchResult) -> Result<CrossValidation> {
    let code = result.witness_code().spanning_restriction();
    let dist = code.weight_distribution()?;
    let witness_verified = code.dimension() == result.max_dimension
        && dist
            .nonzero_weights()
            .iter()
            .all(|w| result.weights.contains(w));
    let ws: Vec<u64> = result.weights.iter().map(|&w| w as u64).collect();
    let verdict = feasibility_check(
        code.ambient_length() as u64,
        code.dimension() as u64,
        &ws,
        StarBounds::default(),
    )?;
    Ok(CrossValidation {
        n: result.n,
        weights: result.weights.clone(),
        max_dimension: result.max_dimension,
        spanning_length: code.ambient_length(),
        witness_verified,
        feasible: verdict.is_feasible(),
        agrees: witness_verified && verdict.is_feasible(),
    })
}
