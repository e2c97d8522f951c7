use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{identity_rhs, AffineForm, N_IDENTITIES};

/// An identity not used for solving, rewritten as `form = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Residual {
    /// Power of `i` in the identity (0..=3).
    pub power: usize,
    pub form: AffineForm,
}

/// The counts `a_w`, `w ∈ W`, solved from the first `|W|` identities as
/// affine forms in `(a_2^*, a_3^*)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearCountSolution {
    pub n: u64,
    pub d: u64,
    pub weights: Vec<u64>,
    /// One form per weight, in the order of `weights`.
    pub expressions: Vec<AffineForm>,
    /// Unused identities, each required to vanish.
    pub residuals: Vec<Residual>,
    pub consistent: bool,
    pub explanation: Option<String>,
}

impl LinearCountSolution {
    pub fn expression(&self, weight: u64) -> Option<&AffineForm> {
        self.weights
            .iter()
            .position(|&w| w == weight)
            .map(|i| &self.expressions[i])
    }

    /// `Σ_w w^k a_w − rhs_k` as a form, with the solved expressions substituted.
    pub fn substituted_identity(&self, k: usize) -> AffineForm {
        let mut lhs = AffineForm::zero();
        for (&w, e) in self.weights.iter().zip(&self.expressions) {
            lhs = &lhs + &e.scale(&rational_pow(w, k));
        }
        &lhs - &identity_rhs(k, self.n, self.d)
    }
}

fn rational_pow(w: u64, k: usize) -> BigRational {
    BigRational::from_integer(num_bigint::BigInt::from(w).pow(k as u32))
}

/// Solves the first `|W|` moment identities for `{a_w}`.
///
/// `W` is sorted and deduplicated first. Zero weights or more than four
/// weights leave the system singular or underdetermined; the solution then
/// reports `consistent = false`.
pub fn solve_weight_counts(n: u64, d: u64, weights: &[u64]) -> LinearCountSolution {
    let mut ws = weights.to_vec();
    ws.sort_unstable();
    ws.dedup();
    let m = ws.len();
    let mut out = LinearCountSolution {
        n,
        d,
        weights: ws.clone(),
        expressions: Vec::new(),
        residuals: Vec::new(),
        consistent: false,
        explanation: None,
    };
    if ws.first() == Some(&0) {
        out.explanation = Some("weight 0 is not a nonzero-word weight".into());
        return out;
    }
    if m > N_IDENTITIES {
        out.explanation = Some(format!(
            "{m} unknown counts but only {N_IDENTITIES} identities"
        ));
        return out;
    }

    let matrix: Vec<Vec<BigRational>> = (0..m)
        .map(|k| ws.iter().map(|&w| rational_pow(w, k)).collect())
        .collect();
    let rhs: Vec<AffineForm> = (0..m).map(|k| identity_rhs(k, n, d)).collect();
    let columns: Vec<Vec<BigRational>> = vec![
        rhs.iter().map(|f| f.constant.clone()).collect(),
        rhs.iter().map(|f| f.a2.clone()).collect(),
        rhs.iter().map(|f| f.a3.clone()).collect(),
    ];
    let Some(sol) = solve_linear_system(&matrix, &columns) else {
        out.explanation = Some("the moment system is singular for this weight set".into());
        return out;
    };
    out.expressions = (0..m)
        .map(|i| AffineForm::new(sol[0][i].clone(), sol[1][i].clone(), sol[2][i].clone()))
        .collect();
    out.consistent = true;
    out.residuals = (m..N_IDENTITIES)
        .map(|k| Residual {
            power: k,
            form: out.substituted_identity(k),
        })
        .collect();
    out
}

/// Solves `A X = B` exactly for a square nonsingular `A`, one solution per
/// right-hand-side column. Returns `None` when `A` is singular.
pub fn solve_linear_system(
    a: &[Vec<BigRational>],
    columns: &[Vec<BigRational>],
) -> Option<Vec<Vec<BigRational>>> {
    let m = a.len();
    let c = columns.len();
    let mut aug: Vec<Vec<BigRational>> = (0..m)
        .map(|i| {
            assert_eq!(a[i].len(), m, "matrix must be square");
            let mut row = a[i].clone();
            row.extend(columns.iter().map(|col| col[i].clone()));
            row
        })
        .collect();
    for col in 0..m {
        let p = (col..m).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, p);
        let inv = BigRational::one() / &aug[col][col];
        for x in aug[col].iter_mut() {
            *x *= &inv;
        }
        let pivot = aug[col].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot) {
                *x -= &f * p;
            }
        }
    }
    Some(
        (0..c)
            .map(|j| (0..m).map(|i| aug[i][m + j].clone()).collect())
            .collect(),
    )
}
