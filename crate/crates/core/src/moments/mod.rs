//! Low power moments of a spanning code's weight distribution.
//!
//! Comparing the coefficients of `x^{n-i} y^i`, `i ≤ 3`, on both sides of
//! the MacWilliams identity gives, for a spanning `[n, d]` code,
//!
//! ```text
//! Σ_{i>0} a_i     = 2^d − 1
//! Σ i   a_i       = 2^{d−1} n
//! Σ i^2 a_i       = 2^{d−1} (a_2^* + n(n+1)/2)
//! Σ i^3 a_i       = 2^{d−2} (3(a_2^* n − a_3^*) + n^2(n+3)/2)
//! ```
//!
//! where `a_i^*` counts the dual code. This module checks those identities on
//! concrete codes, solves them for the counts of a prescribed weight set, and
//! decides whether the solution admits nonnegative integer counts.

mod affine;
mod feasibility;
mod solve;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub use affine::AffineForm;
pub use feasibility::{
    feasibility_check, Assignment, Evidence, FeasibilityVerdict, InfeasibilityReason, StarBounds,
    Status, Violation,
};
pub use solve::{solve_linear_system, solve_weight_counts, LinearCountSolution, Residual};

use crate::codes::{LinearCode, WeightEnumerator};
use crate::error::{Error, Result};
use crate::exact::{pow2_rational, rational, serde_exact};

/// Number of moment identities.
pub const N_IDENTITIES: usize = 4;

/// `Σ_i i^k a_i`, with `0^0 = 1` so `k = 0` counts every word.
pub fn power_moment(we: &WeightEnumerator, k: u32) -> BigUint {
    we.counts()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            if k == 0 {
                a.clone()
            } else {
                a * BigUint::from(i as u64).pow(k)
            }
        })
        .sum()
}

/// Left-hand side of identity `k` (0-based): the `k`-th power moment over
/// the nonzero words.
pub fn identity_lhs(we: &WeightEnumerator, k: usize) -> BigInt {
    let m = BigInt::from(power_moment(we, k as u32));
    if k == 0 {
        m - 1
    } else {
        m
    }
}

/// Right-hand side of identity `k` (0-based) as an affine form in
/// `(a_2^*, a_3^*)`.
pub fn identity_rhs(k: usize, n: u64, d: u64) -> AffineForm {
    let n_r = rational(n as i64);
    let d = d as i64;
    match k {
        0 => AffineForm::constant(pow2_rational(d) - BigRational::one()),
        1 => AffineForm::constant(pow2_rational(d - 1) * &n_r),
        2 => {
            let s = pow2_rational(d - 1);
            let base = &n_r * (&n_r + rational(1)) / rational(2);
            AffineForm::new(&s * base, s, BigRational::zero())
        }
        3 => {
            let s = pow2_rational(d - 2);
            let base = &n_r * &n_r * (&n_r + rational(3)) / rational(2);
            AffineForm::new(&s * base, &s * rational(3) * &n_r, -(&s * rational(3)))
        }
        _ => panic!("only identities 0..=3 exist"),
    }
}

/// One identity evaluated on a concrete code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    /// Power of `i` in the moment (0..=3).
    pub power: usize,
    #[serde(with = "serde_exact::bigint")]
    pub lhs: BigInt,
    #[serde(with = "serde_exact::rational")]
    pub rhs: BigRational,
    pub holds: bool,
}

/// Both sides of the four identities for a spanning code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MomentReport {
    pub n: usize,
    pub d: usize,
    /// `Σ i^k a_i` for `k = 0..=3`.
    #[serde(with = "serde_exact::biguint_vec")]
    pub moments: Vec<BigUint>,
    #[serde(with = "serde_exact::biguint")]
    pub a2_star: BigUint,
    #[serde(with = "serde_exact::biguint")]
    pub a3_star: BigUint,
    pub identities: Vec<IdentityCheck>,
}

impl MomentReport {
    pub fn all_hold(&self) -> bool {
        self.identities.iter().all(|c| c.holds)
    }
}

/// Evaluates the four identities on `code`, reading `a_2^*` and `a_3^*` from
/// the MacWilliams transform of the enumerated distribution.
///
/// The code must be spanning; use [`LinearCode::spanning_restriction`] first
/// to work at the code's own length.
pub fn moment_identities_check(code: &LinearCode, cap: usize) -> Result<MomentReport> {
    let support = code.support_union();
    if let Some(zero_coordinate) = (0..code.ambient_length()).find(|&i| !support.get(i)) {
        return Err(Error::NotSpanning { zero_coordinate });
    }
    let we = code.weight_distribution_with_cap(cap)?;
    let dual = we.macwilliams_transform(code.dimension())?;
    Ok(report_from_distributions(&we, &dual, code.dimension()))
}

pub(crate) fn report_from_distributions(
    we: &WeightEnumerator,
    dual: &WeightEnumerator,
    d: usize,
) -> MomentReport {
    let n = we.n();
    let a2_star = dual.count(2);
    let a3_star = dual.count(3);
    let a2 = BigInt::from(a2_star.clone());
    let a3 = BigInt::from(a3_star.clone());
    let identities = (0..N_IDENTITIES)
        .map(|k| {
            let lhs = identity_lhs(we, k);
            let rhs = identity_rhs(k, n as u64, d as u64).eval(&a2, &a3);
            IdentityCheck {
                power: k,
                holds: BigRational::from_integer(lhs.clone()) == rhs,
                lhs,
                rhs,
            }
        })
        .collect();
    MomentReport {
        n,
        d,
        moments: (0..N_IDENTITIES as u32)
            .map(|k| power_moment(we, k))
            .collect(),
        a2_star,
        a3_star,
        identities,
    }
}
