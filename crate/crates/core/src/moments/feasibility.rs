use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{solve_weight_counts, AffineForm, LinearCountSolution};
use crate::error::{Error, Result};
use crate::exact::{binomial, fmt_rational, serde_exact, v2_rational};

/// Caller restrictions on the dual counts, intersected with the a-priori
/// ranges `0 ≤ a_2^* ≤ C(n,2)` and `0 ≤ a_3^* ≤ C(n,3)`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarBounds {
    pub a2_min: u64,
    pub a2_max: Option<u64>,
    pub a3_min: u64,
    pub a3_max: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Feasible,
    Infeasible,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InfeasibilityReason {
    NegativeCount,
    NonIntegerCount,
    DivisibilityContradiction,
    InconsistentSystem,
    None,
}

/// Counts satisfying every constraint.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assignment {
    #[serde(with = "serde_exact::bigint")]
    pub a2_star: BigInt,
    #[serde(with = "serde_exact::bigint")]
    pub a3_star: BigInt,
    pub weights: Vec<u64>,
    #[serde(with = "serde_exact::bigint_vec")]
    pub counts: Vec<BigInt>,
}

/// The constraint an infeasible instance breaks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// What is constrained, e.g. `a_32` or `identity 2`.
    pub constraint: String,
    /// The affine form involved.
    pub expression: String,
    /// Its forced value, when it is forced.
    pub value: Option<String>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Evidence {
    Witness(Assignment),
    Certificate(Violation),
}

/// Necessary-condition verdict: `Feasible` only means the moment identities
/// admit nonnegative integer counts, not that a code exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeasibilityVerdict {
    pub status: Status,
    pub reason: InfeasibilityReason,
    pub evidence: Evidence,
    pub solution: LinearCountSolution,
}

impl FeasibilityVerdict {
    pub fn is_feasible(&self) -> bool {
        self.status == Status::Feasible
    }

    pub fn witness(&self) -> Option<&Assignment> {
        match &self.evidence {
            Evidence::Witness(a) => Some(a),
            Evidence::Certificate(_) => None,
        }
    }

    pub fn violation(&self) -> Option<&Violation> {
        match &self.evidence {
            Evidence::Certificate(v) => Some(v),
            Evidence::Witness(_) => None,
        }
    }
}

/// Decides whether some nonnegative integers `(a_2^*, a_3^*)` within bounds
/// make every solved count a nonnegative integer and every unused identity
/// hold.
///
/// Weight sets the identities cannot pin down (a zero weight, more than four
/// weights) are rejected.
pub fn feasibility_check(
    n: u64,
    d: u64,
    weights: &[u64],
    bounds: StarBounds,
) -> Result<FeasibilityVerdict> {
    let solution = solve_weight_counts(n, d, weights);
    if !solution.consistent {
        return Err(Error::InvalidArgument(
            solution
                .explanation
                .clone()
                .unwrap_or_else(|| "unsolvable weight set".into()),
        ));
    }
    let (reason, evidence) = decide(&solution, bounds);
    Ok(FeasibilityVerdict {
        status: if reason == InfeasibilityReason::None {
            Status::Feasible
        } else {
            Status::Infeasible
        },
        reason,
        evidence,
        solution,
    })
}

struct Equality {
    label: String,
    form: AffineForm,
}

fn decide(sol: &LinearCountSolution, bounds: StarBounds) -> (InfeasibilityReason, Evidence) {
    use InfeasibilityReason::*;

    let mut equalities: Vec<Equality> = sol
        .residuals
        .iter()
        .map(|r| Equality {
            label: format!("identity {}", r.power),
            form: r.form.clone(),
        })
        .collect();
    for (&w, e) in sol.weights.iter().zip(&sol.expressions) {
        if w > sol.n {
            equalities.push(Equality {
                label: format!("a_{w} (weight exceeds length {})", sol.n),
                form: e.clone(),
            });
        }
    }

    // Constant constraints first: they fail independently of the dual counts.
    for eq in &equalities {
        if eq.form.is_constant() && !eq.form.constant.is_zero() {
            return (
                InconsistentSystem,
                certificate(&eq.label, &eq.form, Some(&eq.form.constant), "must vanish"),
            );
        }
    }
    for (&w, e) in sol.weights.iter().zip(&sol.expressions) {
        if e.is_constant() {
            if e.constant.is_negative() {
                return (
                    NegativeCount,
                    certificate(&format!("a_{w}"), e, Some(&e.constant), "count is negative"),
                );
            }
            if !e.constant.is_integer() {
                return (
                    NonIntegerCount,
                    certificate(
                        &format!("a_{w}"),
                        e,
                        Some(&e.constant),
                        "count is not an integer",
                    ),
                );
            }
        }
    }

    let a2_hi = cap(
        binomial(sol.n, 2).to_u64().unwrap_or(u64::MAX),
        bounds.a2_max,
    );
    let a3_hi = cap(
        binomial(sol.n, 3).to_u64().unwrap_or(u64::MAX),
        bounds.a3_max,
    );
    let ranges = [(bounds.a2_min, a2_hi), (bounds.a3_min, a3_hi)];

    // Dual counts forced by the identities alone.
    let forced = match forced_values(&equalities) {
        Ok(f) => f,
        Err(v) => return (InconsistentSystem, Evidence::Certificate(v)),
    };
    for (var, value) in forced.iter().enumerate() {
        let Some((value, label)) = value else {
            continue;
        };
        let name = ["a2*", "a3*"][var];
        if !value.is_integer() {
            let detail = format!(
                "{label} forces {name} = {} with 2-adic valuation {}, not an integer",
                fmt_rational(value),
                v2_rational(value).map_or("inf".into(), |v| v.to_string())
            );
            return (
                DivisibilityContradiction,
                Evidence::Certificate(Violation {
                    constraint: name.into(),
                    expression: label.clone(),
                    value: Some(fmt_rational(value)),
                    detail,
                }),
            );
        }
        if value.is_negative() {
            return (
                NegativeCount,
                Evidence::Certificate(Violation {
                    constraint: name.into(),
                    expression: label.clone(),
                    value: Some(fmt_rational(value)),
                    detail: format!("{label} forces a negative dual count"),
                }),
            );
        }
        let (lo, hi) = ranges[var];
        let v = value.to_integer();
        if v < BigInt::from(lo) || v > BigInt::from(hi) {
            return (
                InconsistentSystem,
                Evidence::Certificate(Violation {
                    constraint: name.into(),
                    expression: label.clone(),
                    value: Some(v.to_string()),
                    detail: format!("forced value lies outside the admissible range [{lo}, {hi}]"),
                }),
            );
        }
    }

    scan(sol, &equalities, ranges)
}

fn cap(a_priori: u64, caller: Option<u64>) -> u64 {
    caller.map_or(a_priori, |c| c.min(a_priori))
}

fn certificate(
    constraint: &str,
    form: &AffineForm,
    value: Option<&BigRational>,
    detail: &str,
) -> Evidence {
    Evidence::Certificate(Violation {
        constraint: constraint.into(),
        expression: form.to_string(),
        value: value.map(fmt_rational),
        detail: detail.into(),
    })
}

type Forced = [Option<(BigRational, String)>; 2];

/// Eliminates the equalities over `(a2*, a3*)`; returns the variables the
/// system pins to a single value, or the combination that is inconsistent.
fn forced_values(equalities: &[Equality]) -> std::result::Result<Forced, Violation> {
    // Rows [c2, c3, rhs] for c2·a2 + c3·a3 = rhs, with the labels combined.
    let mut rows: Vec<([BigRational; 3], String)> = equalities
        .iter()
        .filter(|e| !e.form.is_zero())
        .map(|e| {
            (
                [
                    e.form.a2.clone(),
                    e.form.a3.clone(),
                    -e.form.constant.clone(),
                ],
                e.label.clone(),
            )
        })
        .collect();
    let mut pivot_rows = Vec::new();
    for col in 0..2 {
        let Some(p) = (pivot_rows.len()..rows.len()).find(|&r| !rows[r].0[col].is_zero()) else {
            continue;
        };
        let target = pivot_rows.len();
        rows.swap(target, p);
        let inv = rows[target].0[col].recip();
        for x in rows[target].0.iter_mut() {
            *x *= &inv;
        }
        let (pivot, plabel) = rows[target].clone();
        for (r, (row, label)) in rows.iter_mut().enumerate() {
            if r == target || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, pv) in row.iter_mut().zip(&pivot) {
                *x -= &f * pv;
            }
            if !label.contains(&plabel) {
                label.push_str(" with ");
                label.push_str(&plabel);
            }
        }
        pivot_rows.push(col);
    }
    for (row, label) in &rows[pivot_rows.len()..] {
        if !row[2].is_zero() {
            return Err(Violation {
                constraint: label.clone(),
                expression: format!("0 = {}", fmt_rational(&row[2])),
                value: Some(fmt_rational(&row[2])),
                detail: "the unused identities contradict each other".into(),
            });
        }
    }
    let mut forced: Forced = [None, None];
    for (i, &col) in pivot_rows.iter().enumerate() {
        let (row, label) = &rows[i];
        if row[1 - col].is_zero() {
            forced[col] = Some((row[2].clone(), label.clone()));
        }
    }
    Ok(forced)
}

fn scan(
    sol: &LinearCountSolution,
    equalities: &[Equality],
    ranges: [(u64, u64); 2],
) -> (InfeasibilityReason, Evidence) {
    let (a2_lo, a2_hi) = ranges[0];
    let (a3_lo, a3_hi) = ranges[1];
    let mut non_integer: Option<Violation> = None;
    let mut integral_star_seen = false;

    // Integrality of α + β·a3 repeats with period lcm(denominators of β).
    let period = sol
        .expressions
        .iter()
        .fold(BigInt::from(1), |acc, e| acc.lcm(e.a3.denom()))
        .to_u64()
        .unwrap_or(u64::MAX);

    let mut a2 = a2_lo;
    while a2 <= a2_hi {
        let a2_big = BigInt::from(a2);
        let at_a2 = |f: &AffineForm| {
            (
                &f.constant + &f.a2 * BigRational::from_integer(a2_big.clone()),
                f.a3.clone(),
            )
        };

        // Equalities either pin a3 or must already hold.
        let mut pinned: Option<BigRational> = None;
        let mut ok = true;
        for eq in equalities {
            let (alpha, beta) = at_a2(&eq.form);
            if beta.is_zero() {
                if !alpha.is_zero() {
                    ok = false;
                    break;
                }
            } else {
                let value = -alpha / beta;
                match &pinned {
                    Some(p) if *p != value => {
                        ok = false;
                        break;
                    }
                    _ => pinned = Some(value),
                }
            }
        }
        if !ok {
            a2 += 1;
            continue;
        }

        let candidates: Box<dyn Iterator<Item = u64>> = match pinned {
            Some(p) => {
                if !p.is_integer() || p.is_negative() {
                    a2 += 1;
                    continue;
                }
                match p.to_integer().to_u64() {
                    Some(v) if v >= a3_lo && v <= a3_hi => Box::new(std::iter::once(v)),
                    _ => {
                        a2 += 1;
                        continue;
                    }
                }
            }
            None => match nonneg_interval(sol, &at_a2, a3_lo, a3_hi) {
                Some((lo, hi)) => {
                    let end = hi.min(lo.saturating_add(period.saturating_sub(1)));
                    Box::new(lo..=end)
                }
                None => {
                    integral_star_seen = true;
                    a2 += 1;
                    continue;
                }
            },
        };

        for a3 in candidates {
            integral_star_seen = true;
            let a3_big = BigInt::from(a3);
            let values: Vec<BigRational> = sol
                .expressions
                .iter()
                .map(|e| e.eval(&a2_big, &a3_big))
                .collect();
            if values.iter().any(Signed::is_negative) {
                continue;
            }
            if let Some(i) = values.iter().position(|v| !v.is_integer()) {
                if non_integer.is_none() {
                    non_integer = Some(Violation {
                        constraint: format!("a_{}", sol.weights[i]),
                        expression: sol.expressions[i].to_string(),
                        value: Some(fmt_rational(&values[i])),
                        detail: format!(
                            "at a2* = {a2}, a3* = {a3} every count is nonnegative but this one is not an integer"
                        ),
                    });
                }
                continue;
            }
            return (
                InfeasibilityReason::None,
                Evidence::Witness(Assignment {
                    a2_star: a2_big,
                    a3_star: a3_big,
                    weights: sol.weights.clone(),
                    counts: values.into_iter().map(|v| v.to_integer()).collect(),
                }),
            );
        }
        a2 += 1;
    }

    if let Some(v) = non_integer {
        return (
            InfeasibilityReason::NonIntegerCount,
            Evidence::Certificate(v),
        );
    }
    if !integral_star_seen && !equalities.is_empty() {
        return (
            InfeasibilityReason::DivisibilityContradiction,
            Evidence::Certificate(Violation {
                constraint: "a3*".into(),
                expression: equalities
                    .iter()
                    .map(|e| e.label.as_str())
                    .collect::<Vec<_>>()
                    .join(", "),
                value: None,
                detail: format!(
                    "no a2* in [{a2_lo}, {a2_hi}] makes the unused identities hold with integral a3* in [{a3_lo}, {a3_hi}]"
                ),
            }),
        );
    }
    (
        InfeasibilityReason::NegativeCount,
        Evidence::Certificate(Violation {
            constraint: "counts".into(),
            expression: sol
                .weights
                .iter()
                .zip(&sol.expressions)
                .map(|(w, e)| format!("a_{w} = {e}"))
                .collect::<Vec<_>>()
                .join("; "),
            value: None,
            detail: format!(
                "no a2* in [{a2_lo}, {a2_hi}], a3* in [{a3_lo}, {a3_hi}] makes every count nonnegative"
            ),
        }),
    )
}

/// Integer range of `a3` on which every expression is nonnegative at the
/// current `a2`.
fn nonneg_interval(
    sol: &LinearCountSolution,
    at_a2: &dyn Fn(&AffineForm) -> (BigRational, BigRational),
    lo: u64,
    hi: u64,
) -> Option<(u64, u64)> {
    let mut lo = BigInt::from(lo);
    let mut hi = BigInt::from(hi);
    for e in &sol.expressions {
        let (alpha, beta) = at_a2(e);
        if beta.is_zero() {
            if alpha.is_negative() {
                return None;
            }
            continue;
        }
        // α + β·a3 ≥ 0
        let bound = -alpha / &beta;
        if beta.is_positive() {
            lo = lo.max(bound.ceil().to_integer());
        } else {
            hi = hi.min(bound.floor().to_integer());
        }
    }
    if lo > hi {
        return None;
    }
    Some((lo.to_u64()?, hi.to_u64()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(n: u64, d: u64, w: &[u64]) -> FeasibilityVerdict {
        feasibility_check(n, d, w, StarBounds::default()).unwrap()
    }

    #[test]
    fn negative_count_example() {
        let v = check(32, 4, &[24, 32]);
        assert_eq!(v.status, Status::Infeasible);
        assert_eq!(v.reason, InfeasibilityReason::NegativeCount);
        let cert = v.violation().unwrap();
        assert_eq!(cert.constraint, "a_32");
        assert_eq!(cert.value.as_deref(), Some("-13"));
    }

    #[test]
    fn feasible_example_has_witness() {
        let v = check(3, 2, &[2]);
        assert!(v.is_feasible());
        let w = v.witness().unwrap();
        assert_eq!(w.counts, vec![BigInt::from(3)]);
        assert_eq!(w.a2_star, BigInt::from(0));
        assert_eq!(w.a3_star, BigInt::from(1));
    }

    #[test]
    fn inconsistent_example() {
        let v = check(7, 3, &[2]);
        assert_eq!(v.reason, InfeasibilityReason::InconsistentSystem);
        let cert = v.violation().unwrap();
        assert_eq!(cert.constraint, "identity 1");
        // 2·7 − 2^2·7
        assert_eq!(cert.value.as_deref(), Some("-14"));
    }

    #[test]
    fn two_weight_divisibility() {
        // Weights {24, 32} at d = 10: identity 2 forces a non-integral a2*.
        let v = check(60, 10, &[24, 32]);
        assert_eq!(v.reason, InfeasibilityReason::DivisibilityContradiction);
        assert_eq!(v.violation().unwrap().constraint, "a2*");
    }

    #[test]
    fn empty_weight_set() {
        let v = check(5, 1, &[]);
        assert_eq!(v.reason, InfeasibilityReason::InconsistentSystem);
        // The zero code is spanning only in F^0.
        assert!(!check(5, 0, &[]).is_feasible());
        assert!(check(0, 0, &[]).is_feasible());
    }

    #[test]
    fn invalid_weight_sets_rejected() {
        assert!(feasibility_check(10, 2, &[0, 4], StarBounds::default()).is_err());
        assert!(feasibility_check(10, 2, &[2, 4, 6, 8, 10], StarBounds::default()).is_err());
    }

    #[test]
    fn known_codes_are_feasible() {
        // Extended Hamming [8, 4]: weights {4, 8}.
        assert!(check(8, 4, &[4, 8]).is_feasible());
        // Extended Golay.
        let v = check(24, 12, &[8, 12, 16, 24]);
        assert!(v.is_feasible(), "{v:?}");
        let w = v.witness().unwrap();
        assert_eq!(
            w.counts,
            vec![759.into(), 2576.into(), 759.into(), 1.into()]
        );
    }

    #[test]
    fn weight_above_length_must_vanish() {
        // A spurious weight past the length is solved to zero.
        let v = check(3, 1, &[3, 5]);
        assert!(v.is_feasible());
        assert_eq!(v.witness().unwrap().counts, vec![1.into(), 0.into()]);
        let v = check(3, 1, &[5]);
        assert_eq!(v.reason, InfeasibilityReason::InconsistentSystem);
    }

    #[test]
    fn caller_bounds_restrict() {
        // Four weights at n = 66, d = 13: a56 = a2* − (a3* + 13)/2 ≥ 0 needs a2* ≥ 7.
        let v = feasibility_check(
            66,
            13,
            &[24, 32, 40, 56],
            StarBounds {
                a2_max: Some(6),
                ..Default::default()
            },
        )
        .unwrap();
        assert!(!v.is_feasible());
    }
}
