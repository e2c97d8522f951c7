use serde_json::json;

use super::{ProofStep, StepKind};
use crate::codes::LinearCode;
use crate::error::{Error, Result};
use crate::gf2::Gf2Vector;

/// Smallest `|Supp(v) ∪ Supp(w)|` over distinct words with `|v| = w1`,
/// `|w| = w2` and `|v + w| ≥ min_sum_weight`.
///
/// With `r` the overlap, `|v + w| = w1 + w2 − 2r`, so `r ≤ (w1 + w2 − m)/2`,
/// and also `r ≤ min(w1, w2)`. The union `w1 + w2 − r` is therefore at least
/// `max((w1 + w2 + m)/2, w1, w2)`, and that value is attained.
pub fn min_union_length(w1: u64, w2: u64, min_sum_weight: u64) -> Result<u64> {
    if w1 == 0 || w2 == 0 || min_sum_weight == 0 {
        return Err(Error::InvalidArgument(
            "weights and the minimum sum weight must be positive".into(),
        ));
    }
    let total = w1 + w2;
    if min_sum_weight > total {
        return Err(Error::InvalidArgument(format!(
            "no pair of weights {w1}, {w2} has a sum of weight {min_sum_weight} or more"
        )));
    }
    if !(total - min_sum_weight).is_multiple_of(2) {
        return Err(Error::Parity(format!(
            "{w1} + {w2} - {min_sum_weight} is odd"
        )));
    }
    Ok(((total + min_sum_weight) / 2).max(w1).max(w2))
}

/// Two weight-56 words in `F^68` overlapping in 44 coordinates. Their span
/// has weights `{56, 56, 24}`, so `a_56 = 2` is possible once the ambient
/// length reaches 68.
pub fn remark_sharpness_code() -> LinearCode {
    let v = Gf2Vector::from_support(68, 0..56).expect("in range");
    let w = Gf2Vector::from_support(68, 12..68).expect("in range");
    LinearCode::from_vectors(68, vec![v, w]).expect("same length")
}

/// `a_56 ≤ 1` for codes in `F^ambient` with all weights at least 24.
pub fn verify_remark_a56(ambient: u64) -> ProofStep {
    let union = min_union_length(56, 56, 24).expect("compatible parities");
    let max_overlap = (56 + 56 - 24) / 2;
    ProofStep::new(
        format!("a56-at-most-one.ambient-{ambient}"),
        StepKind::Arithmetic,
        format!(
            "two distinct weight-56 words with |v+w| >= 24 span {union} coordinates; \
             {union} > {ambient} forces a_56 <= 1 in F^{ambient}"
        ),
        "remark:a56-at-most-one",
        union > ambient,
        json!({
            "ambient": ambient,
            "weight": 56,
            "min_sum_weight": 24,
            "max_overlap": max_overlap,
            "min_union_length": union,
            "annotation": format!(
                "|v+w| = 112 - 2r >= 24 bounds the overlap r from above (r <= {max_overlap}); \
                 the union 112 - r >= {union} uses that upper bound, not a lower bound on r"
            ),
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn union_examples() {
        assert_eq!(min_union_length(56, 56, 24).unwrap(), 68);
        assert_eq!(min_union_length(8, 8, 8).unwrap(), 12);
        for k in 1..20 {
            assert_eq!(min_union_length(k, k, 2 * k).unwrap(), 2 * k);
        }
        // Containment: a weight-2 word inside a weight-10 word.
        assert_eq!(min_union_length(10, 2, 2).unwrap(), 10);
    }

    #[test]
    fn union_errors() {
        assert!(matches!(min_union_length(3, 4, 2), Err(Error::Parity(_))));
        assert!(min_union_length(3, 4, 9).is_err());
        assert!(min_union_length(0, 4, 2).is_err());
    }

    #[test]
    fn remark_threshold() {
        assert!(verify_remark_a56(66).passed());
        assert!(verify_remark_a56(67).passed());
        assert!(!verify_remark_a56(68).passed());
        assert_eq!(verify_remark_a56(67).data["min_union_length"], 68);
    }

    #[test]
    fn sharpness_code_has_two_weight_56_words() {
        let c = remark_sharpness_code();
        let dist = c.weight_distribution().unwrap();
        assert_eq!(dist.nonzero_weights(), vec![24, 56]);
        assert_eq!(dist.count(56), 2u32.into());
    }
}
