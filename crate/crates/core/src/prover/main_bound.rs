use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use super::remark::verify_remark_a56;
use super::two_weight::{verify_two_weight_bound, DEFAULT_N_RANGE, TWO_WEIGHT_BOUND};
use super::{ProofReport, ProofStep, StepKind};
use crate::codes::LinearCode;
use crate::exact::{fmt_rational, rational, rational_frac};
use crate::fixtures;
use crate::gf2::Gf2Vector;
use crate::moments::{solve_weight_counts, AffineForm};
use crate::transforms::{projected_weight, shorten, subcode_avoiding, vanishing_subcode};

/// Largest dimension of a code with weights in `{24, 32, 56}`.
pub const THREE_WEIGHT_BOUND: u64 = 10;

pub const MAIN_WEIGHTS: [u64; 4] = [24, 32, 40, 56];
pub const MAIN_AMBIENT: u64 = 66;

const ANCHOR_THREE: &str = "lemma:weights-24-32-56-dim-le-10";
const ANCHOR_MAIN: &str = "theorem:dim-le-12-in-f66";
const ANCHOR_REMARK: &str = "remark:a56-at-most-one";
const ANCHOR_PROJECTION: &str = "prop:projection-away-from-support";
const ANCHOR_SHORTEN: &str = "remark:shortening-codimension";
const ANCHOR_ISOTROPIC: &str = "remark:doubly-even-is-isotropic";

/// Dimensions of the two-weight bound replayed explicitly. Larger codes
/// contain a subcode of dimension 10 with the same weights.
const TWO_WEIGHT_REPLAY: std::ops::RangeInclusive<u64> = 10..=16;

pub fn verify_three_weight_bound() -> ProofReport {
    verify_three_weight_bound_claim(THREE_WEIGHT_BOUND)
}

/// Checks the argument that a code with weights in `{24, 32, 56}` inside
/// `F^67` has dimension at most `claimed`. Only `claimed ≥ 10` passes.
pub fn verify_three_weight_bound_claim(claimed: u64) -> ProofReport {
    let remark = verify_remark_a56(67);
    let mut steps = vec![ProofStep::new(
        "a56-at-most-one",
        StepKind::CitedLemma,
        "a code in F^67 with weights >= 24 has a_56 <= 1",
        ANCHOR_REMARK,
        remark.passed(),
        json!({ "cited": remark.id, "status": remark.status, "remark": remark.data }),
    )];

    let replays: Vec<ProofReport> = TWO_WEIGHT_REPLAY
        .map(|d| verify_two_weight_bound(d, DEFAULT_N_RANGE))
        .collect();
    let replays_pass = replays.iter().all(|r| r.overall);
    steps.push(ProofStep::new(
        "case-no-weight-56",
        StepKind::CitedLemma,
        format!(
            "if a_56 = 0 the weights lie in {{24, 32}}, so dim <= {TWO_WEIGHT_BOUND} <= {claimed}"
        ),
        ANCHOR_THREE,
        replays_pass && TWO_WEIGHT_BOUND <= claimed,
        json!({
            "two_weight_bound": TWO_WEIGHT_BOUND,
            "claimed": claimed,
            "replayed_dimensions": TWO_WEIGHT_REPLAY.collect::<Vec<_>>(),
            "reports": replays.iter().map(ProofReport::citation).collect::<Vec<_>>(),
        }),
    ));

    let (demo, demo_ok) = hyperplane_demo();
    steps.push(ProofStep::new(
        "case-one-weight-56",
        StepKind::Structural,
        format!(
            "if a_56 = 1 a hyperplane avoiding the weight-56 word has codimension 1 and \
             weights in {{24, 32}}, so dim <= {} <= {claimed}",
            TWO_WEIGHT_BOUND + 1
        ),
        ANCHOR_THREE,
        demo_ok && TWO_WEIGHT_BOUND < claimed,
        json!({
            "operation": "subcode_avoiding",
            "codimension": 1,
            "bound": TWO_WEIGHT_BOUND + 1,
            "claimed": claimed,
            "demonstration": demo,
        }),
    ));

    ProofReport::new(
        format!("weights {{24, 32, 56}} in F^67: dim <= {claimed}"),
        steps,
    )
}

/// `subcode_avoiding` on a small code in `F^67` with weights `{24, 32, 56}`
/// and a single weight-56 word.
fn hyperplane_demo() -> (Value, bool) {
    let u = Gf2Vector::from_support(67, 0..56).expect("in range");
    let x = Gf2Vector::from_support(67, 28..52).expect("in range");
    let code = LinearCode::from_vectors(67, vec![u.clone(), x]).expect("same length");
    let before = code.weight_distribution().expect("small code");
    let sub = subcode_avoiding(&code, &u).expect("u is a nonzero codeword");
    let after = sub.weight_distribution().expect("small code");
    let ok = before.count(56) == 1u32.into()
        && code.dimension() - sub.dimension() == 1
        && after.nonzero_weights().iter().all(|w| [24, 32].contains(w));
    let demo = json!({
        "dimension_before": code.dimension(),
        "dimension_after": sub.dimension(),
        "weights_before": before.nonzero_weights(),
        "weights_after": after.nonzero_weights(),
    });
    (demo, ok)
}

/// Replays the case analysis showing that no 13-dimensional code in `F^66`
/// has all weights in `{24, 32, 40, 56}`.
pub fn verify_main_bound() -> ProofReport {
    let d: u64 = 13;
    let w: u64 = 40;
    let three = verify_three_weight_bound();
    let remark66 = verify_remark_a56(MAIN_AMBIENT);
    let mut steps = Vec::new();

    steps.push(ProofStep::new(
        "weight-40-present",
        StepKind::CitedLemma,
        format!("{THREE_WEIGHT_BOUND} < {d}, so a 13-dimensional V has a word w of weight 40"),
        ANCHOR_THREE,
        three.overall && THREE_WEIGHT_BOUND < d,
        three.citation(),
    ));

    let sums: Vec<u64> = pairs(&MAIN_WEIGHTS).map(|(a, b)| a + b).collect();
    let min_sum = *sums.iter().min().expect("nonempty");
    steps.push(ProofStep::new(
        "projection-dimension",
        StepKind::Arithmetic,
        format!(
            "two disjoint nonzero words have total weight >= {min_sum} > {w}, so dim pi_w(V) = {}",
            d - 1
        ),
        ANCHOR_PROJECTION,
        min_sum > w && !sums.contains(&w),
        json!({ "min_disjoint_sum": min_sum, "w": w, "projection_dimension": d - 1 }),
    ));

    // Every (|v|, |v+w|) with v ∉ {0, w}, and the two trivial pairs.
    let projected: Vec<(u64, u64, u64)> = pairs(&MAIN_WEIGHTS)
        .chain([(0, w), (w, 0)])
        .map(|(a, b)| (a, b, projected_weight(a, b, w).expect("even sums")))
        .collect();
    let all_div4 = projected.iter().all(|&(_, _, p)| p % 4 == 0);
    let mut values: Vec<u64> = projected.iter().map(|t| t.2).collect();
    values.sort_unstable();
    values.dedup();
    steps.push(ProofStep::new(
        "projection-doubly-even",
        StepKind::Arithmetic,
        "every projected weight (|v| + |v+w| - 40)/2 over the 16 weight pairs is divisible by 4",
        ANCHOR_MAIN,
        all_div4 && projected.len() == 18,
        json!({
            "pairs": projected.iter().map(|&(a, b, p)| json!([a, b, p])).collect::<Vec<_>>(),
            "values": values,
        }),
    ));

    let samples = [
        ("extended_hamming_8_4", fixtures::extended_hamming_8_4()),
        ("extended_golay", fixtures::extended_golay()),
    ];
    let iso_ok = samples.iter().all(|(_, c)| {
        let p = c.predicate_profile();
        p.is_doubly_even && p.is_isotropic
    });
    steps.push(ProofStep::new(
        "projection-isotropic",
        StepKind::CitedLemma,
        "a doubly even code is isotropic, so pi_w(V) is isotropic",
        ANCHOR_ISOTROPIC,
        iso_ok,
        json!({
            "rule": "|x+y| = |x| + |y| - 2|x*y| with all weights divisible by 4 makes |x*y| even",
            "checked_on": samples.iter().map(|s| s.0).collect::<Vec<_>>(),
        }),
    ));

    let candidates: Vec<u64> = (w..=MAIN_AMBIENT)
        .filter(|n| 2 * (d - 1) <= n - w)
        .collect();
    steps.push(ProofStep::new(
        "length-range",
        StepKind::Arithmetic,
        "an isotropic 12-dimensional space needs 2·12 <= n - 40, so n is 64, 65 or 66",
        ANCHOR_MAIN,
        candidates == [64, 65, 66],
        json!({ "min_length": w + 2 * (d - 1), "candidates": candidates }),
    ));

    // Case n = 64.
    let len64 = 64 - w;
    steps.push(ProofStep::new(
        "n64.self-dual",
        StepKind::Arithmetic,
        "2·12 = 24 = 64 - 40, so pi_w(V) is self-dual and contains the all-ones word",
        ANCHOR_MAIN,
        2 * (d - 1) == len64 && values.iter().all(|p| p % 2 == 0),
        json!({ "dimension": d - 1, "projected_length": len64, "all_ones_weight": len64 }),
    ));

    let small_max = projected
        .iter()
        .filter(|&&(a, b, _)| a <= w && b <= w)
        .map(|t| t.2)
        .max()
        .expect("nonempty");
    steps.push(ProofStep::new(
        "n64.small-projections",
        StepKind::Arithmetic,
        format!("if |v|, |v+w| <= 40 then |pi_w(v)| <= {small_max} < 24"),
        ANCHOR_MAIN,
        small_max < len64,
        json!({ "max_projected_weight": small_max, "all_ones_weight": len64 }),
    ));

    let sources: Vec<(u64, u64)> = projected
        .iter()
        .filter(|t| t.2 == 24)
        .map(|&(a, b, _)| (a, b))
        .collect();
    let sources_ok = !sources.is_empty() && sources.iter().all(|&(a, b)| (a == 56) != (b == 56));
    steps.push(ProofStep::new(
        "n64.weight-56-source",
        StepKind::Arithmetic,
        "a projected weight of 24 needs exactly one of v, v+w of weight 56, so a_56 >= 1",
        ANCHOR_MAIN,
        sources_ok,
        json!({ "pairs_projecting_to_24": sources.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>() }),
    ));

    steps.push(ProofStep::new(
        "n64.unique-weight-56",
        StepKind::CitedLemma,
        "a_56 <= 1 in F^66, so V has exactly one word v of weight 56",
        ANCHOR_REMARK,
        remark66.passed(),
        json!({ "cited": remark66.id, "status": remark66.status }),
    ));

    let outside = 64 - 56;
    let golay = fixtures::extended_golay();
    let mut at0 = vec![false; 24];
    at0[0] = true;
    let hyper = vanishing_subcode(&golay, &at0);
    let hyper_ok = golay.dimension() - hyper.dimension() == 1;
    steps.push(ProofStep::new(
        "n64.subcode",
        StepKind::Structural,
        format!(
            "the words vanishing at one of the {outside} coordinates outside Supp(v) form V'' of \
             dimension 12 with weights in {{24, 32, 56}}; 12 > {THREE_WEIGHT_BOUND}"
        ),
        ANCHOR_MAIN,
        outside > 0 && hyper_ok && three.overall && d - 1 > THREE_WEIGHT_BOUND,
        json!({
            "coordinates_outside_support": outside,
            "codimension": 1,
            "dimension": d - 1,
            "three_weight_bound": THREE_WEIGHT_BOUND,
            "operation": "vanishing_subcode",
            "demonstration": { "code": "extended_golay", "dimension_before": golay.dimension(), "dimension_after": hyper.dimension() },
        }),
    ));

    // Cases n = 65 and n = 66 go through the four moment identities.
    for (n, expected, min_a2) in [
        (
            65u64,
            AffineForm::new(
                rational_frac(-5, 2),
                rational_frac(1, 2),
                rational_frac(-1, 2),
            ),
            5i64,
        ),
        (
            66u64,
            AffineForm::new(rational_frac(-13, 2), rational(1), rational_frac(-1, 2)),
            7i64,
        ),
    ] {
        let sol = solve_weight_counts(n, d, &MAIN_WEIGHTS);
        let form = sol.expression(56).cloned().unwrap_or_else(AffineForm::zero);
        let (c0, c2, c3) = form.coefficients();
        steps.push(ProofStep::new(
            format!("n{n}.a56-form"),
            StepKind::Arithmetic,
            format!("solving the moment identities at (n, d) = ({n}, 13) gives a_56 = {form}"),
            ANCHOR_MAIN,
            sol.consistent && form == expected,
            json!({
                "n": n,
                "d": d,
                "weights": MAIN_WEIGHTS,
                "coefficients": [fmt_rational(c0), fmt_rational(c2), fmt_rational(c3)],
            }),
        ));

        // a_56 ≥ 0 with a_3^* ≥ 0 and a negative a_3^* coefficient gives
        // a_2^* ≥ −c0 / c2.
        let lower = if c2.is_positive() {
            -c0 / c2
        } else {
            BigRational::zero()
        };
        let min_int = lower.ceil();
        steps.push(ProofStep::new(
            format!("n{n}.dual-weight-two"),
            StepKind::Arithmetic,
            format!(
                "a_56 >= 0 and a_3^* >= 0 force a_2^* >= {}",
                fmt_rational(&min_int)
            ),
            ANCHOR_MAIN,
            c2.is_positive() && c3.is_negative() && min_int == rational(min_a2),
            json!({
                "a2_star_lower_bound": fmt_rational(&lower),
                "a2_star_min": fmt_rational(&min_int),
            }),
        ));

        let len = n - w;
        if n == 65 {
            steps.push(ProofStep::new(
                "n65.no-isotropic-13",
                StepKind::Arithmetic,
                format!("2·13 = 26 > {len}, so no weight-2 dual word z of V lies outside Supp(w)"),
                ANCHOR_MAIN,
                2 * d > len,
                json!({ "projected_length": len, "twice_dimension": 2 * d }),
            ));
            let (demo, demo_ok) = shorten_demo(&[0]);
            steps.push(ProofStep::new(
                "n65.shorten",
                StepKind::Structural,
                format!(
                    "every weight-40 word meets Supp(z); shortening on Supp(z) leaves \
                     dim >= 12 > {THREE_WEIGHT_BOUND} with weights in {{24, 32, 56}}"
                ),
                ANCHOR_SHORTEN,
                demo_ok && three.overall && d - 1 > THREE_WEIGHT_BOUND,
                json!({
                    "shortened_coordinates": 2,
                    "codimension_at_most": 1,
                    "dimension_at_least": d - 1,
                    "three_weight_bound": THREE_WEIGHT_BOUND,
                    "operation": "shorten",
                    "demonstration": demo,
                }),
            ));
        } else {
            steps.push(ProofStep::new(
                "n66.self-dual-span",
                StepKind::Arithmetic,
                "2·13 = 26 = 66 - 40, so Span(pi_w(V), z') is self-dual and contains the all-ones word",
                ANCHOR_MAIN,
                2 * d == len,
                json!({ "projected_length": len, "twice_dimension": 2 * d }),
            ));
            let complement = len - 2;
            steps.push(ProofStep::new(
                "n66.complement-weight",
                StepKind::Arithmetic,
                format!("|1 + z'| = 26 - 2 = {complement} when Supp(z') lies in Supp(1)"),
                ANCHOR_MAIN,
                complement == 24,
                json!({ "all_ones_weight": len, "z_weight": 2, "sum_weight": complement }),
            ));
            steps.push(ProofStep::new(
                "n66.projected-dual-bound",
                StepKind::Arithmetic,
                "a_2^*(pi_w(V)) <= a_24(pi_w(V)) <= a_56(V) <= 1",
                ANCHOR_MAIN,
                sources_ok && remark66.passed(),
                json!({
                    "pairs_projecting_to_24": sources.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
                    "a56_bound": 1,
                }),
            ));
            let (demo, demo_ok) = shorten_demo(&[0, 1]);
            steps.push(ProofStep::new(
                "n66.shorten",
                StepKind::Structural,
                format!(
                    "two weight-2 dual words give |Z| <= 4; shortening on Z leaves dim >= 11 > \
                     {THREE_WEIGHT_BOUND} with weights in {{24, 32, 56}}"
                ),
                ANCHOR_SHORTEN,
                demo_ok && min_a2 >= 2 && three.overall && d - 2 > THREE_WEIGHT_BOUND,
                json!({
                    "shortened_coordinates_at_most": 4,
                    "codimension_at_most": 2,
                    "dimension_at_least": d - 2,
                    "three_weight_bound": THREE_WEIGHT_BOUND,
                    "operation": "shorten",
                    "demonstration": demo,
                }),
            ));
        }
    }

    let all_prior = steps.iter().all(ProofStep::passed);
    steps.push(ProofStep::new(
        "conclusion",
        StepKind::CitedLemma,
        "each of n = 64, 65, 66 is contradictory, so dim V <= 12",
        ANCHOR_MAIN,
        all_prior,
        json!({ "cases": [64, 65, 66], "bound": d - 1 }),
    ));

    ProofReport::new("weights {24, 32, 40, 56} in F^66: dim <= 12", steps)
}

/// Ordered pairs over `ws`.
fn pairs(ws: &[u64]) -> impl Iterator<Item = (u64, u64)> + '_ {
    ws.iter()
        .flat_map(move |&a| ws.iter().map(move |&b| (a, b)))
}

/// Shortening the Golay code with the given coordinates duplicated: each
/// copy is a weight-2 dual word, and shortening on all copies costs at most
/// one dimension per copy.
fn shorten_demo(duplicated: &[usize]) -> (Value, bool) {
    let golay = fixtures::extended_golay();
    let n = 24 + duplicated.len();
    let rows = golay
        .generator()
        .rows()
        .iter()
        .map(|r| {
            let mut v = Gf2Vector::zeros(n);
            for i in r.support() {
                v.set(i, true);
            }
            for (k, &c) in duplicated.iter().enumerate() {
                v.set(24 + k, r.get(c));
            }
            v
        })
        .collect();
    let code = LinearCode::from_vectors(n, rows).expect("same length");
    let z: Vec<usize> = duplicated
        .iter()
        .enumerate()
        .flat_map(|(k, &c)| [c, 24 + k])
        .collect();
    let short = shorten(&code, &z).expect("coordinates in range");
    let ok = code.dimension() - short.dimension() <= duplicated.len();
    let demo = json!({
        "code": "extended_golay with duplicated columns",
        "duplicated": duplicated,
        "shortened_on": z,
        "dimension_before": code.dimension(),
        "dimension_after": short.dimension(),
    });
    (demo, ok)
}
