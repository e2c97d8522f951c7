//! Acceptance criteria 1-9, one PASS/FAIL line each.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gf2codes::exact::{pow2_rational, rational, rational_frac};
use gf2codes::moments::{moment_identities_check, solve_weight_counts, AffineForm};
use gf2codes::prover::{
    min_union_length, remark_sharpness_code, two_weight_row, verify_main_bound, verify_remark_a56,
};
use gf2codes::search::{cross_validate, max_dimension_exhaustive, DEFAULT_NODE_CAP};
use gf2codes::text::parse_matrix;
use gf2codes::transforms::{
    has_disjoint_decomposition, project_with_kernel, project_word, projected_weight,
};
use gf2codes::{Error, Gf2Matrix, Gf2Vector, LinearCode, DEFAULT_ENUMERATION_CAP};

const MACWILLIAMS_CODES: usize = 200;
const MACWILLIAMS_LIMIT: Duration = Duration::from_secs(30);
const MOMENT_CODES: usize = 100;
const PROJECTION_CODES: usize = 50;
const TWO_WEIGHT_LIMIT: Duration = Duration::from_secs(1);
const MAIN_BOUND_LIMIT: Duration = Duration::from_secs(1);
const CROSS_VALIDATION_LIMIT: Duration = Duration::from_secs(120);
const SEED: u64 = 0x5eed_c0de;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fixture(name: &str) -> String {
    format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn random_code(rng: &mut ChaCha8Rng, n: usize, k: usize) -> LinearCode {
    let rows = (0..k)
        .map(|_| Gf2Vector::from_bools(&(0..n).map(|_| rng.gen::<bool>()).collect::<Vec<_>>()))
        .collect();
    LinearCode::from_rows(&Gf2Matrix::new(rows, n).expect("uniform rows"))
}

fn macwilliams_exactness() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for i in 0..MACWILLIAMS_CODES {
        let n = rng.gen_range(1..=18);
        let k = rng.gen_range(0..=n.min(10));
        let code = random_code(&mut rng, n, k);
        let d = code.dimension();
        let we = code.weight_distribution().map_err(|e| e.to_string())?;
        let dual = code.dual();
        let transformed = we.macwilliams_transform(d).map_err(|e| e.to_string())?;
        let enumerated = dual.weight_distribution().map_err(|e| e.to_string())?;
        ensure(transformed == enumerated, || {
            format!("code {i}: transform differs from dual")
        })?;
        let back = transformed
            .macwilliams_transform(dual.dimension())
            .map_err(|e| e.to_string())?;
        ensure(back == we, || {
            format!("code {i}: transform is not an involution")
        })?;
    }
    let t = start.elapsed();
    ensure(t < MACWILLIAMS_LIMIT, || format!("took {t:?}"))?;
    Ok(format!("{MACWILLIAMS_CODES} codes in {t:.2?}"))
}

fn golay_fixture() -> Check {
    let text = std::fs::read_to_string(fixture("golay24.txt")).map_err(|e| e.to_string())?;
    let code = LinearCode::from_rows(&parse_matrix(&text).map_err(|e| e.to_string())?);
    let we = code.weight_distribution().map_err(|e| e.to_string())?;
    let support: Vec<(usize, BigUint)> = we.support();
    let expected: Vec<(usize, BigUint)> = [(0, 1u32), (8, 759), (12, 2576), (16, 759), (24, 1)]
        .into_iter()
        .map(|(w, c)| (w, c.into()))
        .collect();
    ensure(support == expected, || format!("distribution {support:?}"))?;
    let p = code.predicate_profile();
    ensure(
        p.is_even && p.is_doubly_even && p.is_isotropic && p.is_self_dual && p.is_spanning,
        || format!("{p:?}"),
    )?;
    let ones = code
        .contains(&Gf2Vector::ones(24))
        .map_err(|e| e.to_string())?;
    ensure(ones, || "all-ones word missing".into())?;
    Ok("(1,759,2576,759,1), profile all true".into())
}

fn moment_identities() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 3);
    let mut checked = 0;
    while checked < MOMENT_CODES {
        let n = rng.gen_range(1..=16);
        let k = rng.gen_range(1..=n.min(10));
        let code = random_code(&mut rng, n, k).spanning_restriction();
        if code.ambient_length() == 0 {
            continue;
        }
        let r =
            moment_identities_check(&code, DEFAULT_ENUMERATION_CAP).map_err(|e| e.to_string())?;
        ensure(r.all_hold(), || format!("identities fail: {r:?}"))?;
        checked += 1;
    }
    let partial =
        LinearCode::from_vectors(5, vec![Gf2Vector::parse_bits("11010").unwrap()]).unwrap();
    match moment_identities_check(&partial, DEFAULT_ENUMERATION_CAP) {
        Err(e @ Error::NotSpanning { zero_coordinate: 2 }) => {
            ensure(e.to_string().contains("spanning"), || e.to_string())?
        }
        other => return Err(format!("non-spanning code not rejected: {other:?}")),
    }
    Ok(format!(
        "{MOMENT_CODES} spanning codes; non-spanning input rejected"
    ))
}

fn closed_forms() -> Check {
    for d in 1..=16u64 {
        for n in 1..=128u64 {
            let s = solve_weight_counts(n, d, &[24, 32]);
            let scale = pow2_rational(d as i64 - 4);
            let a24 = &scale * rational(64 - n as i64) - rational(4);
            let a32 = &scale * rational(n as i64 - 48) + rational(3);
            ensure(s.expression(24) == Some(&AffineForm::constant(a24)), || {
                format!("a_24 at ({n}, {d})")
            })?;
            ensure(s.expression(32) == Some(&AffineForm::constant(a32)), || {
                format!("a_32 at ({n}, {d})")
            })?;
        }
    }
    let w = [24, 32, 40, 56];
    let f65 = AffineForm::new(
        rational_frac(-5, 2),
        rational_frac(1, 2),
        rational_frac(-1, 2),
    );
    let f66 = AffineForm::new(rational_frac(-13, 2), rational(1), rational_frac(-1, 2));
    let s65 = solve_weight_counts(65, 13, &w);
    let s66 = solve_weight_counts(66, 13, &w);
    ensure(s65.expression(56) == Some(&f65), || {
        format!("a_56 at 65: {:?}", s65.expression(56))
    })?;
    ensure(s66.expression(56) == Some(&f66), || {
        format!("a_56 at 66: {:?}", s66.expression(56))
    })?;
    Ok("a_24, a_32 for d <= 16, n <= 128; a_56 at (65,13) and (66,13)".into())
}

fn two_weight_replay() -> Check {
    let start = Instant::now();
    for d in 10..=16u64 {
        for n in 1..=128u64 {
            let r = two_weight_row(n, d);
            ensure(r.contradiction && r.v2_lhs == Some(8), || {
                format!("no contradiction at (n={n}, d={d})")
            })?;
        }
    }
    for n in 1..=128u64 {
        let r = two_weight_row(n, 9);
        ensure(!r.contradiction, || {
            format!("spurious contradiction at (n={n}, d=9)")
        })?;
    }
    let t = start.elapsed();
    ensure(t < TWO_WEIGHT_LIMIT, || format!("took {t:?}"))?;
    Ok(format!(
        "v_2(L) = 8 < d-1 for d in 10..=16; none at d = 9; {t:.2?}"
    ))
}

fn remark() -> Check {
    let u = min_union_length(56, 56, 24).map_err(|e| e.to_string())?;
    ensure(u == 68, || format!("min_union_length = {u}"))?;
    ensure(verify_remark_a56(67).passed(), || "ambient 67 fails".into())?;
    ensure(!verify_remark_a56(68).passed(), || {
        "ambient 68 passes".into()
    })?;
    let c = remark_sharpness_code();
    let we = c.weight_distribution().map_err(|e| e.to_string())?;
    ensure(
        c.ambient_length() == 68 && we.count(56) == 2u32.into(),
        || format!("{:?}", we.support()),
    )?;
    ensure(we.nonzero_weights().iter().all(|&w| w >= 24), || {
        "weight below 24".into()
    })?;
    Ok("union 68; a_56 <= 1 at 67; a_56 = 2 realised in F^68".into())
}

fn main_bound_replay() -> Check {
    let start = Instant::now();
    let r = verify_main_bound();
    let t = start.elapsed();
    ensure(r.overall, || {
        format!(
            "failed steps: {:?}",
            r.failed_steps().map(|s| &s.id).collect::<Vec<_>>()
        )
    })?;
    ensure(r.steps.len() >= 15, || format!("{} steps", r.steps.len()))?;
    ensure(t < MAIN_BOUND_LIMIT, || format!("took {t:?}"))?;

    let data = |id: &str, key: &str| {
        r.step(id)
            .map(|s| s.data[key].clone())
            .ok_or_else(|| format!("missing step {id}"))
    };
    let expect = |id: &str, key: &str, v: serde_json::Value| -> Result<(), String> {
        let got = data(id, key)?;
        ensure(got == v, || format!("{id}.{key} = {got}, expected {v}"))
    };
    use serde_json::json;
    expect(
        "n65.a56-form",
        "coefficients",
        json!(["-5/2", "1/2", "-1/2"]),
    )?;
    expect(
        "n66.a56-form",
        "coefficients",
        json!(["-13/2", "1", "-1/2"]),
    )?;
    expect("n66.dual-weight-two", "a2_star_min", json!("7"))?;
    expect("length-range", "candidates", json!([64, 65, 66]))?;
    expect("projection-dimension", "min_disjoint_sum", json!(48))?;
    expect("n64.small-projections", "max_projected_weight", json!(20))?;
    expect("n66.complement-weight", "sum_weight", json!(24))?;
    let projected = projected_weight(40, 40, 40).map_err(|e| e.to_string())?;
    ensure(projected == 20, || {
        format!("projected_weight(40,40,40) = {projected}")
    })?;

    let o = Command::new(env!("CARGO_BIN_EXE_gf2codes"))
        .args(["--json", "verify", "theorem-a"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(o.status.code() == Some(0), || {
        format!("CLI exit {:?}", o.status.code())
    })?;
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).map_err(|e| e.to_string())?;
    ensure(doc["payload"]["overall"] == json!(true), || {
        "CLI report not passing".into()
    })?;
    Ok(format!("{} steps in {t:.2?}; CLI exit 0", r.steps.len()))
}

fn projection_property() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 8);
    let mut words = 0usize;
    for i in 0..PROJECTION_CODES {
        let n = rng.gen_range(2..=14);
        let k = rng.gen_range(1..=n.min(8));
        let code = random_code(&mut rng, n, k);
        let all = code
            .codewords(DEFAULT_ENUMERATION_CAP)
            .map_err(|e| e.to_string())?;
        for w in all.iter().filter(|w| !w.is_zero()) {
            words += 1;
            for v in &all {
                let direct = project_word(v, w).map_err(|e| e.to_string())?.weight() as u64;
                let vw = v.add(w).map_err(|e| e.to_string())?;
                let formula =
                    projected_weight(v.weight() as u64, vw.weight() as u64, w.weight() as u64)
                        .map_err(|e| e.to_string())?;
                ensure(direct == formula, || {
                    format!("code {i}: |pi_w(v)| = {direct} but formula gives {formula}")
                })?;
            }
            let p = project_with_kernel(&code, w).map_err(|e| e.to_string())?;
            let split = has_disjoint_decomposition(&code, w, DEFAULT_ENUMERATION_CAP)
                .map_err(|e| e.to_string())?;
            let drop_one = p.code.dimension() + 1 == code.dimension();
            ensure(drop_one == !split, || {
                format!(
                    "code {i}: dimension drop {} with split = {split}",
                    p.kernel_dimension
                )
            })?;
        }
    }
    Ok(format!("{PROJECTION_CODES} codes, {words} nonzero words"))
}

fn cross_validation() -> Check {
    let start = Instant::now();
    let rows = cross_validate(10, &[2, 4, 6]).map_err(|e| e.to_string())?;
    let bad: Vec<_> = rows.iter().filter(|r| !r.agrees).collect();
    ensure(bad.is_empty(), || format!("disagreements: {bad:?}"))?;
    for (n, w, dim) in [
        (3usize, vec![2usize], 2usize),
        (8, vec![4, 8], 4),
        (4, vec![3], 1),
    ] {
        let r = max_dimension_exhaustive(n, &w, DEFAULT_NODE_CAP).map_err(|e| e.to_string())?;
        ensure(r.complete && r.max_dimension == dim, || {
            format!("max_dimension({n}, {w:?}) = {}", r.max_dimension)
        })?;
    }
    let t = start.elapsed();
    ensure(t < CROSS_VALIDATION_LIMIT, || format!("took {t:?}"))?;
    Ok(format!(
        "{} cells agree; spot values match; {t:.2?}",
        rows.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("MacWilliams exactness", macwilliams_exactness),
        ("Golay fixture", golay_fixture),
        ("moment identities", moment_identities),
        ("closed-form counts", closed_forms),
        ("two-weight 2-adic replay", two_weight_replay),
        ("a_56 <= 1 remark", remark),
        ("main bound replay", main_bound_replay),
        ("projection property", projection_property),
        ("search cross-validation", cross_validation),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let result =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match result {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({why})", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
