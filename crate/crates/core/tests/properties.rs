use proptest::prelude::*;
use proptest::sample::subsequence;

use gf2codes::fixtures;
use gf2codes::prover::min_union_length;
use gf2codes::search::{max_dimension_exhaustive, DEFAULT_NODE_CAP};
use gf2codes::{Gf2Matrix, Gf2Vector, LinearCode};

fn vector(len: usize) -> impl Strategy<Value = Gf2Vector> {
    proptest::collection::vec(any::<bool>(), len).prop_map(|b| Gf2Vector::from_bools(&b))
}

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Gf2Matrix> {
    (0..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        proptest::collection::vec(vector(c), r)
            .prop_map(move |rows| Gf2Matrix::new(rows, c).unwrap())
    })
}

fn code(max_dim: usize, max_len: usize) -> impl Strategy<Value = LinearCode> {
    matrix(max_dim, max_len).prop_map(|m| LinearCode::from_rows(&m))
}

fn permute(code: &LinearCode, perm: &[usize]) -> LinearCode {
    let n = code.ambient_length();
    let rows = code
        .generator()
        .rows()
        .iter()
        .map(|r| Gf2Vector::from_support(n, r.support().into_iter().map(|i| perm[i])).unwrap())
        .collect();
    LinearCode::from_vectors(n, rows).unwrap()
}

proptest! {
    #[test]
    fn sum_weight_formula((u, v) in (1usize..200).prop_flat_map(|n| (vector(n), vector(n)))) {
        let s = u.add(&v).unwrap();
        prop_assert_eq!(s.weight(), u.weight() + v.weight() - 2 * u.intersection_weight(&v).unwrap());
    }

    #[test]
    fn rref_is_idempotent(m in matrix(12, 70)) {
        let r = m.rref();
        let again = r.matrix.rref();
        prop_assert_eq!(&again.matrix, &r.matrix);
        prop_assert_eq!(again.rank, r.rank);
        prop_assert!(r.rank <= m.n_rows().min(m.n_cols()));
    }

    #[test]
    fn nullspace_complements_rank(m in matrix(10, 20)) {
        let k = m.nullspace_basis();
        prop_assert_eq!(k.n_rows() + m.rank(), m.n_cols());
        prop_assert_eq!(k.rank(), k.n_rows());
        prop_assert!(m.mul_transpose(&k).unwrap().is_zero());
    }

    #[test]
    fn dual_is_an_involution(c in code(8, 16)) {
        let d = c.dual();
        prop_assert_eq!(c.dimension() + d.dimension(), c.ambient_length());
        prop_assert_eq!(d.dual(), c);
    }

    #[test]
    fn spanning_iff_no_dual_weight_one(c in code(8, 14)) {
        let dual = c.weight_distribution().unwrap().macwilliams_transform(c.dimension()).unwrap();
        prop_assert_eq!(c.is_spanning(), dual.count(1) == 0u32.into());
        prop_assert_eq!(c.predicate_profile().is_spanning, c.is_spanning());
    }

    #[test]
    fn doubly_even_implies_isotropic(
        picks in subsequence((0..12usize).collect::<Vec<_>>(), 0..=12),
        perm in Just((0..24usize).collect::<Vec<_>>()).prop_shuffle(),
        extra in vector(24),
    ) {
        // Subcodes of the Golay code are doubly even; adding an arbitrary word
        // usually is not.
        let golay = fixtures::extended_golay();
        let rows: Vec<Gf2Vector> = picks.iter().map(|&i| golay.generator().rows()[i].clone()).collect();
        let sub = permute(&LinearCode::from_vectors(24, rows.clone()).unwrap(), &perm);
        let p = sub.predicate_profile();
        prop_assert!(p.is_doubly_even && p.is_isotropic && p.is_even);

        let mut more = rows;
        more.push(extra);
        let c = LinearCode::from_vectors(24, more).unwrap();
        let p = c.predicate_profile();
        if p.is_doubly_even {
            prop_assert!(p.is_isotropic && p.is_even);
        }
    }

    #[test]
    fn search_dominates_every_code_and_ignores_column_order(
        c in code(4, 7),
        perm in Just((0..7usize).collect::<Vec<_>>()).prop_shuffle(),
    ) {
        let n = c.ambient_length();
        let perm: Vec<usize> = perm.into_iter().filter(|&i| i < n).collect();
        let ws = c.weight_distribution().unwrap().nonzero_weights();
        let r = max_dimension_exhaustive(n, &ws, DEFAULT_NODE_CAP).unwrap();
        prop_assert!(r.max_dimension >= c.dimension());

        let witness = permute(&r.witness_code(), &perm);
        let pw = witness.weight_distribution().unwrap().nonzero_weights();
        prop_assert!(pw.iter().all(|w| ws.contains(w)));
        prop_assert_eq!(witness.dimension(), r.max_dimension);
        let again = max_dimension_exhaustive(n, &ws, DEFAULT_NODE_CAP).unwrap();
        prop_assert_eq!(again, r);
    }

    #[test]
    fn at_most_one_weight_56_word_below_68(
        first in subsequence((0..67usize).collect::<Vec<_>>(), 56),
        others in proptest::collection::vec(vector(67), 0..3),
    ) {
        let mut rows = vec![Gf2Vector::from_support(67, first).unwrap()];
        rows.extend(others);
        let c = LinearCode::from_vectors(67, rows).unwrap();
        let dist = c.weight_distribution().unwrap();
        prop_assume!(dist.nonzero_weights().iter().all(|&w| w >= 24));
        prop_assert!(dist.count(56) <= 1u32.into());
    }
}

/// Masks of `k`-subsets of `0..n`, by Gosper's hack.
fn subsets_of_size(n: u32, k: u32) -> impl Iterator<Item = u32> {
    let mut next = if k == 0 { None } else { Some((1u32 << k) - 1) };
    std::iter::from_fn(move || {
        let cur = next?;
        if cur >> n != 0 {
            return None;
        }
        let c = cur & cur.wrapping_neg();
        let r = cur + c;
        next = Some((((r ^ cur) >> 2) / c) | r);
        Some(cur)
    })
}

#[test]
fn min_union_matches_brute_force() {
    for w1 in 1..=10u32 {
        for w2 in 1..=10u32 {
            let ambient = (w1 + w2).min(20);
            let v = (1u32 << w1) - 1;
            // Achievable (sum weight, union) pairs over every w of weight w2.
            let pairs: Vec<(u32, u32)> = subsets_of_size(ambient, w2)
                .filter(|&w| w != v)
                .map(|w| ((v ^ w).count_ones(), (v | w).count_ones()))
                .collect();
            for m in 1..=w1 + w2 {
                let brute = pairs.iter().filter(|p| p.0 >= m).map(|p| p.1).min();
                let got = min_union_length(w1 as u64, w2 as u64, m as u64);
                if (w1 + w2 - m) % 2 == 1 {
                    assert!(got.is_err(), "({w1}, {w2}, {m})");
                    continue;
                }
                assert_eq!(got.ok(), brute.map(u64::from), "({w1}, {w2}, {m})");
            }
        }
    }
}
