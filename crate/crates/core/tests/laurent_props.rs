use affine_hecke::laurent::{Laurent, Matrix};
use num_bigint::BigInt;
use proptest::prelude::*;

type P = Laurent<BigInt>;

fn arb_poly() -> impl Strategy<Value = P> {
    (-4i32..=4, prop::collection::vec(-5i64..=5, 0..5)).prop_map(|(low, cs)| {
        P::from_terms(cs.into_iter().enumerate().map(|(k, c)| (low + k as i32, BigInt::from(c))))
    })
}

fn arb_matrix() -> impl Strategy<Value = Matrix<BigInt>> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(arb_sparse_poly(), c), r)
            .prop_map(Matrix::from_rows)
    })
}

// Sparse entries make rank-deficient matrices common.
fn arb_sparse_poly() -> impl Strategy<Value = P> {
    prop_oneof![3 => Just(P::zero()), 1 => Just(P::one()), 2 => arb_poly()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &P::one(), a.clone());
        if !b.is_zero() {
            prop_assert_eq!((&a * &b).exact_div(&b), Some(a.clone()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn rank_invariant_under_row_operations(m in arb_matrix(), k in -3i32..=3, seed in any::<u64>()) {
        let r = m.rank();
        prop_assert!(r <= m.rows().min(m.cols()));
        let a = (seed as usize) % m.rows();
        let b = (seed as usize / 7) % m.rows();
        let mut swapped = m.clone();
        swapped.swap_rows(a, b);
        prop_assert_eq!(swapped.rank(), r);
        let mut scaled = m.clone();
        scaled.scale_row(a, &P::q_pow(k));
        prop_assert_eq!(scaled.rank(), r);
        let mut negated = m.clone();
        negated.scale_row(b, &P::from_int(-1));
        prop_assert_eq!(negated.rank(), r);
    }

    #[test]
    fn evaluation_never_increases_rank(m in arb_matrix(), v in prop_oneof![-9i64..=-1, 1i64..=9], seed in any::<u64>()) {
        let r = m.rank();
        prop_assert!(m.rank_at(v) <= r);
        let cert = m.rank_certified(seed);
        prop_assert_eq!(cert.rank, r);
        prop_assert!(cert.certified);
        for (&p, &er) in cert.points.iter().zip(&cert.evaluated_ranks) {
            prop_assert_eq!(er, r, "point {}", p);
        }
    }

    #[test]
    fn transposition_preserves_rank(m in arb_matrix()) {
        let rows = m.to_rows();
        let t: Vec<Vec<P>> = (0..m.cols()).map(|c| rows.iter().map(|r| r[c].clone()).collect()).collect();
        prop_assert_eq!(Matrix::from_rows(t).rank(), m.rank());
    }

    #[test]
    fn json_round_trip(a in arb_poly()) {
        prop_assert_eq!(P::from_json(&a.to_json()).unwrap(), a.clone());
    }
}
