use affine_hecke::charsum::{full_sum, gauss_report, inverse_sum, unit_sum, Cyclotomic};
use affine_hecke::finitew::{FiniteWeylGroup, WeylType};
use num_bigint::BigInt;
use proptest::prelude::*;

fn groups() -> Vec<FiniteWeylGroup> {
    let mut out = Vec::new();
    for m in 1..=4 {
        out.push(FiniteWeylGroup::new(WeylType::A, m).unwrap());
    }
    for m in 2..=4 {
        out.push(FiniteWeylGroup::new(WeylType::B, m).unwrap());
    }
    out.push(FiniteWeylGroup::new(WeylType::D, 4).unwrap());
    out
}

#[test]
fn invariants_are_perpendicular_to_sign() {
    for w in groups() {
        let sgn = w.sign();
        let delta = w.delta_identity();
        assert_eq!(delta.pair(&sgn), 1);
        for a in 0..w.generators().len() {
            let inv = w.parabolic_invariants(a).unwrap();
            assert_eq!(inv.len(), w.order() / 2);
            assert!(inv.iter().all(|f| f.pair(&sgn) == 0), "{w} α={a}");
        }
        let r = w.delta_membership();
        assert!(r.not_in_span && r.sign_certificate, "{r:?}");
        assert!(r.span_rank < w.order());
        assert_eq!(r.rank_with_delta, r.span_rank + 1);
    }
}

#[test]
fn groups_are_closed() {
    for w in groups().into_iter().filter(|w| w.order() <= 48) {
        for g in w.elements() {
            for h in w.elements().iter().step_by(3) {
                assert!(w.index_of(&g.compose(h)).is_some());
            }
            assert!(w.index_of(&g.inverse()).is_some());
        }
    }
}

#[test]
fn sums_over_small_primes() {
    for p in [3u64, 5, 7, 11, 13] {
        for a in 1..p as i64 {
            let r = gauss_report::<BigInt>(p, a).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }
}

proptest! {
    #[test]
    fn two_paths_agree(idx in 0usize..8, a in 1i64..1000) {
        let p = [3u64, 5, 7, 11, 13, 17, 19, 23][idx];
        prop_assume!(a % p as i64 != 0);
        let inv = inverse_sum::<i64>(p, a).unwrap();
        prop_assert_eq!(&inv, &unit_sum::<i64>(p, a).unwrap());
        prop_assert_eq!(inv, Cyclotomic::from_int(p, -1));
        prop_assert!(full_sum::<i64>(p, a).unwrap().is_zero());
    }

    #[test]
    fn cyclotomic_ring_laws(e in prop::collection::vec(0i64..30, 3), c in prop::collection::vec(-4i64..=4, 3)) {
        let p = 7;
        let x: Vec<Cyclotomic<i64>> = e.iter().zip(&c)
            .map(|(&k, &v)| &Cyclotomic::zeta_pow(p, k) * &Cyclotomic::from_int(p, v))
            .collect();
        prop_assert_eq!(&(&x[0] * &x[1]) * &x[2], &x[0] * &(&x[1] * &x[2]));
        prop_assert_eq!(&x[0] * &(&x[1] + &x[2]), &(&x[0] * &x[1]) + &(&x[0] * &x[2]));
        prop_assert_eq!(Cyclotomic::<i64>::zeta_pow(p, e[0] + p as i64), Cyclotomic::zeta_pow(p, e[0]));
    }
}
