mod common;

use affine_hecke::weyl::{ball, d_ball, DExtElement, ExtAffineWeylElement, Word};
use common::oracle::Rewriter;
use common::{s, word};
use proptest::prelude::*;
use rustc_hash::FxHashSet;

#[test]
fn reduced_word_round_trip() {
    for n in 1..=3 {
        for g in ball(n, 6) {
            let w = g.reduced_word();
            assert_eq!(w.len(), g.length());
            assert_eq!(w.evaluate(n).unwrap(), g);
        }
    }
}

#[test]
fn ball_sizes_match_oracle_enumeration() {
    for n in 1..=2 {
        let mut rw = Rewriter::new(n);
        for l in 0..=5 {
            let mut words = FxHashSet::default();
            let mut frontier = vec![Vec::<usize>::new()];
            words.insert(Vec::new());
            for _ in 0..l {
                let mut next = Vec::new();
                for w in &frontier {
                    for i in 0..=n {
                        let mut v = w.clone();
                        v.push(i);
                        let nf = rw.normal_form(&v);
                        if words.insert(nf.clone()) {
                            next.push(nf);
                        }
                    }
                }
                frontier = next;
            }
            assert_eq!(ball(n, l).len(), words.len(), "n={n} l={l}");
        }
    }
}

#[test]
fn lengths_and_descents_match_oracle() {
    for n in 1..=2 {
        let mut rw = Rewriter::new(n);
        for g in ball(n, 5) {
            let w = g.reduced_word();
            assert_eq!(rw.length(w.letters()), g.length());
            for i in 0..=n {
                assert_eq!(rw.is_left_descent(w.letters(), i), g.is_left_descent(i), "{g} s_{i}");
            }
        }
    }
}

#[test]
fn weighted_length_is_independent_of_reduced_word() {
    for n in 1..=2 {
        let mut rw = Rewriter::new(n);
        for g in ball(n, 5) {
            let words = rw.reduced_words(g.reduced_word().letters());
            for v in &words {
                assert_eq!(v.iter().filter(|&&i| i != 0).count(), g.weighted_length());
                assert_eq!(Word::new(v.clone()).evaluate(n).unwrap(), g);
            }
        }
    }
}

#[test]
fn exchange_condition() {
    for n in 1..=3 {
        for g in ball(n, 5) {
            for i in 0..=n {
                let l = g.length();
                let h = &s(i, n) * &g;
                if g.is_left_descent(i) {
                    assert_eq!(h.length() + 1, l);
                } else {
                    assert_eq!(h.length(), l + 1);
                }
                let r = &g * &s(i, n);
                assert_eq!(r.length().abs_diff(l), 1);
                assert_eq!(g.is_right_descent(i), r.length() < l);
            }
        }
    }
}

fn order(g: &ExtAffineWeylElement, max: usize) -> Option<usize> {
    let mut acc = g.clone();
    for k in 1..=max {
        if acc.is_identity() {
            return Some(k);
        }
        acc = &acc * g;
    }
    None
}

#[test]
fn braid_orders() {
    for n in 2..=4 {
        for i in 0..=n {
            assert_eq!(order(&s(i, n), 10), Some(2));
            for j in i + 1..=n {
                let expected = if j - i >= 2 {
                    2
                } else if i == 0 || j == n {
                    4
                } else {
                    3
                };
                assert_eq!(order(&(&s(i, n) * &s(j, n)), 10), Some(expected), "n={n} ({i},{j})");
            }
        }
    }
    let p = &s(0, 1) * &s(1, 1);
    assert_eq!(order(&p, 8), None);
}

#[test]
fn s0_prime_identity() {
    for n in 2..=4 {
        let s0p = word(&[0, 1, 0], n);
        assert_eq!(s0p.length(), 3);
        assert_eq!(s0p.weighted_length(), 1);
        assert_eq!(s0p.perm().images(), {
            let mut v: Vec<i32> = (1..=n as i32).collect();
            v[0] = -2;
            v[1] = -1;
            v
        });
    }
}

#[test]
fn affine_parity_matches_s0_count() {
    for n in 1..=2 {
        let b = ball(n, 6);
        for g in &b {
            let zeros = g.reduced_word().letters().iter().filter(|&&i| i == 0).count();
            assert_eq!(g.in_affine_subgroup(), zeros % 2 == 0, "{g}");
        }
        for g in b.iter().step_by(7) {
            for h in b.iter().step_by(5) {
                assert_eq!((g * h).in_affine_subgroup(), g.in_affine_subgroup() == h.in_affine_subgroup());
            }
        }
    }
}

#[test]
fn folding_is_an_injective_homomorphism() {
    let n = 2;
    let fixed: Vec<DExtElement> = d_ball(n, 4).into_iter().filter(|g| g.is_sigma_fixed()).collect();
    assert!(fixed.len() > 1);
    let mut images = FxHashSet::default();
    for g in &fixed {
        assert!(images.insert(g.fold().unwrap()), "fold not injective at {g:?}");
    }
    for g in &fixed {
        for h in &fixed {
            let gh = g.compose(h).unwrap();
            assert_eq!(gh.fold().unwrap(), &g.fold().unwrap() * &h.fold().unwrap());
        }
    }
    for i in 0..=n {
        assert!(images.contains(&s(i, n)), "s_{i} not hit");
    }
    let sn = DExtElement::generator(n, n)
        .unwrap()
        .compose(&DExtElement::generator(n + 1, n).unwrap())
        .unwrap();
    assert!(sn.is_sigma_fixed());
    assert_eq!(sn.fold().unwrap(), s(n, n));
}

#[test]
fn text_round_trip_on_ball() {
    for g in ball(2, 4) {
        let parsed: ExtAffineWeylElement = g.to_string().parse().unwrap();
        assert_eq!(parsed, g);
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(serde_json::from_str::<ExtAffineWeylElement>(&json).unwrap(), g);
    }
}

fn arb_word(n: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..=n, 0..12)
}

proptest! {
    #[test]
    fn group_axioms(n in 1usize..=4, a in arb_word(4), b in arb_word(4), c in arb_word(4)) {
        let clip = |v: &[usize]| v.iter().map(|&i| i.min(n)).collect::<Vec<_>>();
        let (g, h, k) = (word(&clip(&a), n), word(&clip(&b), n), word(&clip(&c), n));
        prop_assert_eq!(&(&g * &h) * &k, &g * &(&h * &k));
        prop_assert!((&g * &g.inverse()).is_identity());
        prop_assert_eq!(g.inverse().length(), g.length());
        prop_assert!((&g * &h).length() <= g.length() + h.length());
    }

    #[test]
    fn action_is_compatible_with_composition(n in 1usize..=3, a in arb_word(3), b in arb_word(3)) {
        let clip = |v: &[usize]| v.iter().map(|&i| i.min(n)).collect::<Vec<_>>();
        let (g, h) = (word(&clip(&a), n), word(&clip(&b), n));
        let x = affine_hecke::weyl::sample_point(n);
        prop_assert_eq!((&g * &h).act(&x), g.act(&h.act(&x)));
    }
}
