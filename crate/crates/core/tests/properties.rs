use hfroot::gradedroot::{build_root_from_values, compute_hf, d_invariant_direct, grading_shift};
use hfroot::seifert::brieskorn_general;
use hfroot::tau::{delta_ceil, reduce, tau_sequence, truncation_bound};
use hfroot::{brieskorn_seifert, star_plumbing, SeifertInvariants};
use num_integer::Integer;
use num_traits::Signed;
use proptest::prelude::*;

/// Pairwise coprime triples with a small product, so tau stays short.
fn triple() -> impl Strategy<Value = [i64; 3]> {
    (2i64..12, 3i64..20, 5i64..70)
        .prop_filter("pairwise coprime", |&(a, b, c)| {
            a.gcd(&b) == 1 && a.gcd(&c) == 1 && b.gcd(&c) == 1
        })
        .prop_map(|(a, b, c)| [a, b, c])
}

/// Alternating sequences `m0 < M0 > m1 < ... > mt`.
fn alternating() -> impl Strategy<Value = Vec<i64>> {
    (-5i64..5, prop::collection::vec((1i64..6, 1i64..6), 0..12)).prop_map(|(start, steps)| {
        let mut v = vec![start];
        for (up, down) in steps {
            let top = v.last().unwrap() + up;
            v.push(top);
            v.push(top - down);
        }
        v
    })
}

/// Repeatedly cancel the lowest maximum against its higher neighbour
/// minimum (the right one on ties).
fn cancellation_pairs(seq: &[i64]) -> (i64, Vec<(i64, i64)>) {
    let mut s = seq.to_vec();
    let mut pairs = Vec::new();
    while s.len() > 1 {
        let k = (1..s.len()).step_by(2).min_by_key(|&k| (s[k], k)).unwrap();
        let (l, r) = (s[k - 1], s[k + 1]);
        let dead = if l < r {
            k + 1
        } else if r < l {
            k - 1
        } else {
            k + 1
        };
        pairs.push((s[dead], s[k]));
        let lo = k.min(dead);
        s.drain(lo..lo + 2);
    }
    pairs.sort_unstable();
    (s[0], pairs)
}

fn tau_values(s: &SeifertInvariants) -> Vec<i64> {
    tau_sequence(s).unwrap().values
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn stack_pairing_is_persistence(seq in alternating()) {
        let root = build_root_from_values(&seq).unwrap();
        let (trunk, pairs) = cancellation_pairs(&seq);
        prop_assert_eq!(root.trunk_value(), trunk);
        prop_assert_eq!(root.pairs(), pairs);
    }

    #[test]
    fn pairing_ignores_direction(seq in alternating()) {
        let rev: Vec<i64> = seq.iter().rev().copied().collect();
        let a = build_root_from_values(&seq).unwrap();
        let b = build_root_from_values(&rev).unwrap();
        prop_assert_eq!(a.trunk_value(), b.trunk_value());
        prop_assert_eq!(a.pairs(), b.pairs());
    }

    #[test]
    fn root_shape(seq in alternating()) {
        let root = build_root_from_values(&seq).unwrap();
        prop_assert_eq!(root.leaves.len(), seq.len().div_ceil(2));
        prop_assert_eq!(root.merges.len(), root.leaves.len() - 1);
        let maxima: Vec<i64> = seq.iter().skip(1).step_by(2).copied().collect();
        for m in &root.merges {
            prop_assert!(m.level > root.leaves[m.leaf].value);
            prop_assert!(maxima.contains(&m.level));
            prop_assert!(m.leaf != root.trunk);
        }
        prop_assert_eq!(root.trunk_value(), *seq.iter().min().unwrap());
    }

    #[test]
    fn module_shape(t in triple()) {
        let s = brieskorn_seifert(t[0], t[1], t[2]).unwrap();
        let m = compute_hf(&s).unwrap();
        let minima = reduce(&tau_sequence(&s).unwrap()).minima().len() as u64;
        prop_assert_eq!(m.tower_count(), minima - 1);
        prop_assert_eq!(m.d % 2, 0);
        prop_assert_eq!(m.odd_rank(), 0);
        for (tower, _) in m.towers() {
            prop_assert!(tower.bottom >= m.d);
            prop_assert_eq!(tower.bottom % 2, 0);
            prop_assert!(tower.length >= 1);
        }
        prop_assert_eq!(d_invariant_direct(&s).unwrap(), m.d);
        prop_assert_eq!(grading_shift(&s).unwrap() % 2, 0);
    }

    #[test]
    fn permutation_invariance(t in triple()) {
        let s = brieskorn_seifert(t[0], t[1], t[2]).unwrap();
        let values = tau_values(&s);
        let module = compute_hf(&s).unwrap();
        for p in [[t[1], t[0], t[2]], [t[2], t[1], t[0]], [t[1], t[2], t[0]]] {
            let s2 = brieskorn_general(&p).unwrap();
            prop_assert_eq!(s2.e0, s.e0);
            prop_assert_eq!(&tau_values(&s2), &values);
            prop_assert_eq!(&compute_hf(&s2).unwrap(), &module);
        }
    }

    #[test]
    fn representative_invariance(t in triple(), arm in 0usize..3, times in 1usize..4) {
        let s = brieskorn_seifert(t[0], t[1], t[2]).unwrap();
        let mut moved = s.clone();
        for _ in 0..times {
            moved = moved.shift_arm(arm);
        }
        prop_assert_eq!(moved.normalized(), s.clone());
        let bound = truncation_bound(&s).unwrap() as i64;
        for j in 0..=bound {
            prop_assert_eq!(delta_ceil(&s, j), delta_ceil(&moved, j));
        }
    }

    #[test]
    fn bound_is_valid(t in triple()) {
        let s = brieskorn_seifert(t[0], t[1], t[2]).unwrap();
        let b = truncation_bound(&s).unwrap() as i64;
        for j in b..=b + 50 {
            prop_assert!(delta_ceil(&s, j) >= 1);
        }
    }

    #[test]
    fn plumbing_is_unimodular_and_almost_rational(t in triple()) {
        let g = star_plumbing(&brieskorn_seifert(t[0], t[1], t[2]).unwrap()).unwrap();
        prop_assert!(g.is_star_shaped_tree());
        prop_assert!(g.is_negative_definite());
        prop_assert!(g.determinant().abs() == 1.into());
        prop_assert!(g.bad_vertices().len() <= 1);
    }
}
