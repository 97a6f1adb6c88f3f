//! Property tests over random words, shapes and flip sequences.

use proptest::prelude::*;

use clusterforge::cluster_engine::{build_qw, cluster_variable, hat_y, LaurentPolynomial, Seed};
use clusterforge::core::{Letter, Word};
use clusterforge::expansions::{enumerate_l, expansion, expansion_sum, truncated_matching_count, ExpansionKind};
use clusterforge::poset::{fence, order_ideals};
use clusterforge::rank_analysis::{analyze, rank_fibonacci, rank_hook, rank_recursive};
use clusterforge::sl3::build_fan_sl3_seed;
use clusterforge::snakegraph::{straight_segments_of_shape, SnakeGraph};

fn words(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(any::<bool>(), 0..=max)
        .prop_map(|v| Word::new(v.into_iter().map(|b| if b { Letter::B } else { Letter::A }).collect()))
}

fn first_exponents(p: &LaurentPolynomial) -> Vec<i32> {
    p.terms().keys().next().expect("nonzero weight").clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn word_and_cf_duals_are_involutions(w in words(12)) {
        prop_assert_eq!(w.dual().dual(), w.clone());
        let cf = SnakeGraph::from_word(&w).continued_fraction();
        prop_assert_eq!(cf.dual().dual(), cf);
    }

    #[test]
    fn cf_value_is_matching_quotient(w in words(9)) {
        let cf = SnakeGraph::from_word(&w).continued_fraction();
        let v = cf.value();
        prop_assert_eq!(v.numer().clone(), truncated_matching_count(&w, 0).into());
        prop_assert_eq!(v.denom().clone(), truncated_matching_count(&w, cf.entries()[0] as usize).into());
    }

    #[test]
    fn quiver_and_seed_mutation_are_involutions(w in words(6), k in 0usize..7) {
        let q = build_qw(&w);
        let k = k % q.num_mutable();
        prop_assert_eq!(q.mutate(k).unwrap().mutate(k).unwrap(), q.clone());
        let s = Seed::initial(q);
        prop_assert_eq!(s.mutate(k).unwrap().mutate(k).unwrap(), s);
    }

    #[test]
    fn covers_multiply_by_y_hat(w in words(6)) {
        let q = build_qw(&w);
        let hats: Vec<Vec<i32>> = (0..q.num_mutable()).map(|k| hat_y(&q, k)).collect();
        for kind in [ExpansionKind::P, ExpansionKind::A, ExpansionKind::T] {
            let p = expansion(&w, kind);
            for &(x, y) in p.covers() {
                let ex = first_exponents(p.weight(x).unwrap());
                let ey = first_exponents(p.weight(y).unwrap());
                let d: Vec<i32> = ey.iter().zip(&ex).map(|(a, b)| a - b).collect();
                prop_assert!(hats.contains(&d), "{} {}: {:?}", w, kind, d);
            }
        }
    }

    #[test]
    fn expansions_sum_to_the_cluster_variable(w in words(7)) {
        let x = cluster_variable(&w);
        for k in ExpansionKind::ALL {
            prop_assert_eq!(expansion_sum(&expansion(&w, k), k, w.len() + 1), x.clone());
        }
    }

    #[test]
    fn fence_ideals_form_a_distributive_lattice(w in words(8)) {
        let ideals = order_ideals(&fence(&w)).unwrap();
        prop_assert!(ideals.is_lattice());
        prop_assert!(ideals.is_distributive().unwrap());
    }

    #[test]
    fn rank_formulas_agree(s in words(13)) {
        let g = SnakeGraph::of_shape(&s);
        let r = rank_recursive(&g);
        prop_assert_eq!(rank_hook(&g), r.clone());
        prop_assert_eq!(rank_fibonacci(&g), r.clone());
        if s.len() <= 9 {
            prop_assert_eq!(enumerate_l(&g).rank_generating_function().unwrap(), r.clone());
        }
        if straight_segments_of_shape(&s).len() <= 4 {
            prop_assert!(analyze(&r).unimodal);
        }
    }

    #[test]
    fn sl3_flip_sequences_undo(size in 5usize..=7, picks in prop::collection::vec(0usize..100, 1..5)) {
        let start = build_fan_sl3_seed(size).unwrap();
        let mut s = start.clone();
        let mut done = Vec::new();
        for p in picks {
            let diagonals: Vec<(usize, usize)> = diagonals_of(s.triangles(), size);
            let (a, b) = diagonals[p % diagonals.len()];
            let next = s.flip(a, b).unwrap();
            let new = diagonals_of(next.triangles(), size).into_iter().find(|d| !diagonals.contains(d)).unwrap();
            done.push(new);
            s = next;
        }
        for (a, b) in done.into_iter().rev() {
            s = s.flip(a, b).unwrap();
        }
        prop_assert!(s.is_fan());
        for e in start.labels() {
            prop_assert_eq!(s.variable(*e), start.variable(*e));
        }
    }
}

fn diagonals_of(triangles: &[[usize; 3]], size: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for t in triangles {
        for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            let boundary = b == a + 1 || (a == 0 && b == size - 1);
            if !boundary && !out.contains(&(a, b)) {
                out.push((a, b));
            }
        }
    }
    out.sort_unstable();
    out
}
