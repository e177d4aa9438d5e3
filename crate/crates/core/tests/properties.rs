//! Randomized invariants on objects well beyond the exhaustive sizes.

use num_bigint::BigInt;
use proptest::prelude::*;

use plane_trees::bijections::{
    alpha, alpha_inv, beta, beta_inv, callan_expand, callan_reduce, contract_udu, deflate, delta, delta_inv,
    dgr, dgr_inv, expand_udu, gamma, gamma_inv, inflate, phi, phi_inv, pre, pre_inv, psi, psi_inv, Bijection,
};
use plane_trees::counting::{MultiPoly, Var};
use plane_trees::objects::{contains_pattern, Pattern};
use plane_trees::statistics::{factor_count, tree_stats};
use plane_trees::{LatticePath, PathKind, Permutation, PlaneTree, Step};

fn tree_strategy(max_edges: u32) -> impl Strategy<Value = PlaneTree> {
    let leaf = Just(PlaneTree::leaf());
    leaf.prop_recursive(8, max_edges, 5, |inner| {
        prop::collection::vec(inner, 1..5).prop_map(PlaneTree::from_children)
    })
}

fn nonempty_tree() -> impl Strategy<Value = PlaneTree> {
    tree_strategy(48).prop_filter("at least one edge", |t| !t.is_leaf())
}

fn permutation(max: usize) -> impl Strategy<Value = Vec<usize>> {
    (0..=max).prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((-5i64..=5, 0u32..3, 0u32..3, 0u32..3), 0..6).prop_map(|terms| {
        let mut p = MultiPoly::zero();
        for (c, ex, ey, ez) in terms {
            p.add_term([0, 0, ex, ey, ez], BigInt::from(c));
        }
        p
    })
}

fn brute_force_contains(w: &[usize], pattern: Pattern) -> bool {
    let n = w.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let (x, y, z) = (w[a], w[b], w[c]);
                let hit = match pattern {
                    Pattern::P321 => x > y && y > z,
                    Pattern::P132 => x < z && z < y,
                };
                if hit {
                    return true;
                }
            }
        }
    }
    false
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn tree_text_round_trips(t in tree_strategy(60)) {
        let text = t.render();
        prop_assert_eq!(text.len(), 2 * t.node_count());
        prop_assert_eq!(PlaneTree::parse(&text).unwrap(), t.clone());
        prop_assert_eq!(t.mirror().mirror(), t);
    }

    #[test]
    fn tree_maps_invert(t in nonempty_tree()) {
        prop_assert_eq!(phi_inv(&phi(&t).unwrap()).unwrap(), t.clone());
        prop_assert_eq!(psi_inv(&psi(&t).unwrap()).unwrap(), t.clone());
        prop_assert_eq!(pre_inv(&pre(&t).unwrap()).unwrap(), t.clone());
        prop_assert_eq!(dgr_inv(&dgr(&t).unwrap()).unwrap(), t.clone());
        prop_assert_eq!(alpha_inv(&alpha(&t).unwrap()).unwrap(), t.clone());
        prop_assert_eq!(beta_inv(&beta(&t).unwrap()).unwrap(), t.clone());
        prop_assert_eq!(gamma_inv(&gamma(&t).unwrap()).unwrap(), t.clone());
        prop_assert_eq!(delta_inv(&delta(&t).unwrap()).unwrap(), t);
    }

    #[test]
    fn leaves_transfer_to_steps(t in nonempty_tree()) {
        let s = tree_stats(&t);
        for image in [phi(&t).unwrap(), psi(&t).unwrap()] {
            prop_assert_eq!(image.kind(), PathKind::Colored2);
            prop_assert_eq!(image.len(), t.edges() - 1);
            prop_assert_eq!(s.old_leaves, 1 + image.count(Step::U));
            prop_assert_eq!(s.young_leaves, image.count(Step::R));
        }
        prop_assert_eq!(factor_count(&pre(&t).unwrap(), "UDU"), s.young_leaves);
    }

    #[test]
    fn permutations_avoid_their_patterns(t in nonempty_tree()) {
        prop_assert!(!alpha(&t).unwrap().contains_pattern(Pattern::P321));
        prop_assert!(!gamma(&t).unwrap().contains_pattern(Pattern::P321));
        prop_assert!(!beta(&t).unwrap().contains_pattern(Pattern::P132));
        prop_assert!(!delta(&t).unwrap().contains_pattern(Pattern::P132));
    }

    #[test]
    fn contraction_invariants(t in nonempty_tree()) {
        let d = pre(&t).unwrap();
        let c = contract_udu(&d).unwrap();
        let text = c.render();
        prop_assert!(!text.contains("UDU") && !text.contains("RD") && !text.ends_with('R'));
        prop_assert_eq!(expand_udu(&c).unwrap(), d);
        let q = callan_reduce(&c).unwrap();
        prop_assert_eq!(callan_expand(&q).unwrap(), c);
    }

    #[test]
    fn path_text_round_trips(t in nonempty_tree()) {
        let q = phi(&t).unwrap();
        prop_assert_eq!(LatticePath::parse(&q.render(), PathKind::Colored2).unwrap(), q.clone());
        let d = inflate(&q).unwrap();
        prop_assert_eq!(d.kind(), PathKind::Dyck);
        prop_assert_eq!(deflate(&d).unwrap(), q);
    }

    #[test]
    fn text_interface_round_trips(t in nonempty_tree()) {
        let text = t.render();
        for b in [Bijection::Phi, Bijection::Psi, Bijection::Alpha, Bijection::Delta] {
            let image = b.apply_text(&text, false).unwrap();
            prop_assert_eq!(b.apply_text(&image, true).unwrap(), text.clone());
        }
    }

    #[test]
    fn permutation_text_round_trips(w in permutation(12)) {
        let p = Permutation::new(w.clone()).unwrap();
        prop_assert_eq!(Permutation::parse(&p.render()).unwrap(), p);
        let spaced = format!("( {} )", w.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" , "));
        let parsed = Permutation::parse(&spaced).unwrap();
        prop_assert_eq!(parsed.word(), &w[..]);
    }

    #[test]
    fn pattern_detection_matches_brute_force(w in permutation(10)) {
        for pattern in [Pattern::P321, Pattern::P132] {
            prop_assert_eq!(contains_pattern(&w, pattern), brute_force_contains(&w, pattern));
        }
    }

    #[test]
    fn polynomial_ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(a.pow(2), &a * &a);
    }

    #[test]
    fn substitution_is_a_homomorphism(a in poly(), b in poly(), r in poly()) {
        let sub = |p: &MultiPoly| p.substitute(Var::X, &r);
        prop_assert_eq!(sub(&(&a * &b)), &sub(&a) * &sub(&b));
        prop_assert_eq!(sub(&(&a + &b)), &sub(&a) + &sub(&b));
    }
}
