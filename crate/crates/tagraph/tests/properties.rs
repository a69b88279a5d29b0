//! Randomized law checks over arbitrary small graphs.
//!
//! The deterministic axiom suite in `tagraph::verify` replays the same laws
//! over exhaustive universes; these generators shrink, so a regression here
//! lands on a minimal witness rather than a sample index.

use proptest::prelude::*;
use std::collections::BTreeSet;
use tagraph::verify::checks::{convolve_antipode_left, convolve_antipode_right};
use tagraph::verify::oracle::{brute_force_min_spanning_forest, is_spanning_forest};
use tagraph::{
    antipode, antipode_alt, bare_counit, bare_product, coeff, coproduct, counit, forget, product,
    Coefficient, LinComb, Tag, DEFAULT_EDGE_CAPACITY,
};

/// An arbitrary tag with up to `max_edges` edges: an edge list over a small
/// vertex pool, compacted so that every vertex is incident to an edge.
fn arb_tag(max_edges: usize) -> impl Strategy<Value = Tag> {
    prop::collection::vec((1u32..=6, 1u32..=6), 0..=max_edges).prop_map(compact)
}

fn compact(pairs: Vec<(u32, u32)>) -> Tag {
    let used: BTreeSet<u32> = pairs.iter().flat_map(|&(u, v)| [u, v]).collect();
    let rank = |w: u32| used.range(..=w).count() as u32;
    let edges = pairs.iter().map(|&(u, v)| (rank(u), rank(v)));
    Tag::new(used.len() as u32, edges).expect("compacted edge lists are valid")
}

proptest! {
    #[test]
    fn canonical_form_is_idempotent(t in arb_tag(5)) {
        let key = t.canonical_key();
        prop_assert_eq!(key.tag().canonical_key(), key.clone());
    }

    #[test]
    fn canonical_form_stays_in_class(t in arb_tag(5)) {
        let representative = t.canonical_key().into_tag();
        prop_assert!(t.is_isomorphic(&representative));
        prop_assert_eq!(representative.degree(), t.degree());
        prop_assert_eq!(representative.vertex_count(), t.vertex_count());
    }

    #[test]
    fn rendering_round_trips(t in arb_tag(5)) {
        let parsed: Tag = t.to_string().parse().unwrap();
        prop_assert_eq!(parsed, t.canonical_key().into_tag());
    }

    #[test]
    fn product_is_associative(a in arb_tag(3), b in arb_tag(3), c in arb_tag(3)) {
        prop_assert_eq!(
            product(&product(&a, &b), &c),
            product(&a, &product(&b, &c))
        );
    }

    #[test]
    fn unit_is_neutral(t in arb_tag(5)) {
        prop_assert_eq!(product(&Tag::unit(), &t), t.clone());
        prop_assert_eq!(product(&t, &Tag::unit()), t);
    }

    #[test]
    fn product_adds_degrees_and_vertices(a in arb_tag(5), b in arb_tag(5)) {
        let ab = product(&a, &b);
        prop_assert_eq!(ab.degree(), a.degree() + b.degree());
        prop_assert_eq!(ab.vertex_count(), a.vertex_count() + b.vertex_count());
    }

    #[test]
    fn coproduct_counts_subsets(t in arb_tag(5)) {
        let delta = coproduct(&t).unwrap();
        let total = delta
            .iter()
            .fold(Coefficient::from_integer(0.into()), |acc, (_, c)| acc + c);
        prop_assert_eq!(total, coeff(1i64 << t.degree()));
    }

    #[test]
    fn coproduct_terms_split_degree(t in arb_tag(5)) {
        for ((left, right), _) in coproduct(&t).unwrap().iter() {
            prop_assert_eq!(left.degree() + right.degree(), t.degree());
        }
    }

    #[test]
    fn counit_laws_hold(t in arb_tag(5)) {
        let delta = coproduct(&t).unwrap();
        let mut left = LinComb::zero();
        let mut right = LinComb::zero();
        for ((l, r), c) in delta.iter() {
            left.add_term(r.clone(), counit(l.tag()) * c);
            right.add_term(l.clone(), counit(r.tag()) * c);
        }
        let identity = LinComb::from_tag(&t);
        prop_assert_eq!(left, identity.clone());
        prop_assert_eq!(right, identity);
    }

    #[test]
    fn antipode_recursions_agree(t in arb_tag(4)) {
        prop_assert_eq!(antipode(&t).unwrap(), antipode_alt(&t).unwrap());
    }

    #[test]
    fn antipode_convolves_to_the_counit(t in arb_tag(4)) {
        let expected = LinComb::from_tag(&Tag::unit()).scaled(&counit(&t));
        prop_assert_eq!(
            convolve_antipode_left(&t, DEFAULT_EDGE_CAPACITY).unwrap(),
            expected.clone()
        );
        prop_assert_eq!(
            convolve_antipode_right(&t, DEFAULT_EDGE_CAPACITY).unwrap(),
            expected
        );
    }

    #[test]
    fn antipode_preserves_degree(t in arb_tag(4)) {
        prop_assert!(antipode(&t).unwrap().is_homogeneous_of_degree(t.degree()));
    }

    #[test]
    fn spanning_forest_matches_brute_force(t in arb_tag(4)) {
        let greedy = t.min_spanning_forest();
        let (minimal, unique) = brute_force_min_spanning_forest(&t);
        prop_assert!(unique);
        prop_assert_eq!(&greedy, &minimal);
        prop_assert!(is_spanning_forest(&t, &greedy));
    }

    #[test]
    fn projection_respects_the_counit(t in arb_tag(5)) {
        prop_assert_eq!(bare_counit(&forget(&t)), counit(&t));
    }

    #[test]
    fn forgetting_commutes_with_products(a in arb_tag(3), b in arb_tag(3)) {
        prop_assume!(a.vertex_count() + b.vertex_count() <= 10);
        let joined = forget(&product(&a, &b)).canonical_key().unwrap();
        let (x, y) = (forget(&a), forget(&b));
        prop_assert_eq!(joined, bare_product(&x, &y).canonical_key().unwrap());
        prop_assert_eq!(
            bare_product(&x, &y).canonical_key().unwrap(),
            bare_product(&y, &x).canonical_key().unwrap()
        );
    }

    #[test]
    fn combination_rendering_round_trips(
        terms in prop::collection::vec((arb_tag(4), -9i64..=9), 0..4)
    ) {
        let mut c = LinComb::zero();
        for (t, k) in &terms {
            c.add_tag(t, coeff(*k));
        }
        prop_assert_eq!(LinComb::parse(&c.to_string()).unwrap(), c);
    }
}
