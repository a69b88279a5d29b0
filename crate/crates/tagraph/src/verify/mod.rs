//! The verification harness: axiom checks over enumerated or sampled graph
//! universes, brute-force oracles, pluggable (and deliberately broken)
//! operation models, and deterministic reports.
//!
//! The harness exists because the algebraic claims this library rests on
//! are easy to get subtly wrong in code — a forgotten vertex shift, a
//! dropped subset, a contraction that leaves debris behind. Each law is
//! replayed mechanically over whole universes of graphs:
//!
//! - [`TestUniverse::exhaustive`] enumerates *every* isomorphism class up
//!   to an edge bound, so small cases are covered with no sampling gaps;
//! - [`TestUniverse::sampled`] draws seeded pseudorandom graphs beyond the
//!   exhaustive range, reproducibly;
//! - [`checks`] holds one function per law, from canonical-form soundness
//!   against factorial-time oracles to the Hopf antipode identities;
//! - [`model::HopfModel`] packages the operations so the same checks also
//!   run against mutant implementations — the suite is required to catch
//!   every mutant, which keeps the checks honest;
//! - [`VerificationReport`] renders the outcome as stable text or JSON.

pub mod checks;
pub mod model;
pub mod oracle;
pub mod report;
pub mod universe;

pub use model::HopfModel;
pub use report::{AxiomRecord, AxiomStatus, Counterexample, Summary, VerificationReport};
pub use universe::{enumerate_tags, random_tag, TestUniverse, UniverseMode};

use crate::CapacityError;

/// Runs every axiom check over one universe and returns the report.
///
/// Pair- and triple-quantified laws run over all ordered tuples of the
/// universe's small tags in exhaustive mode, and over consecutive sample
/// tuples in sampled mode; pairs whose combined degree would overflow the
/// capacity of the expanding operations are left out.
pub fn run_axiom_suite(
    universe: &TestUniverse,
    capacity: usize,
) -> Result<VerificationReport, CapacityError> {
    let tags = universe.tags()?;
    let described = universe.describe(tags.len());

    let (mut pairs, triples) = match universe.mode {
        UniverseMode::Exhaustive => {
            let bound = universe.max_edges.min(2);
            (
                universe::ordered_pairs(&tags, bound),
                universe::ordered_triples(&tags, bound),
            )
        }
        UniverseMode::Sampled { .. } => {
            (universe::pair_up(&tags), universe::triple_up(&tags))
        }
    };
    pairs.retain(|(a, b)| a.degree() + b.degree() <= capacity);
    let pair_universe = format!("{} ordered pairs over {}", pairs.len(), described);
    let triple_universe = format!("{} ordered triples over {}", triples.len(), described);

    let standard = HopfModel::standard();
    let mut records = vec![
        checks::canonical_form_idempotent(&tags, &described),
        checks::canonical_form_matches_exhaustive_search(&tags, &described),
        checks::canonical_form_preserves_shape(&tags, &described),
        checks::render_parse_round_trip(&tags, &described),
        checks::isomorphism_equivalence(&tags, &pairs, &triples, &described),
        checks::spanning_forest_matches_exhaustive_search(&tags, &described),
        checks::spanning_forest_spans(&tags, &described),
        checks::vector_space_laws(&pairs, &pair_universe),
        checks::product_associative(&triples, &triple_universe),
        checks::product_unit_laws(&tags, &described),
        checks::product_adds_degrees(&pairs, &pair_universe),
        checks::product_noncommutative_witness()?,
        checks::coassociativity(&tags, &described, capacity)?,
        checks::counit_left_identity(&standard, &tags, &described, capacity)?,
        checks::counit_right_identity(&standard, &tags, &described, capacity)?,
        checks::counit_multiplicative(&pairs, &pair_universe),
        checks::coproduct_term_count(&tags, &described, capacity)?,
        checks::coproduct_splits_degree(&tags, &described, capacity)?,
        checks::reduced_coproduct_drops_trivial_terms(&tags, &described, capacity)?,
        checks::contraction_composition(&tags, &described),
        checks::subset_quotient_splitting(&tags, &described),
        checks::bialgebra_compatibility(&standard, &pairs, &pair_universe, capacity)?,
        checks::antipode_convolution_left(&tags, &described, capacity)?,
        checks::antipode_convolution_right(&tags, &described, capacity)?,
        checks::antipode_recursions_agree(&tags, &described, capacity)?,
        checks::antipode_preserves_degree(&tags, &described, capacity)?,
        checks::antipode_antihomomorphism(&pairs, &pair_universe, capacity)?,
        checks::projection_algebra_morphism(&pairs, &pair_universe)?,
        checks::projection_coalgebra_morphism(&tags, &described, capacity)?,
        checks::projection_counit_morphism(&tags, &described),
        checks::projection_antipode_morphism(&tags, &described, capacity)?,
        checks::bare_product_commutative(&pairs, &pair_universe)?,
        checks::bare_bialgebra_compatibility(&pairs, &pair_universe, capacity)?,
        checks::bare_coassociativity(&tags, &described, capacity)?,
        checks::bare_counit_laws(&tags, &described, capacity)?,
        checks::bare_antipode_convolution(&tags, &described, capacity)?,
        checks::bare_canonical_matches_exhaustive_search(&tags, &described)?,
    ];
    if matches!(universe.mode, UniverseMode::Exhaustive) {
        records.push(checks::enumeration_classes_distinct(&tags, &described));
        records.push(checks::enumeration_covers_random_tags(
            &tags,
            universe.max_edges,
            &described,
        ));
    }
    Ok(VerificationReport::new(records))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Tag;
    use crate::hopf::DEFAULT_EDGE_CAPACITY;

    #[test]
    fn exhaustive_suite_passes_on_small_universe() {
        let universe = TestUniverse::exhaustive(2);
        let report = run_axiom_suite(&universe, DEFAULT_EDGE_CAPACITY).unwrap();
        assert!(report.all_passed(), "{}", report.to_text());
        assert!(report.summary.checks > 0);
    }

    #[test]
    fn sampled_suite_passes_and_is_deterministic() {
        let universe = TestUniverse::sampled(4, 8, 7, 24);
        let a = run_axiom_suite(&universe, DEFAULT_EDGE_CAPACITY).unwrap();
        let b = run_axiom_suite(&universe, DEFAULT_EDGE_CAPACITY).unwrap();
        assert!(a.all_passed(), "{}", a.to_text());
        assert_eq!(a.to_text(), b.to_text());
        assert_eq!(a.to_json(), b.to_json());
    }

    #[test]
    fn every_mutant_is_caught_and_the_standard_model_is_not() {
        let tags = enumerate_tags(2).unwrap();
        let pairs = universe::ordered_pairs(&tags, 2);
        let described = "all classes with at most 2 edges";

        let standard = checks::model_law_records(
            &HopfModel::standard(),
            &tags,
            &pairs,
            described,
            DEFAULT_EDGE_CAPACITY,
        )
        .unwrap();
        assert!(checks::all_passed(&standard));

        for mutant in HopfModel::mutants() {
            let records = checks::model_law_records(
                &mutant,
                &tags,
                &pairs,
                described,
                DEFAULT_EDGE_CAPACITY,
            )
            .unwrap();
            assert!(
                !checks::all_passed(&records),
                "mutant {} slipped through the laws",
                mutant.name
            );
        }
    }

    #[test]
    fn mutants_trip_the_expected_laws() {
        let tags = enumerate_tags(2).unwrap();
        let pairs = universe::ordered_pairs(&tags, 2);

        // gluing the factors together breaks bialgebra compatibility
        let glue = HopfModel::mutant_unshifted_product();
        let record =
            checks::bialgebra_compatibility(&glue, &pairs, "pairs", DEFAULT_EDGE_CAPACITY)
                .unwrap();
        assert_eq!(record.status, AxiomStatus::Fail);
        assert!(record.counterexample.is_some());

        // ...and already on a pair of single edges
        let edge = Tag::parse("g{2;(1,2)}").unwrap();
        let edge_pair = vec![(edge.clone(), edge)];
        let record =
            checks::bialgebra_compatibility(&glue, &edge_pair, "pairs", DEFAULT_EDGE_CAPACITY)
                .unwrap();
        assert_eq!(record.status, AxiomStatus::Fail);

        // losing the empty subset breaks the left counit identity
        let skip = HopfModel::mutant_skip_empty_subset();
        let record =
            checks::counit_left_identity(&skip, &tags, "tags", DEFAULT_EDGE_CAPACITY).unwrap();
        assert_eq!(record.status, AxiomStatus::Fail);

        // keeping isolated vertices breaks the right counit identity
        let ghost = HopfModel::mutant_contract_keeps_isolated();
        let record =
            checks::counit_right_identity(&ghost, &tags, "tags", DEFAULT_EDGE_CAPACITY).unwrap();
        assert_eq!(record.status, AxiomStatus::Fail);
        let ce = record.counterexample.unwrap();
        assert_eq!(ce.input, "g{1;(1,1)}");
    }

    #[test]
    fn suite_rejects_oversized_exhaustive_requests() {
        let universe = TestUniverse::exhaustive(9);
        assert!(run_axiom_suite(&universe, DEFAULT_EDGE_CAPACITY).is_err());
    }
}
