//! The acceptance gate: one test per shipping criterion, each printing a
//! single `acceptance NN <name>: PASS|FAIL` line (visible under
//! `cargo test --test acceptance -- --nocapture`).
//!
//! Every algebraic criterion is checked with exact rational arithmetic — no
//! tolerances anywhere; the two wall-clock checks state their thresholds.

use std::time::{Duration, Instant};

use tagraph::verify::report::Checker;
use tagraph::verify::universe::{ordered_pairs, pair_up};
use tagraph::verify::{
    checks, enumerate_tags, AxiomRecord, AxiomStatus, HopfModel, TestUniverse, VerificationReport,
};
use tagraph::{antipode, coeff, coproduct, Coefficient, Tag, DEFAULT_EDGE_CAPACITY};

const CAPACITY: usize = DEFAULT_EDGE_CAPACITY;

/// Exhaustive classes with at most 3 edges plus 200 seeded samples with
/// 4–5 edges: the universe most of the algebraic criteria quantify over.
fn small_and_sampled() -> (Vec<Tag>, String, Vec<Tag>, String) {
    let exhaustive = TestUniverse::exhaustive(3);
    let small = exhaustive.tags().unwrap();
    let small_name = exhaustive.describe(small.len());
    let sampled = TestUniverse::sampled_range(4, 5, 10, 0xACCE55, 200);
    let samples = sampled.tags().unwrap();
    let samples_name = sampled.describe(samples.len());
    (small, small_name, samples, samples_name)
}

fn conclude(number: u8, name: &str, records: Vec<AxiomRecord>) {
    let report = VerificationReport::new(records);
    let pass = report.all_passed();
    println!(
        "acceptance {:02} {}: {}",
        number,
        name,
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "acceptance {:02} {}:\n{}", number, name, report.to_text());
}

#[test]
fn criterion_01_coassociativity() {
    let (small, small_name, samples, samples_name) = small_and_sampled();
    conclude(
        1,
        "coassociativity",
        vec![
            checks::coassociativity(&small, &small_name, CAPACITY).unwrap(),
            checks::coassociativity(&samples, &samples_name, CAPACITY).unwrap(),
        ],
    );
}

#[test]
fn criterion_02_counit_laws() {
    let (small, small_name, samples, samples_name) = small_and_sampled();
    let standard = HopfModel::standard();
    conclude(
        2,
        "counit-laws",
        vec![
            checks::counit_left_identity(&standard, &small, &small_name, CAPACITY).unwrap(),
            checks::counit_right_identity(&standard, &small, &small_name, CAPACITY).unwrap(),
            checks::counit_left_identity(&standard, &samples, &samples_name, CAPACITY).unwrap(),
            checks::counit_right_identity(&standard, &samples, &samples_name, CAPACITY).unwrap(),
        ],
    );
}

/// All ordered pairs with at most 2 edges each, exhaustively, plus 200
/// sampled pairs with up to 3 edges per factor.
fn bialgebra_pairs() -> (Vec<(Tag, Tag)>, String, Vec<(Tag, Tag)>, String) {
    let tags = enumerate_tags(2).unwrap();
    let exhaustive = ordered_pairs(&tags, 2);
    let exhaustive_name = format!(
        "{} ordered pairs over all classes with at most 2 edges",
        exhaustive.len()
    );
    let sampled = TestUniverse::sampled(3, 6, 0xB1A16E, 400);
    let samples = pair_up(&sampled.tags().unwrap());
    let samples_name = format!("{} pairs over {}", samples.len(), sampled.describe(400));
    (exhaustive, exhaustive_name, samples, samples_name)
}

#[test]
fn criterion_03_bialgebra_compatibility() {
    let (exhaustive, exhaustive_name, samples, samples_name) = bialgebra_pairs();
    assert!(samples.len() >= 200);
    let standard = HopfModel::standard();
    conclude(
        3,
        "bialgebra-compatibility",
        vec![
            checks::bialgebra_compatibility(&standard, &exhaustive, &exhaustive_name, CAPACITY)
                .unwrap(),
            checks::bialgebra_compatibility(&standard, &samples, &samples_name, CAPACITY).unwrap(),
        ],
    );
}

#[test]
fn criterion_04_antipode() {
    let (small, small_name, samples, samples_name) = small_and_sampled();
    let mut records = vec![
        checks::antipode_convolution_left(&small, &small_name, CAPACITY).unwrap(),
        checks::antipode_convolution_right(&small, &small_name, CAPACITY).unwrap(),
        checks::antipode_recursions_agree(&small, &small_name, CAPACITY).unwrap(),
        checks::antipode_convolution_left(&samples, &samples_name, CAPACITY).unwrap(),
        checks::antipode_convolution_right(&samples, &samples_name, CAPACITY).unwrap(),
        checks::antipode_recursions_agree(&samples, &samples_name, CAPACITY).unwrap(),
    ];
    let pairs = ordered_pairs(&enumerate_tags(2).unwrap(), 2);
    let pairs_name = format!(
        "{} ordered pairs over all classes with at most 2 edges",
        pairs.len()
    );
    records.push(checks::antipode_antihomomorphism(&pairs, &pairs_name, CAPACITY).unwrap());
    let left = TestUniverse::sampled(2, 6, 0xA4, 100).tags().unwrap();
    let right = TestUniverse::sampled(3, 6, 0xB4, 100).tags().unwrap();
    let sampled_pairs: Vec<(Tag, Tag)> = left.into_iter().zip(right).collect();
    records.push(
        checks::antipode_antihomomorphism(
            &sampled_pairs,
            "100 sampled pairs with products of up to 5 edges",
            CAPACITY,
        )
        .unwrap(),
    );
    conclude(4, "antipode", records);
}

#[test]
fn criterion_05_grading() {
    let (small, small_name, samples, samples_name) = small_and_sampled();
    let (exhaustive, exhaustive_name, sampled_pairs, sampled_pairs_name) = bialgebra_pairs();
    conclude(
        5,
        "grading",
        vec![
            checks::product_adds_degrees(&exhaustive, &exhaustive_name),
            checks::product_adds_degrees(&sampled_pairs, &sampled_pairs_name),
            checks::coproduct_splits_degree(&small, &small_name, CAPACITY).unwrap(),
            checks::coproduct_splits_degree(&samples, &samples_name, CAPACITY).unwrap(),
            checks::antipode_preserves_degree(&small, &small_name, CAPACITY).unwrap(),
            checks::antipode_preserves_degree(&samples, &samples_name, CAPACITY).unwrap(),
        ],
    );
}

#[test]
fn criterion_06_noncommutativity_witness() {
    conclude(
        6,
        "non-commutativity-witness",
        vec![checks::product_noncommutative_witness().unwrap()],
    );
}

#[test]
fn criterion_07_projection_hopf_morphism() {
    let universe = TestUniverse::exhaustive(3);
    let tags = universe.tags().unwrap();
    let described = universe.describe(tags.len());
    let pairs = ordered_pairs(&tags, 3);
    let pairs_name = format!("{} ordered pairs over {}", pairs.len(), described);
    conclude(
        7,
        "projection-hopf-morphism",
        vec![
            checks::projection_algebra_morphism(&pairs, &pairs_name).unwrap(),
            checks::projection_coalgebra_morphism(&tags, &described, CAPACITY).unwrap(),
            checks::projection_counit_morphism(&tags, &described),
            checks::projection_antipode_morphism(&tags, &described, CAPACITY).unwrap(),
        ],
    );
}

#[test]
fn criterion_08_iterated_contraction() {
    let universe = TestUniverse::exhaustive(3);
    let tags = universe.tags().unwrap();
    let described = universe.describe(tags.len());
    conclude(
        8,
        "iterated-contraction",
        vec![
            checks::contraction_composition(&tags, &described),
            checks::subset_quotient_splitting(&tags, &described),
        ],
    );
}

#[test]
fn criterion_09_coproduct_term_count() {
    let universe = TestUniverse::exhaustive(5);
    let tags = universe.tags().unwrap();
    let described = universe.describe(tags.len());
    let mut records = vec![checks::coproduct_term_count(&tags, &described, CAPACITY).unwrap()];

    // collected coefficients of the two worked examples
    let mut c = Checker::new("coproduct-collected-coefficients", "bubble and triangle");
    let key = |s: &str| s.parse::<Tag>().unwrap().canonical_key();
    let bubble = coproduct(&"g{2;(1,2)(1,2)}".parse().unwrap()).unwrap();
    c.eq(
        "bubble, middle term",
        bubble.coefficient(&(key("g{2;(1,2)}"), key("g{1;(1,1)}"))),
        coeff(2),
    );
    let triangle = coproduct(&"g{3;(1,2)(1,3)(2,3)}".parse().unwrap()).unwrap();
    c.eq(
        "triangle, single-edge subgraphs",
        triangle.coefficient(&(key("g{2;(1,2)}"), key("g{2;(1,2)(1,2)}"))),
        coeff(3),
    );
    c.eq(
        "triangle, two-edge subgraphs",
        triangle.coefficient(&(key("g{3;(1,2)(1,3)}"), key("g{1;(1,1)}"))),
        coeff(3),
    );
    records.push(c.finish());
    conclude(9, "coproduct-term-count", records);
}

#[test]
fn criterion_10_minimum_spanning_forest() {
    let universe = TestUniverse::exhaustive(4);
    let tags = universe.tags().unwrap();
    let described = universe.describe(tags.len());
    conclude(
        10,
        "minimum-spanning-forest",
        vec![
            checks::spanning_forest_matches_exhaustive_search(&tags, &described),
            checks::spanning_forest_spans(&tags, &described),
        ],
    );
}

#[test]
fn criterion_11_performance_smoke() {
    let cycle = |n: u32| -> Vec<(u32, u32)> {
        (1..=n).map(|i| (i, if i == n { 1 } else { i + 1 })).collect()
    };
    let doubled: Vec<(u32, u32)> = cycle(8).into_iter().flat_map(|e| [e, e]).collect();
    let host = Tag::new(8, doubled.into_iter()).unwrap();
    let start = Instant::now();
    let delta = coproduct(&host).unwrap();
    let coproduct_time = start.elapsed();
    let total = delta
        .iter()
        .fold(Coefficient::from_integer(0.into()), |acc, (_, c)| acc + c);
    assert_eq!(total, coeff(1i64 << 16), "65,536 subsets must be accounted for");

    let ring = Tag::new(8, cycle(8).into_iter()).unwrap();
    let start = Instant::now();
    let s = antipode(&ring).unwrap();
    let antipode_time = start.elapsed();
    assert!(s.is_homogeneous_of_degree(8));

    let pass = coproduct_time < Duration::from_secs(10) && antipode_time < Duration::from_secs(60);
    println!(
        "acceptance 11 performance-smoke: {} (16-edge coproduct in {:.2?} < 10s, \
         8-edge antipode in {:.2?} < 60s)",
        if pass { "PASS" } else { "FAIL" },
        coproduct_time,
        antipode_time,
    );
    assert!(pass, "coproduct {:?}, antipode {:?}", coproduct_time, antipode_time);
}

#[test]
fn criterion_12_mutation_sensitivity() {
    let tags = enumerate_tags(2).unwrap();
    let pairs = ordered_pairs(&tags, 2);
    let described = "all classes with at most 2 edges";

    let standard =
        checks::model_law_records(&HopfModel::standard(), &tags, &pairs, described, CAPACITY)
            .unwrap();
    let standard_ok = checks::all_passed(&standard);

    let mut outcomes = Vec::new();
    let mut every_mutant_caught = true;
    for mutant in HopfModel::mutants() {
        let records =
            checks::model_law_records(&mutant, &tags, &pairs, described, CAPACITY).unwrap();
        let tripped: Vec<&str> = records
            .iter()
            .filter(|r| r.status == AxiomStatus::Fail)
            .map(|r| r.name.as_str())
            .collect();
        if tripped.is_empty() {
            every_mutant_caught = false;
        }
        outcomes.push(format!("{} trips [{}]", mutant.name, tripped.join(", ")));
    }

    let pass = standard_ok && every_mutant_caught;
    println!(
        "acceptance 12 mutation-sensitivity: {} ({})",
        if pass { "PASS" } else { "FAIL" },
        outcomes.join("; ")
    );
    assert!(
        pass,
        "standard passes: {}; {}",
        standard_ok,
        outcomes.join("; ")
    );
}
