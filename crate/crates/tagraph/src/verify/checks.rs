//! The axiom checks. Each function replays one law over the tags or tuples
//! it is handed and returns a record with the number of comparisons and the
//! first counterexample, if any.
//!
//! Checks stop at the first failure. Laws whose verification needs a
//! factorial or exponential oracle silently restrict themselves to inputs
//! small enough for the oracle; the restrictions are noted on each check.

use crate::algebra::{
    coeff, product, product_lin, Coefficient, Combination, LinComb, Tensor3Comb, TensorComb,
};
use crate::commutative::{
    bare_antipode, bare_coproduct, bare_counit, bare_product, forget, project, project_tensor,
    BareKey, BareLinComb, BARE_VERTEX_CAPACITY,
};
use crate::graph::{EdgeSubset, Tag};
use crate::hopf::{
    antipode_alt_with_capacity, antipode_with_capacity, contract, coproduct_with_capacity, counit,
    reduced_coproduct_with_capacity, subgraph,
};
use crate::verify::model::HopfModel;
use crate::verify::oracle::{
    brute_force_bare_canonical, brute_force_canonical, brute_force_min_spanning_forest,
    is_spanning_forest, ORACLE_VERTEX_CAPACITY,
};
use crate::verify::report::{AxiomRecord, Checker};
use crate::verify::universe::random_tag;
use crate::CapacityError;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type BareTensor3Comb = Combination<(BareKey, BareKey, BareKey)>;

/// `(coproduct (x) id) . coproduct`.
pub fn iterated_coproduct_left(t: &Tag, capacity: usize) -> Result<Tensor3Comb, CapacityError> {
    let delta = coproduct_with_capacity(t, capacity)?;
    let mut out = Tensor3Comb::zero();
    for ((l, r), c) in delta.iter() {
        let inner = coproduct_with_capacity(l.tag(), capacity)?;
        for ((a, b), d) in inner.iter() {
            out.add_term((a.clone(), b.clone(), r.clone()), c * d);
        }
    }
    Ok(out)
}

/// `(id (x) coproduct) . coproduct`.
pub fn iterated_coproduct_right(t: &Tag, capacity: usize) -> Result<Tensor3Comb, CapacityError> {
    let delta = coproduct_with_capacity(t, capacity)?;
    let mut out = Tensor3Comb::zero();
    for ((l, r), c) in delta.iter() {
        let inner = coproduct_with_capacity(r.tag(), capacity)?;
        for ((a, b), d) in inner.iter() {
            out.add_term((l.clone(), a.clone(), b.clone()), c * d);
        }
    }
    Ok(out)
}

/// `m . (antipode (x) id) . coproduct`, the left convolution of the
/// antipode against the identity.
pub fn convolve_antipode_left(t: &Tag, capacity: usize) -> Result<LinComb, CapacityError> {
    let delta = coproduct_with_capacity(t, capacity)?;
    let mut out = LinComb::zero();
    for ((l, r), c) in delta.iter() {
        let s = antipode_with_capacity(l.tag(), capacity)?;
        for (k, d) in s.iter() {
            out.add_tag(&product(k.tag(), r.tag()), c * d);
        }
    }
    Ok(out)
}

/// `m . (id (x) antipode) . coproduct`.
pub fn convolve_antipode_right(t: &Tag, capacity: usize) -> Result<LinComb, CapacityError> {
    let delta = coproduct_with_capacity(t, capacity)?;
    let mut out = LinComb::zero();
    for ((l, r), c) in delta.iter() {
        let s = antipode_with_capacity(r.tag(), capacity)?;
        for (k, d) in s.iter() {
            out.add_tag(&product(l.tag(), k.tag()), c * d);
        }
    }
    Ok(out)
}

/// `counit(t)` times the empty graph: the convolution identity element.
fn counit_times_unit(t: &Tag) -> LinComb {
    LinComb::from_tag(&Tag::unit()).scaled(&counit(t))
}

pub fn canonical_form_idempotent(tags: &[Tag], universe: &str) -> AxiomRecord {
    let mut c = Checker::new("canonical-form-idempotent", universe);
    for t in tags {
        if c.failed() {
            break;
        }
        let once = t.canonical_key();
        let twice = once.tag().canonical_key();
        c.eq(t, &once, &twice);
    }
    c.finish()
}

/// Canonical forms against minimization over all `n!` renumberings;
/// restricted to tags the factorial oracle can afford.
pub fn canonical_form_matches_exhaustive_search(tags: &[Tag], universe: &str) -> AxiomRecord {
    let mut c = Checker::new("canonical-form-matches-exhaustive-search", universe);
    for t in tags {
        if c.failed() {
            break;
        }
        if t.vertex_count() > ORACLE_VERTEX_CAPACITY {
            continue;
        }
        c.eq(t, t.canonical_key().into_tag(), brute_force_canonical(t));
    }
    c.finish()
}

pub fn canonical_form_preserves_shape(tags: &[Tag], universe: &str) -> AxiomRecord {
    let mut c = Checker::new("canonical-form-preserves-shape", universe);
    for t in tags {
        if c.failed() {
            break;
        }
        let canonical = t.canonical_key().into_tag();
        c.eq(t, canonical.degree(), t.degree());
        c.eq(t, canonical.vertex_count(), t.vertex_count());
        let still_valid =
            Tag::new(canonical.vertex_count(), canonical.edges().iter().copied()).is_ok();
        c.confirm(t, &canonical, "a structurally valid tag", still_valid);
    }
    c.finish()
}

pub fn render_parse_round_trip(tags: &[Tag], universe: &str) -> AxiomRecord {
    let mut c = Checker::new("render-parse-round-trip", universe);
    for t in tags {
        if c.failed() {
            break;
        }
        let expected = t.canonical_key().into_tag();
        match Tag::parse(&t.to_string()) {
            Ok(parsed) => c.eq(t, &parsed, &expected),
            Err(e) => c.confirm(t, format!("parse error: {}", e), &expected, false),
        }
    }
    c.finish()
}

/// The greedy forest against the exhaustive one, including uniqueness of
/// the minimum; restricted to tags the subset oracle can afford.
pub fn spanning_forest_matches_exhaustive_search(tags: &[Tag], universe: &str) -> AxiomRecord {
    let mut c = Checker::new("spanning-forest-matches-exhaustive-search", universe);
    for t in tags {
        if c.failed() {
            break;
        }
        if t.edge_count() > 16 {
            continue;
        }
        let greedy = t.min_spanning_forest();
        let (minimal, unique) = brute_force_min_spanning_forest(t);
        c.eq(t, &greedy, &minimal);
        c.confirm(t, &minimal, "a unique minimum", unique);
    }
    c.finish()
}

pub fn spanning_forest_spans(tags: &[Tag], universe: &str) -> AxiomRecord {
    let mut c = Checker::new("spanning-forest-spans", universe);
    for t in tags {
        if c.failed() {
            break;
        }
        let forest = t.min_spanning_forest();
        c.confirm(
            t,
            &forest,
            "an acyclic subset connecting what the graph connects",
            is_spanning_forest(t, &forest),
        );
    }
    c.finish()
}

/// Exhaustive universes must list each class exactly once.
pub fn enumeration_classes_distinct(tags: &[Tag], universe: &str) -> AxiomRecord {
    let mut c = Checker::new("enumeration-classes-distinct", universe);
    for window in tags.windows(2) {
        if c.failed() {
            break;
        }
        let (a, b) = (&window[0], &window[1]);
        c.confirm(
            format!("{} vs {}", a, b),
            a.canonical_key(),
            b.canonical_key(),
            a.canonical_key() != b.canonical_key(),
        );
    }
    c.finish()
}

/// Associativity on raw tags, then again through the lifted product on
/// multi-term combinations built from the same triple.
/// Exhaustive enumeration is closed under its bound: any random tag with
/// that many edges or fewer lands on one of the enumerated classes.
pub fn enumeration_covers_random_tags(
    tags: &[Tag],
    max_edges: usize,
    universe: &str,
) -> AxiomRecord {
    let mut c = Checker::new("enumeration-covers-random-tags", universe);
    let keys: std::collections::BTreeSet<_> =
        tags.iter().map(|t| t.canonical_key()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE);
    let max_vertices = (2 * max_edges.max(1)) as u32;
    for _ in 0..64 {
        if c.failed() {
            break;
        }
        let sample = random_tag(&mut rng, 0, max_edges, max_vertices);
        c.confirm(
            &sample,
            sample.canonical_key(),
            "a key in the enumerated universe",
            keys.contains(&sample.canonical_key()),
        );
    }
    c.finish()
}

pub fn product_associative(triples: &[(Tag, Tag, Tag)], universe: &str) -> AxiomRecord {
    let mut c = Checker::new("product-associative", universe);
    for (a, b, t) in triples {
        if c.failed() {
            break;
        }
        let label = format!("a = {}, b = {}, c = {}", a, b, t);
        c.eq(
            &label,
            product(&product(a, b), t),
            product(a, &product(b, t)),
        );
        let x = LinComb::from_tag(a).plus(&LinComb::from_tag(b).scaled(&coeff(2)));
        let y = LinComb::from_tag(b);
        let z = LinComb::from_tag(t).minus(&LinComb::from_tag(a));
        c.eq(
            &label,
            product_lin(&product_lin(&x, &y), &z),
            product_lin(&x, &product_lin(&y, &z)),
        );
    }
    c.finish()
}

pub fn product_unit_laws(tags: &[Tag], universe: &str) -> AxiomRecord {
    let mut c = Checker::new("product-unit-laws", universe);
    let unit = Tag::unit();
    for t in tags {
        if c.failed() {
            break;
        }
        c.eq(t, &product(&unit, t), t);
        c.eq(t, &product(t, &unit), t);
    }
    c.finish()
}

pub fn product_adds_degrees(pairs: &[(Tag, Tag)], universe: &str) -> AxiomRecord {
    let mut c = Checker::new("product-adds-degrees", universe);
    for (a, b) in pairs {
        if c.failed() {
            break;
        }
        c.eq(
            format!("a = {}, b = {}", a, b),
            product(a, b).degree(),
            a.degree() + b.degree(),
        );
    }
    c.finish()
}

/// A fixed pair whose two products are non-isomorphic tags — the algebra is
/// genuinely non-commutative — while their order-forgotten images coincide.
pub fn product_noncommutative_witness() -> Result<AxiomRecord, CapacityError> {
    let mut c = Checker::new("product-noncommutative-witness", "fixed witness pair");
    let edge = Tag::new_unchecked(2, vec![(1, 2)]);
    let bubble = Tag::new_unchecked(2, vec![(1, 2), (1, 2)]);
    let ab = product(&edge, &bubble);
    let ba = product(&bubble, &edge);
    c.confirm(
        format!("a = {}, b = {}", edge, bubble),
        ab.canonical_key(),
        ba.canonical_key(),
        !ab.is_isomorphic(&ba),
    );
    c.eq(
        format!("a = {}, b = {}", edge, bubble),
        forget(&ab).canonical_key()?,
        forget(&ba).canonical_key()?,
    );
    Ok(c.finish())
}

/// One round of free-module laws on a triple of combinations: addition
/// commutes and associates with zero and negation; scaling distributes both
/// ways and composes. Exact rational arithmetic, no tolerance.
fn combination_laws<K>(
    c: &mut Checker,
    label: &str,
    x: &Combination<K>,
    y: &Combination<K>,
    z: &Combination<K>,
) where
    K: Ord + Clone,
    Combination<K>: std::fmt::Display + PartialEq + Clone,
{
    let five_halves = coeff(5) / coeff(2);
    let minus_three = coeff(-3);
    c.eq(label, x.plus(y), y.plus(x));
    c.eq(label, x.plus(y).plus(z), x.plus(&y.plus(z)));
    c.eq(label, x.plus(&Combination::zero()), x.clone());
    c.confirm(
        label,
        x.plus(&x.negated()),
        "the zero combination",
        x.plus(&x.negated()).is_zero(),
    );
    c.eq(
        label,
        x.scaled(&five_halves).scaled(&minus_three),
        x.scaled(&(five_halves.clone() * minus_three.clone())),
    );
    c.eq(
        label,
        x.plus(y).scaled(&five_halves),
        x.scaled(&five_halves).plus(&y.scaled(&five_halves)),
    );
    c.eq(
        label,
        x.scaled(&(five_halves.clone() + minus_three.clone())),
        x.scaled(&five_halves).plus(&x.scaled(&minus_three)),
    );
    c.eq(label, x.scaled(&coeff(1)), x.clone());
    c.confirm(
        label,
        x.scaled(&coeff(0)),
        "the zero combination",
        x.scaled(&coeff(0)).is_zero(),
    );
}

/// The outer product of two linear combinations, for building tensor
/// combinations to test.
fn outer(a: &LinComb, b: &LinComb) -> TensorComb {
    let mut out = TensorComb::zero();
    for (k1, c1) in a.iter() {
        for (k2, c2) in b.iter() {
            out.add_term((k1.clone(), k2.clone()), c1 * c2);
        }
    }
    out
}

/// Free-module laws for linear and tensor combinations built from each
/// pair, with mixed signs and a fractional scalar.
pub fn vector_space_laws(pairs: &[(Tag, Tag)], universe: &str) -> AxiomRecord {
    let mut c = Checker::new("vector-space-laws", universe);
    for (a, b) in pairs {
        if c.failed() {
            break;
        }
        let label = format!("a = {}, b = {}", a, b);
        let x = LinComb::from_tag(a).plus(&LinComb::from_tag(b).scaled(&coeff(2)));
        let y = LinComb::from_tag(b).negated();
        let z = LinComb::from_tag(a).minus(&LinComb::from_tag(b));
        combination_laws(&mut c, &label, &x, &y, &z);
        let tx = outer(&x, &y);
        let ty = outer(&y, &z);
        let tz = outer(&z, &x);
        combination_laws(&mut c, &label, &tx, &ty, &tz);
    }
    c.finish()
}

pub fn coassociativity(
    tags: &[Tag],
    universe: &str,
    capacity: usize,
) -> Result<AxiomRecord, CapacityError> {
    let mut c = Checker::new("coassociativity", universe);
    for t in tags {
        if c.failed() {
            break;
        }
        c.eq(
            t,
            iterated_coproduct_left(t, capacity)?,
            iterated_coproduct_right(t, capacity)?,
        );
    }
    Ok(c.finish())
}

/// `(counit (x) id) . coproduct = id`, for any model.
pub fn counit_left_identity(
    model: &HopfModel,
    tags: &[Tag],
    universe: &str,
    capacity: usize,
) -> Result<AxiomRecord, CapacityError> {
    let mut c = Checker::new("counit-left-identity", universe);
    for t in tags {
        if c.failed() {
            break;
        }
        let delta = model.coproduct(t, capacity)?;
        let mut collapsed = LinComb::zero();
        for ((l, r), coefficient) in delta.iter() {
            if l.is_unit() {
                collapsed.add_term(r.clone(), coefficient.clone());
            }
        }
        c.eq(t, collapsed, LinComb::from_tag(t));
    }
    Ok(c.finish())
}

/// `(id (x) counit) . coproduct = id`, for any model.
pub fn counit_right_identity(
    model: &HopfModel,
    tags: &[Tag],
    universe: &str,
    capacity: usize,
) -> Result<AxiomRecord, CapacityError> {
    let mut c = Checker::new("counit-right-identity", universe);
    for t in tags {
        if c.failed() {
            break;
        }
        let delta = model.coproduct(t, capacity)?;
        let mut collapsed = LinComb::zero();
        for ((l, r), coefficient) in delta.iter() {
            if r.is_unit() {
                collapsed.add_term(l.clone(), coefficient.clone());
            }
        }
        c.eq(t, collapsed, LinComb::from_tag(t));
    }
    Ok(c.finish())
}

pub fn counit_multiplicative(pairs: &[(Tag, Tag)], universe: &str) -> AxiomRecord {
    let mut c = Checker::new("counit-multiplicative", universe);
    for (a, b) in pairs {
        if c.failed() {
            break;
        }
        c.eq(
            format!("a = {}, b = {}", a, b),
            counit(&product(a, b)),
            counit(a) * counit(b),
        );
    }
    c.finish()
}

/// The coefficients of a coproduct must total `2^edges`: one contribution
/// per edge subset, none lost to collection.
pub fn coproduct_term_count(
    tags: &[Tag],
    universe: &str,
    capacity: usize,
) -> Result<AxiomRecord, CapacityError> {
    let mut c = Checker::new("coproduct-term-count", universe);
    for t in tags {
        if c.failed() {
            break;
        }
        let delta = coproduct_with_capacity(t, capacity)?;
        let total: Coefficient = delta.iter().map(|(_, k)| k.clone()).sum();
        c.eq(t, total, coeff(1i64 << t.edge_count()));
    }
    Ok(c.finish())
}

pub fn coproduct_splits_degree(
    tags: &[Tag],
    universe: &str,
    capacity: usize,
) -> Result<AxiomRecord, CapacityError> {
    let mut c = Checker::new("coproduct-splits-degree", universe);
    for t in tags {
        if c.failed() {
            break;
        }
        let delta = coproduct_with_capacity(t, capacity)?;
        for ((l, r), _) in delta.iter() {
            c.eq(
                format!("{} with term {} (x) {}", t, l, r),
                l.degree() + r.degree(),
                t.degree(),
            );
            if c.failed() {
                break;
            }
        }
    }
    Ok(c.finish())
}

/// The reduced coproduct must be the coproduct minus exactly the two
/// trivial terms, and everything left must split strictly.
pub fn reduced_coproduct_drops_trivial_terms(
    tags: &[Tag],
    universe: &str,
    capacity: usize,
) -> Result<AxiomRecord, CapacityError> {
    let mut c = Checker::new("reduced-coproduct-drops-trivial-terms", universe);
    let unit = Tag::unit().canonical_key();
    for t in tags {
        if c.failed() {
            break;
        }
        if t.is_unit() {
            continue;
        }
        let reduced = reduced_coproduct_with_capacity(t, capacity).map_err(|e| match e {
            crate::hopf::HopfError::Capacity(e) => e,
            crate::hopf::HopfError::ReducedUnit => unreachable!("unit tags are skipped"),
        })?;
        let mut reconstructed = reduced.clone();
        reconstructed.add_term((t.canonical_key(), unit.clone()), coeff(1));
        reconstructed.add_term((unit.clone(), t.canonical_key()), coeff(1));
        c.eq(t, reconstructed, coproduct_with_capacity(t, capacity)?);
        let splits_strictly = reduced
            .iter()
            .all(|((l, r), _)| l.degree() >= 1 && r.degree() >= 1);
        c.confirm(
            t,
            &reduced,
            "terms with both legs of positive degree",
            splits_strictly,
        );
    }
    Ok(c.finish())
}

/// Contracting a subset, then the image of a larger subset's remainder,
/// equals contracting the larger subset at once — as literal tags, for
/// every nested pair of edge subsets. Restricted to 8 edges (the check
/// itself walks `4^edges` pairs).
pub fn contraction_composition(tags: &[Tag], universe: &str) -> AxiomRecord {
    let mut c = Checker::new("contraction-composition", universe);
    for t in tags {
        if c.failed() {
            break;
        }
        let m = t.edge_count();
        if m > 8 {
            continue;
        }
        for sigma_mask in 0..(1u64 << m) {
            if c.failed() {
                break;
            }
            let sigma = EdgeSubset::from_mask(sigma_mask);
            let at_once = contract(t, &sigma).expect("positions are in range");
            let mut gamma_mask = sigma_mask;
            loop {
                let gamma = EdgeSubset::from_mask(gamma_mask);
                let first = contract(t, &gamma).expect("positions are in range");
                let remainder = sigma.difference(&gamma).reindex_after_removing(&gamma, m);
                let stepwise = contract(&first, &remainder).expect("positions are in range");
                c.eq(
                    format!("t = {}, sigma = {}, gamma = {}", t, sigma, gamma),
                    &stepwise,
                    &at_once,
                );
                if c.failed() || gamma_mask == 0 {
                    break;
                }
                gamma_mask = (gamma_mask - 1) & sigma_mask;
            }
        }
    }
    c.finish()
}

/// The term-level bijection behind coassociativity: for nested subsets
/// `gamma` inside `sigma`, splitting off `gamma` first and then the rest
/// gives literally the same three tags as splitting off `sigma` first and
/// then `gamma` inside it. Restricted to 8 edges.
pub fn subset_quotient_splitting(tags: &[Tag], universe: &str) -> AxiomRecord {
    let mut c = Checker::new("subset-quotient-splitting", universe);
    for t in tags {
        if c.failed() {
            break;
        }
        let m = t.edge_count();
        if m > 8 {
            continue;
        }
        let full = EdgeSubset::full(m);
        for sigma_mask in 0..(1u64 << m) {
            if c.failed() {
                break;
            }
            let sigma = EdgeSubset::from_mask(sigma_mask);
            let sigma_complement = full.difference(&sigma);
            let sub_sigma = subgraph(t, &sigma).expect("positions are in range");
            let quot_sigma = contract(t, &sigma).expect("positions are in range");
            let mut gamma_mask = sigma_mask;
            loop {
                let gamma = EdgeSubset::from_mask(gamma_mask);
                let input = format!("t = {}, sigma = {}, gamma = {}", t, sigma, gamma);

                // route one: split off gamma, then the image of sigma \ gamma
                // inside the contraction
                let quot_gamma = contract(t, &gamma).expect("positions are in range");
                let rest = sigma.difference(&gamma).reindex_after_removing(&gamma, m);
                let one = (
                    subgraph(t, &gamma).expect("positions are in range"),
                    subgraph(&quot_gamma, &rest).expect("positions are in range"),
                    contract(&quot_gamma, &rest).expect("positions are in range"),
                );

                // route two: split off sigma, then gamma's image inside it
                let gamma_in_sigma = gamma.reindex_after_removing(&sigma_complement, m);
                let two = (
                    subgraph(&sub_sigma, &gamma_in_sigma).expect("positions are in range"),
                    contract(&sub_sigma, &gamma_in_sigma).expect("positions are in range"),
                    quot_sigma.clone(),
                );

                c.eq(&input, &one.0, &two.0);
                c.eq(&input, &one.1, &two.1);
                c.eq(&input, &one.2, &two.2);
                if c.failed() || gamma_mask == 0 {
                    break;
                }
                gamma_mask = (gamma_mask - 1) & sigma_mask;
            }
        }
    }
    c.finish()
}

/// `coproduct(a * b) = coproduct(a) * coproduct(b)` with the componentwise
/// tensor product, for any model (the right side multiplies components with
/// the model's own product).
pub fn bialgebra_compatibility(
    model: &HopfModel,
    pairs: &[(Tag, Tag)],
    universe: &str,
    capacity: usize,
) -> Result<AxiomRecord, CapacityError> {
    let mut c = Checker::new("bialgebra-compatibility", universe);
    for (a, b) in pairs {
        if c.failed() {
            break;
        }
        let lhs = model.coproduct(&model.product(a, b), capacity)?;
        let da = model.coproduct(a, capacity)?;
        let db = model.coproduct(b, capacity)?;
        let mut rhs = TensorComb::zero();
        for ((la, ra), ca) in da.iter() {
            for ((lb, rb), cb) in db.iter() {
                rhs.add_term(
                    (
                        model.product(la.tag(), lb.tag()).canonical_key(),
                        model.product(ra.tag(), rb.tag()).canonical_key(),
                    ),
                    ca * cb,
                );
            }
        }
        c.eq(format!("a = {}, b = {}", a, b), lhs, rhs);
    }
    Ok(c.finish())
}

pub fn antipode_convolution_left(
    tags: &[Tag],
    universe: &str,
    capacity: usize,
) -> Result<AxiomRecord, CapacityError> {
    let mut c = Checker::new("antipode-convolution-left", universe);
    for t in tags {
        if c.failed() {
            break;
        }
        c.eq(t, convolve_antipode_left(t, capacity)?, counit_times_unit(t));
    }
    Ok(c.finish())
}

pub fn antipode_convolution_right(
    tags: &[Tag],
    universe: &str,
    capacity: usize,
) -> Result<AxiomRecord, CapacityError> {
    let mut c = Checker::new("antipode-convolution-right", universe);
    for t in tags {
        if c.failed() {
            break;
        }
        c.eq(
            t,
            convolve_antipode_right(t, capacity)?,
            counit_times_unit(t),
        );
    }
    Ok(c.finish())
}

/// The recursion over subgraphs and the recursion over contractions define
/// the same antipode.
pub fn antipode_recursions_agree(
    tags: &[Tag],
    universe: &str,
    capacity: usize,
) -> Result<AxiomRecord, CapacityError> {
    let mut c = Checker::new("antipode-recursions-agree", universe);
    for t in tags {
        if c.failed() {
            break;
        }
        c.eq(
            t,
            antipode_with_capacity(t, capacity)?,
            antipode_alt_with_capacity(t, capacity)?,
        );
    }
    Ok(c.finish())
}

pub fn antipode_preserves_degree(
    tags: &[Tag],
    universe: &str,
    capacity: usize,
) -> Result<AxiomRecord, CapacityError> {
    let mut c = Checker::new("antipode-preserves-degree", universe);
    for t in tags {
        if c.failed() {
            break;
        }
        let s = antipode_with_capacity(t, capacity)?;
        c.confirm(
            t,
            &s,
            format!("terms of degree {}", t.degree()),
            s.is_homogeneous_of_degree(t.degree()),
        );
    }
    Ok(c.finish())
}

/// `antipode(a * b) = antipode(b) * antipode(a)` — the factors swap.
pub fn antipode_antihomomorphism(
    pairs: &[(Tag, Tag)],
    universe: &str,
    capacity: usize,
) -> Result<AxiomRecord, CapacityError> {
    let mut c = Checker::new("antipode-antihomomorphism", universe);
    for (a, b) in pairs {
        if c.failed() {
            break;
        }
        let lhs = antipode_with_capacity(&product(a, b), capacity)?;
        let rhs = product_lin(
            &antipode_with_capacity(b, capacity)?,
            &antipode_with_capacity(a, capacity)?,
        );
        c.eq(format!("a = {}, b = {}", a, b), lhs, rhs);
    }
    Ok(c.finish())
}

/// Projections of larger graphs would outgrow the bare canonical-form
/// capacity: every product of pieces of a tag with `2 * degree <= capacity`
/// vertices stays inside, because no piece has an isolated vertex.
fn within_bare_reach(t: &Tag) -> bool {
    t.vertex_count() <= BARE_VERTEX_CAPACITY
        && 2 * t.degree() <= BARE_VERTEX_CAPACITY as usize
}

pub fn projection_algebra_morphism(
    pairs: &[(Tag, Tag)],
    universe: &str,
) -> Result<AxiomRecord, CapacityError> {
    let mut c = Checker::new("projection-algebra-morphism", universe);
    for (a, b) in pairs {
        if c.failed() {
            break;
        }
        if !within_bare_reach(&product(a, b)) {
            continue;
        }
        c.eq(
            format!("a = {}, b = {}", a, b),
            forget(&product(a, b)).canonical_key()?,
            bare_product(&forget(a), &forget(b)).canonical_key()?,
        );
    }
    Ok(c.finish())
}

pub fn projection_coalgebra_morphism(
    tags: &[Tag],
    universe: &str,
    capacity: usize,
) -> Result<AxiomRecord, CapacityError> {
    let mut c = Checker::new("projection-coalgebra-morphism", universe);
    for t in tags {
        if c.failed() {
            break;
        }
        if !within_bare_reach(t) {
            continue;
        }
        c.eq(
            t,
            project_tensor(&coproduct_with_capacity(t, capacity)?)?,
            bare_coproduct(&forget(t), capacity)?,
        );
    }
    Ok(c.finish())
}

pub fn projection_counit_morphism(tags: &[Tag], universe: &str) -> AxiomRecord {
    let mut c = Checker::new("projection-counit-morphism", universe);
    for t in tags {
        if c.failed() {
            break;
        }
        c.eq(t, counit(t), bare_counit(&forget(t)));
    }
    c.finish()
}

pub fn projection_antipode_morphism(
    tags: &[Tag],
    universe: &str,
    capacity: usize,
) -> Result<AxiomRecord, CapacityError> {
    let mut c = Checker::new("projection-antipode-morphism", universe);
    for t in tags {
        if c.failed() {
            break;
        }
        if !within_bare_reach(t) {
            continue;
        }
        c.eq(
            t,
            project(&antipode_with_capacity(t, capacity)?)?,
            bare_antipode(&forget(t), capacity)?,
        );
    }
    Ok(c.finish())
}

pub fn bare_product_commutative(
    pairs: &[(Tag, Tag)],
    universe: &str,
) -> Result<AxiomRecord, CapacityError> {
    let mut c = Checker::new("bare-product-commutative", universe);
    for (a, b) in pairs {
        if c.failed() {
            break;
        }
        if !within_bare_reach(&product(a, b)) {
            continue;
        }
        let (x, y) = (forget(a), forget(b));
        c.eq(
            format!("a = {}, b = {}", x, y),
            bare_product(&x, &y).canonical_key()?,
            bare_product(&y, &x).canonical_key()?,
        );
    }
    Ok(c.finish())
}

pub fn bare_coassociativity(
    tags: &[Tag],
    universe: &str,
    capacity: usize,
) -> Result<AxiomRecord, CapacityError> {
    let mut c = Checker::new("bare-coassociativity", universe);
    for t in tags {
        if c.failed() {
            break;
        }
        if !within_bare_reach(t) {
            continue;
        }
        let g = forget(t);
        let delta = bare_coproduct(&g, capacity)?;
        let mut left = BareTensor3Comb::zero();
        let mut right = BareTensor3Comb::zero();
        for ((l, r), coefficient) in delta.iter() {
            for ((a, b), d) in bare_coproduct(l.graph(), capacity)?.iter() {
                left.add_term((a.clone(), b.clone(), r.clone()), coefficient * d);
            }
            for ((a, b), d) in bare_coproduct(r.graph(), capacity)?.iter() {
                right.add_term((l.clone(), a.clone(), b.clone()), coefficient * d);
            }
        }
        c.eq(&g, left, right);
    }
    Ok(c.finish())
}

pub fn bare_counit_laws(
    tags: &[Tag],
    universe: &str,
    capacity: usize,
) -> Result<AxiomRecord, CapacityError> {
    let mut c = Checker::new("bare-counit-laws", universe);
    for t in tags {
        if c.failed() {
            break;
        }
        if !within_bare_reach(t) {
            continue;
        }
        let g = forget(t);
        let identity = BareLinComb::singleton(g.canonical_key()?);
        let delta = bare_coproduct(&g, capacity)?;
        let mut left = BareLinComb::zero();
        let mut right = BareLinComb::zero();
        for ((l, r), coefficient) in delta.iter() {
            if l.is_unit() {
                left.add_term(r.clone(), coefficient.clone());
            }
            if r.is_unit() {
                right.add_term(l.clone(), coefficient.clone());
            }
        }
        c.eq(&g, left, identity.clone());
        c.eq(&g, right, identity);
    }
    Ok(c.finish())
}

/// The order-forgotten coproduct of an order-forgotten product against the
/// componentwise product of the factors' coproducts.
pub fn bare_bialgebra_compatibility(
    pairs: &[(Tag, Tag)],
    universe: &str,
    capacity: usize,
) -> Result<AxiomRecord, CapacityError> {
    let mut c = Checker::new("bare-bialgebra-compatibility", universe);
    for (a, b) in pairs {
        if c.failed() {
            break;
        }
        if !within_bare_reach(&product(a, b)) {
            continue;
        }
        let (x, y) = (forget(a), forget(b));
        let lhs = bare_coproduct(&bare_product(&x, &y), capacity)?;
        let mut rhs = crate::commutative::BareTensorComb::zero();
        for ((l1, r1), c1) in bare_coproduct(&x, capacity)?.iter() {
            for ((l2, r2), c2) in bare_coproduct(&y, capacity)?.iter() {
                rhs.add_term(
                    (
                        bare_product(l1.graph(), l2.graph()).canonical_key()?,
                        bare_product(r1.graph(), r2.graph()).canonical_key()?,
                    ),
                    c1 * c2,
                );
            }
        }
        c.eq(format!("a = {}, b = {}", x, y), lhs, rhs);
    }
    Ok(c.finish())
}

pub fn bare_antipode_convolution(
    tags: &[Tag],
    universe: &str,
    capacity: usize,
) -> Result<AxiomRecord, CapacityError> {
    let mut c = Checker::new("bare-antipode-convolution", universe);
    for t in tags {
        if c.failed() {
            break;
        }
        if !within_bare_reach(t) {
            continue;
        }
        let g = forget(t);
        let delta = bare_coproduct(&g, capacity)?;
        let mut out = BareLinComb::zero();
        for ((l, r), coefficient) in delta.iter() {
            let s = bare_antipode(l.graph(), capacity)?;
            for (k, d) in s.iter() {
                out.add_term(
                    bare_product(k.graph(), r.graph()).canonical_key()?,
                    coefficient * d,
                );
            }
        }
        let expected =
            BareLinComb::singleton(crate::commutative::BareGraph::unit().canonical_key()?)
                .scaled(&bare_counit(&g));
        c.eq(&g, out, expected);
    }
    Ok(c.finish())
}

/// Bare canonical forms against the factorial oracle. Two properties pin
/// the equivalence: the canonical representative is isomorphic to its
/// graph, and isomorphic graphs (as decided by the oracle) get equal keys.
pub fn bare_canonical_matches_exhaustive_search(
    tags: &[Tag],
    universe: &str,
) -> Result<AxiomRecord, CapacityError> {
    let mut c = Checker::new("bare-canonical-matches-exhaustive-search", universe);
    for t in tags {
        if c.failed() {
            break;
        }
        if t.vertex_count() > ORACLE_VERTEX_CAPACITY {
            continue;
        }
        let g = forget(t);
        let key = g.canonical_key()?;
        // the representative lies in the same class...
        c.confirm(
            &g,
            key.graph(),
            "a representative isomorphic to its graph",
            brute_force_bare_canonical(key.graph()) == brute_force_bare_canonical(&g),
        );
        // ...and relabelling the graph does not move the key
        let relabelled =
            crate::commutative::BareGraph::new(g.vertex_count(), brute_force_bare_canonical(&g))
                .expect("oracle output is a valid graph");
        c.eq(&g, relabelled.canonical_key()?, key);
    }
    Ok(c.finish())
}

/// Isomorphism is an equivalence relation: reflexive on every tag,
/// symmetric on every ordered pair, and transitive on every triple whose
/// first two links hold.
pub fn isomorphism_equivalence(
    tags: &[Tag],
    pairs: &[(Tag, Tag)],
    triples: &[(Tag, Tag, Tag)],
    universe: &str,
) -> AxiomRecord {
    let mut c = Checker::new("isomorphism-equivalence", universe);
    for t in tags {
        if c.failed() {
            break;
        }
        c.confirm(t, t.is_isomorphic(t), true, t.is_isomorphic(t));
    }
    for (a, b) in pairs {
        if c.failed() {
            break;
        }
        c.eq(
            format!("a = {}, b = {}", a, b),
            a.is_isomorphic(b),
            b.is_isomorphic(a),
        );
    }
    for (a, b, t) in triples {
        if c.failed() {
            break;
        }
        if a.is_isomorphic(b) && b.is_isomorphic(t) {
            c.confirm(
                format!("a = {}, b = {}, c = {}", a, b, t),
                a.is_isomorphic(t),
                true,
                a.is_isomorphic(t),
            );
        }
    }
    // distinct classes never satisfy the transitivity premise, so also walk
    // chains of relabelled copies where it genuinely holds
    for t in tags {
        if c.failed() {
            break;
        }
        let reversed = relabel(t, |v| t.vertex_count() + 1 - v);
        let swapped = relabel(&reversed, |v| match v {
            1 if t.vertex_count() >= 2 => 2,
            2 => 1,
            other => other,
        });
        if t.is_isomorphic(&reversed) && reversed.is_isomorphic(&swapped) {
            c.confirm(
                format!("a = {}, b = {}, c = {}", t, reversed, swapped),
                t.is_isomorphic(&swapped),
                true,
                t.is_isomorphic(&swapped),
            );
        }
    }
    c.finish()
}

/// Applies a vertex bijection, keeping the edge order.
fn relabel(t: &Tag, f: impl Fn(u32) -> u32) -> Tag {
    let edges = t
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (u, v) = (f(u), f(v));
            (u.min(v), u.max(v))
        })
        .collect();
    Tag::new_unchecked(t.vertex_count(), edges)
}

/// Runs the model's coproduct-facing laws and reports whether any failed:
/// the mutation-sensitivity harness. A broken model must fail at least one.
pub fn model_law_records(
    model: &HopfModel,
    tags: &[Tag],
    pairs: &[(Tag, Tag)],
    universe: &str,
    capacity: usize,
) -> Result<Vec<AxiomRecord>, CapacityError> {
    Ok(vec![
        counit_left_identity(model, tags, universe, capacity)?,
        counit_right_identity(model, tags, universe, capacity)?,
        bialgebra_compatibility(model, pairs, universe, capacity)?,
    ])
}

/// Convenience for tests: true iff every record passed.
pub fn all_passed(records: &[AxiomRecord]) -> bool {
    records
        .iter()
        .all(|r| r.status == crate::verify::report::AxiomStatus::Pass)
}
