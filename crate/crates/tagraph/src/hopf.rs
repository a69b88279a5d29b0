//! The coalgebra and Hopf structure: subgraphs, contractions, the coproduct,
//! the counit, and the antipode.
//!
//! The coproduct of a tag sums over **all** subsets of its edge positions.
//! A subset `s` contributes the tensor `subgraph(s) (x) contract(s)`: the
//! left leg keeps the chosen edges with their relative order and the
//! vertices they touch; the right leg shrinks every connected component of
//! the chosen subgraph to a single vertex, keeps the remaining edges in
//! their relative order, and drops whatever no longer meets an edge. Summing
//! over subsets is exponential by nature, so the expanding operations carry
//! an edge-count capacity and refuse inputs past it.

use std::collections::HashMap;

use num_traits::One;

use crate::algebra::{product, Coefficient, LinComb, TensorComb};
use crate::graph::{CanonicalKey, EdgeSubset, SubsetError, Tag};
use crate::CapacityError;

/// Default bound on the edge count of inputs to the subset-expanding
/// operations (coproduct, reduced coproduct, antipode).
pub const DEFAULT_EDGE_CAPACITY: usize = 20;

/// Subset expansion walks a 64-bit mask, so no capacity can push past this.
const HARD_EDGE_LIMIT: usize = 63;

/// Errors from coalgebra operations.
#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum HopfError {
    #[error(transparent)]
    Capacity(#[from] CapacityError),
    #[error("the empty graph has no reduced coproduct")]
    ReducedUnit,
}

/// The subgraph spanned by the edges of `host` at the given positions:
/// those edges in their relative order, on the vertices they touch,
/// renumbered in increasing original order. The empty subset yields the
/// empty graph.
pub fn subgraph(host: &Tag, subset: &EdgeSubset) -> Result<Tag, SubsetError> {
    validate(host, subset)?;
    let selected: Vec<usize> = subset.positions().map(|p| p - 1).collect();
    Ok(subgraph_indices(host, &selected))
}

/// Shrinks each connected component of the selected subgraph to a single
/// vertex and keeps only the unselected edges, in their relative order.
/// Merged endpoints can turn an edge into a self-loop. Vertices that end up
/// incident to no remaining edge disappear — contracting every edge of a
/// component erases the component entirely, and `contract(t, all)` is the
/// empty graph. `contract(t, {})` is `t` itself.
pub fn contract(host: &Tag, subset: &EdgeSubset) -> Result<Tag, SubsetError> {
    validate(host, subset)?;
    let selected: Vec<usize> = subset.positions().map(|p| p - 1).collect();
    Ok(contract_indices(host, &selected))
}

fn validate(host: &Tag, subset: &EdgeSubset) -> Result<(), SubsetError> {
    match subset.max_position() {
        Some(position) if position > host.edge_count() => Err(SubsetError {
            position,
            edge_count: host.edge_count(),
        }),
        _ => Ok(()),
    }
}

/// `selected`: sorted 0-based edge indices.
pub(crate) fn subgraph_indices(host: &Tag, selected: &[usize]) -> Tag {
    let mut renumber = HashMap::new();
    let mut vertices: Vec<u32> = selected
        .iter()
        .flat_map(|&i| {
            let (u, v) = host.edges()[i];
            [u, v]
        })
        .collect();
    vertices.sort_unstable();
    vertices.dedup();
    for (fresh, &original) in vertices.iter().enumerate() {
        renumber.insert(original, fresh as u32 + 1);
    }
    let edges = selected
        .iter()
        .map(|&i| {
            let (u, v) = host.edges()[i];
            (renumber[&u], renumber[&v])
        })
        .collect();
    Tag::new_unchecked(vertices.len() as u32, edges)
}

/// `selected`: sorted 0-based edge indices to contract.
pub(crate) fn contract_indices(host: &Tag, selected: &[usize]) -> Tag {
    let n = host.vertex_count() as usize;
    let mut uf = crate::graph::UnionFind::new(n + 1);
    let mut is_selected = vec![false; host.edge_count()];
    for &i in selected {
        is_selected[i] = true;
        let (u, v) = host.edges()[i];
        uf.union(u as usize, v as usize);
    }

    // Each merged class is represented by its smallest vertex; surviving
    // classes are renumbered in increasing order of that representative.
    let mut class_edges = Vec::new();
    for (i, &(u, v)) in host.edges().iter().enumerate() {
        if is_selected[i] {
            continue;
        }
        let ru = uf.find(u as usize) as u32;
        let rv = uf.find(v as usize) as u32;
        class_edges.push((ru.min(rv), ru.max(rv)));
    }
    let mut survivors: Vec<u32> = class_edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    survivors.sort_unstable();
    survivors.dedup();
    let renumber: HashMap<u32, u32> = survivors
        .iter()
        .enumerate()
        .map(|(fresh, &root)| (root, fresh as u32 + 1))
        .collect();
    let edges = class_edges
        .into_iter()
        .map(|(u, v)| (renumber[&u], renumber[&v]))
        .collect();
    Tag::new_unchecked(survivors.len() as u32, edges)
}

fn check_capacity(t: &Tag, capacity: usize) -> Result<(), CapacityError> {
    let effective = capacity.min(HARD_EDGE_LIMIT);
    if t.edge_count() > effective {
        return Err(CapacityError {
            operation: "subset expansion",
            size: t.edge_count(),
            capacity: effective,
        });
    }
    Ok(())
}

fn mask_indices(mask: u64, edge_count: usize) -> Vec<usize> {
    (0..edge_count).filter(|i| mask >> i & 1 == 1).collect()
}

/// The coproduct: the sum of `subgraph(s) (x) contract(s)` over all
/// `2^edge_count` edge subsets `s`, collected on canonical classes. Uses the
/// default capacity.
pub fn coproduct(t: &Tag) -> Result<TensorComb, CapacityError> {
    coproduct_with_capacity(t, DEFAULT_EDGE_CAPACITY)
}

/// [`coproduct`] with an explicit edge-count capacity.
pub fn coproduct_with_capacity(t: &Tag, capacity: usize) -> Result<TensorComb, CapacityError> {
    check_capacity(t, capacity)?;
    let m = t.edge_count();
    let mut out = TensorComb::zero();
    for mask in 0..(1u64 << m) {
        let selected = mask_indices(mask, m);
        let left = subgraph_indices(t, &selected);
        let right = contract_indices(t, &selected);
        out.add_term(
            (left.canonical_key(), right.canonical_key()),
            Coefficient::one(),
        );
    }
    Ok(out)
}

/// Linear extension of the coproduct.
pub fn coproduct_lin(c: &LinComb, capacity: usize) -> Result<TensorComb, CapacityError> {
    c.try_flat_map(|k| coproduct_with_capacity(k.tag(), capacity))
}

/// The counit: 1 on the empty graph, 0 on everything else.
pub fn counit(t: &Tag) -> Coefficient {
    if t.is_unit() {
        Coefficient::one()
    } else {
        num_traits::Zero::zero()
    }
}

/// Linear extension of the counit: the coefficient of the empty graph.
pub fn counit_lin(c: &LinComb) -> Coefficient {
    c.coefficient(&Tag::unit().canonical_key())
}

/// The coproduct with the two trivial terms `t (x) 1` and `1 (x) t`
/// removed; only proper nonempty edge subsets contribute. Defined for
/// non-unit tags.
pub fn reduced_coproduct(t: &Tag) -> Result<TensorComb, HopfError> {
    reduced_coproduct_with_capacity(t, DEFAULT_EDGE_CAPACITY)
}

/// [`reduced_coproduct`] with an explicit capacity.
pub fn reduced_coproduct_with_capacity(
    t: &Tag,
    capacity: usize,
) -> Result<TensorComb, HopfError> {
    if t.is_unit() {
        return Err(HopfError::ReducedUnit);
    }
    let mut out = coproduct_with_capacity(t, capacity)?;
    let unit = Tag::unit().canonical_key();
    let key = t.canonical_key();
    out.add_term((key.clone(), unit.clone()), -Coefficient::one());
    out.add_term((unit, key), -Coefficient::one());
    Ok(out)
}

/// The antipode, by the recursion on subgraphs:
///
/// ```text
/// S(1) = 1
/// S(t) = -t - sum over proper nonempty edge subsets s of
///              S(subgraph(s)) * contract(s)
/// ```
///
/// Subgraphs of proper subsets have strictly fewer edges, so the recursion
/// terminates; intermediate results are memoized on canonical classes.
pub fn antipode(t: &Tag) -> Result<LinComb, CapacityError> {
    antipode_with_capacity(t, DEFAULT_EDGE_CAPACITY)
}

/// [`antipode`] with an explicit capacity.
pub fn antipode_with_capacity(t: &Tag, capacity: usize) -> Result<LinComb, CapacityError> {
    let mut memo = HashMap::new();
    antipode_memo(&t.canonical_key(), capacity, &mut memo)
}

fn antipode_memo(
    key: &CanonicalKey,
    capacity: usize,
    memo: &mut HashMap<CanonicalKey, LinComb>,
) -> Result<LinComb, CapacityError> {
    if key.is_unit() {
        return Ok(LinComb::singleton(key.clone()));
    }
    if let Some(hit) = memo.get(key) {
        return Ok(hit.clone());
    }
    let t = key.tag();
    check_capacity(t, capacity)?;
    let m = t.edge_count();

    let mut acc = LinComb::zero();
    acc.add_term(key.clone(), -Coefficient::one());
    for mask in 1..(1u64 << m) - 1 {
        let selected = mask_indices(mask, m);
        let sub = subgraph_indices(t, &selected).canonical_key();
        let quotient = contract_indices(t, &selected);
        let s_sub = antipode_memo(&sub, capacity, memo)?;
        for (k, c) in s_sub.iter() {
            acc.add_tag(&product(k.tag(), &quotient), -c.clone());
        }
    }
    memo.insert(key.clone(), acc.clone());
    Ok(acc)
}

/// The antipode, by the dual recursion on contractions:
///
/// ```text
/// S(1) = 1
/// S(t) = -t - sum over proper nonempty edge subsets s of
///              subgraph(s) * S(contract(s))
/// ```
///
/// Contractions of nonempty subsets have strictly fewer edges. Agreement
/// with [`antipode`] is a theorem, not a definition — both are computed
/// independently so that they can be checked against each other.
pub fn antipode_alt(t: &Tag) -> Result<LinComb, CapacityError> {
    antipode_alt_with_capacity(t, DEFAULT_EDGE_CAPACITY)
}

/// [`antipode_alt`] with an explicit capacity.
pub fn antipode_alt_with_capacity(t: &Tag, capacity: usize) -> Result<LinComb, CapacityError> {
    let mut memo = HashMap::new();
    antipode_alt_memo(&t.canonical_key(), capacity, &mut memo)
}

fn antipode_alt_memo(
    key: &CanonicalKey,
    capacity: usize,
    memo: &mut HashMap<CanonicalKey, LinComb>,
) -> Result<LinComb, CapacityError> {
    if key.is_unit() {
        return Ok(LinComb::singleton(key.clone()));
    }
    if let Some(hit) = memo.get(key) {
        return Ok(hit.clone());
    }
    let t = key.tag();
    check_capacity(t, capacity)?;
    let m = t.edge_count();

    let mut acc = LinComb::zero();
    acc.add_term(key.clone(), -Coefficient::one());
    for mask in 1..(1u64 << m) - 1 {
        let selected = mask_indices(mask, m);
        let sub = subgraph_indices(t, &selected);
        let quotient = contract_indices(t, &selected).canonical_key();
        let s_quot = antipode_alt_memo(&quotient, capacity, memo)?;
        for (k, c) in s_quot.iter() {
            acc.add_tag(&product(&sub, k.tag()), -c.clone());
        }
    }
    memo.insert(key.clone(), acc.clone());
    Ok(acc)
}

/// Linear extension of the antipode; one memo table serves all terms.
pub fn antipode_lin(c: &LinComb, capacity: usize) -> Result<LinComb, CapacityError> {
    let mut memo = HashMap::new();
    c.try_flat_map(|k| antipode_memo(k, capacity, &mut memo))
}
