//! A pluggable bundle of the structural operations, so the axiom checks can
//! run unchanged against the real implementation and against deliberately
//! broken ones.
//!
//! The mutants exist to test the tests: each one is a small, plausible
//! implementation mistake, and the axiom suite must catch every one of
//! them. If a mutant slips through, the checks were too weak.

use crate::algebra::TensorComb;
use crate::graph::{Tag, UnionFind};
use crate::hopf::{contract_indices, coproduct_with_capacity, subgraph_indices};
use crate::CapacityError;

type ProductFn = Box<dyn Fn(&Tag, &Tag) -> Tag>;
type CoproductFn = Box<dyn Fn(&Tag, usize) -> Result<TensorComb, CapacityError>>;

/// The product and coproduct of one (possibly broken) implementation.
pub struct HopfModel {
    pub name: &'static str,
    product: ProductFn,
    coproduct: CoproductFn,
}

impl HopfModel {
    /// The real operations, exactly as the library exports them.
    pub fn standard() -> Self {
        HopfModel {
            name: "standard",
            product: Box::new(|a, b| crate::algebra::product(a, b)),
            coproduct: Box::new(coproduct_with_capacity),
        }
    }

    /// Mutant: the product concatenates edge sequences without shifting the
    /// second factor's vertices, silently gluing the factors together.
    pub fn mutant_unshifted_product() -> Self {
        HopfModel {
            name: "mutant-unshifted-product",
            product: Box::new(|a, b| {
                let mut edges = a.edges().to_vec();
                edges.extend_from_slice(b.edges());
                Tag::new_unchecked(a.vertex_count().max(b.vertex_count()), edges)
            }),
            coproduct: Box::new(coproduct_with_capacity),
        }
    }

    /// Mutant: the coproduct's subset loop starts at the first nonempty
    /// subset, losing the `1 (x) t` term (and all of `coproduct(1)`).
    pub fn mutant_skip_empty_subset() -> Self {
        HopfModel {
            name: "mutant-skip-empty-subset",
            product: Box::new(|a, b| crate::algebra::product(a, b)),
            coproduct: Box::new(|t, capacity| {
                let m = t.edge_count();
                let effective = capacity.min(63);
                if m > effective {
                    return Err(CapacityError {
                        operation: "subset expansion",
                        size: m,
                        capacity: effective,
                    });
                }
                let mut out = TensorComb::zero();
                for mask in 1..(1u64 << m) {
                    let selected: Vec<usize> =
                        (0..m).filter(|i| mask >> i & 1 == 1).collect();
                    let left = subgraph_indices(t, &selected);
                    let right = contract_indices(t, &selected);
                    out.add_term(
                        (left.canonical_key(), right.canonical_key()),
                        crate::algebra::coeff(1),
                    );
                }
                Ok(out)
            }),
        }
    }

    /// Mutant: contraction keeps every merged class as a vertex, even when
    /// nothing incident survives, so fully contracted components leave
    /// isolated vertices behind instead of vanishing.
    pub fn mutant_contract_keeps_isolated() -> Self {
        HopfModel {
            name: "mutant-contract-keeps-isolated",
            product: Box::new(|a, b| crate::algebra::product(a, b)),
            coproduct: Box::new(|t, capacity| {
                let m = t.edge_count();
                let effective = capacity.min(63);
                if m > effective {
                    return Err(CapacityError {
                        operation: "subset expansion",
                        size: m,
                        capacity: effective,
                    });
                }
                let mut out = TensorComb::zero();
                for mask in 0..(1u64 << m) {
                    let selected: Vec<usize> =
                        (0..m).filter(|i| mask >> i & 1 == 1).collect();
                    let left = subgraph_indices(t, &selected);
                    let right = contract_keeping_isolated(t, &selected);
                    out.add_term(
                        (left.canonical_key(), right.canonical_key()),
                        crate::algebra::coeff(1),
                    );
                }
                Ok(out)
            }),
        }
    }

    /// Every mutant, for suites that must catch them all.
    pub fn mutants() -> Vec<HopfModel> {
        vec![
            HopfModel::mutant_unshifted_product(),
            HopfModel::mutant_skip_empty_subset(),
            HopfModel::mutant_contract_keeps_isolated(),
        ]
    }

    pub fn product(&self, a: &Tag, b: &Tag) -> Tag {
        (self.product)(a, b)
    }

    pub fn coproduct(&self, t: &Tag, capacity: usize) -> Result<TensorComb, CapacityError> {
        (self.coproduct)(t, capacity)
    }
}

/// The broken contraction for [`HopfModel::mutant_contract_keeps_isolated`]:
/// identical to the real one except that *all* merged classes survive.
fn contract_keeping_isolated(host: &Tag, selected: &[usize]) -> Tag {
    let n = host.vertex_count() as usize;
    let mut uf = UnionFind::new(n + 1);
    let mut is_selected = vec![false; host.edge_count()];
    for &i in selected {
        is_selected[i] = true;
        let (u, v) = host.edges()[i];
        uf.union(u as usize, v as usize);
    }
    let mut roots: Vec<u32> = (1..=n).map(|w| uf.find(w) as u32).collect();
    roots.sort_unstable();
    roots.dedup();
    let renumber: std::collections::HashMap<u32, u32> = roots
        .iter()
        .enumerate()
        .map(|(fresh, &root)| (root, fresh as u32 + 1))
        .collect();
    let mut edges = Vec::new();
    for (i, &(u, v)) in host.edges().iter().enumerate() {
        if is_selected[i] {
            continue;
        }
        let ru = renumber[&(uf.find(u as usize) as u32)];
        let rv = renumber[&(uf.find(v as usize) as u32)];
        edges.push((ru.min(rv), ru.max(rv)));
    }
    // deliberately wrong: vertex count includes classes with no edges left
    Tag::new_unchecked(roots.len() as u32, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tag(vertex_count: u32, edges: &[(u32, u32)]) -> Tag {
        Tag::new(vertex_count, edges.iter().copied()).unwrap()
    }

    #[test]
    fn standard_model_matches_the_library() {
        let model = HopfModel::standard();
        let edge = tag(2, &[(1, 2)]);
        let bubble = tag(2, &[(1, 2), (1, 2)]);
        assert_eq!(
            model.product(&edge, &bubble),
            crate::algebra::product(&edge, &bubble)
        );
        assert_eq!(
            model.coproduct(&bubble, 20).unwrap(),
            crate::hopf::coproduct(&bubble).unwrap()
        );
    }

    #[test]
    fn unshifted_product_glues_factors() {
        let model = HopfModel::mutant_unshifted_product();
        let edge = tag(2, &[(1, 2)]);
        // edge * edge comes out as a bubble instead of a matching
        assert_eq!(model.product(&edge, &edge), tag(2, &[(1, 2), (1, 2)]));
    }

    #[test]
    fn skip_empty_subset_loses_one_term() {
        let model = HopfModel::mutant_skip_empty_subset();
        let edge = tag(2, &[(1, 2)]);
        let broken = model.coproduct(&edge, 20).unwrap();
        let unit = Tag::unit().canonical_key();
        assert_eq!(broken.coefficient(&(unit.clone(), edge.canonical_key())), crate::algebra::coeff(0));
        assert_eq!(broken.coefficient(&(edge.canonical_key(), unit)), crate::algebra::coeff(1));
        assert!(model.coproduct(&Tag::unit(), 20).unwrap().is_zero());
    }

    #[test]
    fn isolated_keeping_contraction_leaves_ghost_vertices() {
        let t = tag(2, &[(1, 2)]);
        let ghost = contract_keeping_isolated(&t, &[0]);
        assert_eq!(ghost.vertex_count(), 1);
        assert_eq!(ghost.edge_count(), 0);
        assert!(!ghost.is_unit());
    }
}
