//! Brute-force reference implementations. Each is written to be obviously
//! correct and exhaustively slow; the fast library operations are checked
//! against them on small inputs.

use crate::commutative::BareGraph;
use crate::graph::{EdgeSubset, Tag, UnionFind};

/// Largest vertex count the permutation oracles accept (`8! = 40320`).
pub const ORACLE_VERTEX_CAPACITY: u32 = 8;

fn permutations(n: usize) -> Vec<Vec<u32>> {
    // perm[old - 1] = new; all n! of them
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::with_capacity(n);
    let mut free = vec![true; n + 1];
    fn go(n: usize, current: &mut Vec<u32>, free: &mut Vec<bool>, out: &mut Vec<Vec<u32>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for w in 1..=n as u32 {
            if free[w as usize] {
                free[w as usize] = false;
                current.push(w);
                go(n, current, free, out);
                current.pop();
                free[w as usize] = true;
            }
        }
    }
    go(n, &mut current, &mut free, &mut out);
    out
}

/// Minimal edge sequence over all `n!` vertex renumberings. Must agree with
/// [`Tag::canonical_key`].
pub fn brute_force_canonical(t: &Tag) -> Tag {
    assert!(
        t.vertex_count() <= ORACLE_VERTEX_CAPACITY,
        "permutation oracle is factorial; got {} vertices",
        t.vertex_count()
    );
    let n = t.vertex_count() as usize;
    let mut best: Option<Vec<(u32, u32)>> = None;
    for perm in permutations(n) {
        let relabelled: Vec<(u32, u32)> = t
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (u, v) = (perm[u as usize - 1], perm[v as usize - 1]);
                (u.min(v), u.max(v))
            })
            .collect();
        if best.as_ref().map_or(true, |b| relabelled < *b) {
            best = Some(relabelled);
        }
    }
    Tag::new_unchecked(t.vertex_count(), best.unwrap_or_default())
}

/// Minimal sorted edge multiset over all renumberings. Must agree with
/// [`BareGraph::canonical_key`] up to isomorphism-class identity: two bare
/// graphs get the same oracle form iff some renumbering maps one onto the
/// other.
pub fn brute_force_bare_canonical(g: &BareGraph) -> Vec<(u32, u32)> {
    assert!(
        g.vertex_count() <= ORACLE_VERTEX_CAPACITY,
        "permutation oracle is factorial; got {} vertices",
        g.vertex_count()
    );
    let n = g.vertex_count() as usize;
    let mut best: Option<Vec<(u32, u32)>> = None;
    for perm in permutations(n) {
        let mut relabelled: Vec<(u32, u32)> = g
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (u, v) = (perm[u as usize - 1], perm[v as usize - 1]);
                (u.min(v), u.max(v))
            })
            .collect();
        relabelled.sort_unstable();
        if best.as_ref().map_or(true, |b| relabelled < *b) {
            best = Some(relabelled);
        }
    }
    best.unwrap_or_default()
}

/// Whether the edge positions in `subset` form a spanning forest of `host`:
/// acyclic, and connecting exactly what the full graph connects.
pub fn is_spanning_forest(host: &Tag, subset: &EdgeSubset) -> bool {
    let n = host.vertex_count() as usize;
    let mut uf = UnionFind::new(n + 1);
    for position in subset.positions() {
        let (u, v) = host.edges()[position - 1];
        if uf.find(u as usize) == uf.find(v as usize) {
            return false; // cycle (self-loops included)
        }
        uf.union(u as usize, v as usize);
    }
    // same partition as the full graph
    for &(u, v) in host.edges() {
        if uf.find(u as usize) != uf.find(v as usize) {
            return false;
        }
    }
    true
}

/// All spanning forests by scanning every edge subset, then the one whose
/// sorted position sequence is lexicographically smallest. Returns that
/// forest and whether it is also the unique minimizer of total position
/// weight — distinct positions make weight ties impossible, and the flag
/// guards that argument at runtime. Must agree with
/// [`Tag::min_spanning_forest`].
pub fn brute_force_min_spanning_forest(host: &Tag) -> (EdgeSubset, bool) {
    let m = host.edge_count();
    assert!(m <= 16, "subset oracle is exponential; got {} edges", m);
    let mut lex_best: Option<Vec<usize>> = None;
    let mut weight_best: Option<(usize, Vec<usize>)> = None;
    let mut weight_unique = true;
    for mask in 0..(1u64 << m) {
        let subset = EdgeSubset::from_mask(mask);
        if !is_spanning_forest(host, &subset) {
            continue;
        }
        let sequence: Vec<usize> = subset.positions().collect();
        let weight: usize = sequence.iter().sum();
        match &weight_best {
            Some((w, _)) if weight > *w => {}
            Some((w, _)) if weight == *w => weight_unique = false,
            _ => {
                weight_best = Some((weight, sequence.clone()));
                weight_unique = true;
            }
        }
        if lex_best.as_ref().map_or(true, |b| sequence < *b) {
            lex_best = Some(sequence);
        }
    }
    let lex = lex_best.expect("every graph has a spanning forest");
    let (_, by_weight) = weight_best.expect("every graph has a spanning forest");
    let forest = lex.iter().copied().collect();
    (forest, weight_unique && lex == by_weight)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tag(vertex_count: u32, edges: &[(u32, u32)]) -> Tag {
        Tag::new(vertex_count, edges.iter().copied()).unwrap()
    }

    #[test]
    fn permutation_oracle_agrees_on_paths() {
        let shuffled = tag(3, &[(2, 3), (1, 3)]);
        assert_eq!(
            brute_force_canonical(&shuffled),
            shuffled.canonical_key().into_tag()
        );
    }

    #[test]
    fn spanning_forest_oracle_on_the_triangle() {
        let triangle = tag(3, &[(1, 2), (2, 3), (1, 3)]);
        let (forest, unique) = brute_force_min_spanning_forest(&triangle);
        assert!(unique);
        assert_eq!(forest, [1, 2].into_iter().collect());
        assert_eq!(forest, triangle.min_spanning_forest());
    }

    #[test]
    fn spanning_forest_oracle_ignores_loops() {
        let t = tag(2, &[(1, 1), (1, 2), (1, 2)]);
        let (forest, unique) = brute_force_min_spanning_forest(&t);
        assert!(unique);
        assert_eq!(forest, [2].into_iter().collect());
    }

    #[test]
    fn forest_predicate_examples() {
        let triangle = tag(3, &[(1, 2), (2, 3), (1, 3)]);
        assert!(is_spanning_forest(&triangle, &[1, 2].into_iter().collect()));
        assert!(is_spanning_forest(&triangle, &[1, 3].into_iter().collect()));
        // a cycle is not a forest
        assert!(!is_spanning_forest(&triangle, &EdgeSubset::full(3)));
        // too few edges: does not span
        assert!(!is_spanning_forest(&triangle, &[1].into_iter().collect()));
    }
}
