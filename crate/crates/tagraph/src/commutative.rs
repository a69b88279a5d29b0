//! The commutative counterpart: unordered multigraphs and the projection
//! that forgets the edge order.
//!
//! A [`BareGraph`] is a tag without the total order — its edges form a
//! multiset. Disjoint union, edge-subset coproduct, counit, and antipode are
//! implemented here **directly on bare graphs**, not by delegating to the
//! ordered operations, so that the morphism laws of the projection can be
//! checked between two independent routes.
//!
//! Bare isomorphism may permute edges freely, so canonical forms are harder
//! than in the ordered case; [`BareGraph::canonical_key`] bounds its search
//! to graphs of at most [`BARE_VERTEX_CAPACITY`] vertices.

use std::fmt;
use std::str::FromStr;

use num_traits::One;

use crate::algebra::{Coefficient, Combination, LinComb, TensorComb, TermKey};
use crate::graph::{parse_graph_body, ParseError, Tag, TagError};
use crate::CapacityError;

/// Vertex bound for [`BareGraph::canonical_key`]; the minimization is over
/// vertex orderings and degenerates factorially past desk scale.
pub const BARE_VERTEX_CAPACITY: u32 = 10;

/// An unordered multigraph: vertices `1..=vertex_count`, no isolated
/// vertices, edges a multiset (stored sorted).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BareGraph {
    vertex_count: u32,
    edges: Vec<(u32, u32)>,
}

/// Combination over bare graph classes.
pub type BareLinComb = Combination<BareKey>;

/// Combination over pairs of bare graph classes.
pub type BareTensorComb = Combination<(BareKey, BareKey)>;

impl BareGraph {
    /// Builds a bare graph; edge order and endpoint orientation in the input
    /// are irrelevant.
    pub fn new(
        vertex_count: u32,
        edges: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<Self, TagError> {
        let mut seen = vec![false; vertex_count as usize + 1];
        let mut normalized = Vec::new();
        for (i, (u, v)) in edges.into_iter().enumerate() {
            for endpoint in [u, v] {
                if endpoint == 0 || endpoint > vertex_count {
                    return Err(TagError::EndpointOutOfRange {
                        position: i + 1,
                        endpoint,
                        vertex_count,
                    });
                }
                seen[endpoint as usize] = true;
            }
            normalized.push((u.min(v), u.max(v)));
        }
        for vertex in 1..=vertex_count {
            if !seen[vertex as usize] {
                return Err(TagError::IsolatedVertex { vertex });
            }
        }
        normalized.sort_unstable();
        Ok(BareGraph {
            vertex_count,
            edges: normalized,
        })
    }

    fn from_sorted(vertex_count: u32, mut edges: Vec<(u32, u32)>) -> Self {
        edges.sort_unstable();
        BareGraph {
            vertex_count,
            edges,
        }
    }

    pub fn unit() -> Self {
        BareGraph {
            vertex_count: 0,
            edges: Vec::new(),
        }
    }

    pub fn is_unit(&self) -> bool {
        self.edges.is_empty() && self.vertex_count == 0
    }

    pub fn vertex_count(&self) -> u32 {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// The edge multiset, sorted.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn degree(&self) -> usize {
        self.edges.len()
    }

    /// Parses `b{<vertex_count>;(u,v)(u,v)...}`; whitespace, edge order and
    /// endpoint orientation are insignificant.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let (vertex_count, edges) = parse_graph_body(text, 'b')?;
        Ok(BareGraph::new(vertex_count, edges)?)
    }

    /// The canonical representative of this graph's isomorphism class: the
    /// vertex renumbering whose multiplicity profile — each vertex's edge
    /// multiplicities towards the vertices before it, then its loop count —
    /// is lexicographically smallest. Errors past [`BARE_VERTEX_CAPACITY`]
    /// vertices.
    pub fn canonical_key(&self) -> Result<BareKey, CapacityError> {
        if self.vertex_count > BARE_VERTEX_CAPACITY {
            return Err(CapacityError {
                operation: "bare canonical form",
                size: self.vertex_count as usize,
                capacity: BARE_VERTEX_CAPACITY as usize,
            });
        }
        let n = self.vertex_count as usize;
        if n == 0 {
            return Ok(BareKey(self.clone()));
        }

        let mut mult = vec![vec![0u32; n + 1]; n + 1];
        for &(u, v) in &self.edges {
            mult[u as usize][v as usize] += 1;
            if u != v {
                mult[v as usize][u as usize] += 1;
            }
        }

        // Branch and bound over vertex placements: every surviving state is
        // a partial ordering realizing the minimal profile so far.
        let mut states: Vec<Vec<usize>> = vec![Vec::new()];
        for level in 0..n {
            let mut best_row: Option<Vec<u32>> = None;
            let mut next: Vec<Vec<usize>> = Vec::new();
            for state in &states {
                for u in 1..=n {
                    if state.contains(&u) {
                        continue;
                    }
                    let mut row: Vec<u32> =
                        state.iter().map(|&placed| mult[u][placed]).collect();
                    row.push(mult[u][u]);
                    debug_assert_eq!(row.len(), level + 1);
                    match &best_row {
                        Some(best) if row > *best => continue,
                        Some(best) if row == *best => {}
                        _ => {
                            best_row = Some(row);
                            next.clear();
                        }
                    }
                    let mut extended = state.clone();
                    extended.push(u);
                    next.push(extended);
                }
            }
            states = next;
        }

        let placement = &states[0];
        let mut renumber = vec![0u32; n + 1];
        for (fresh, &original) in placement.iter().enumerate() {
            renumber[original] = fresh as u32 + 1;
        }
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (u, v) = (renumber[u as usize], renumber[v as usize]);
                (u.min(v), u.max(v))
            })
            .collect();
        Ok(BareKey(BareGraph::from_sorted(self.vertex_count, edges)))
    }

    /// True iff some vertex bijection carries one edge multiset onto the
    /// other. Subject to the canonical-form vertex capacity.
    pub fn is_isomorphic(&self, other: &BareGraph) -> Result<bool, CapacityError> {
        Ok(self.canonical_key()? == other.canonical_key()?)
    }
}

impl PartialOrd for BareGraph {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Same graded scheme as ordered tags: degree, then vertex count, then edges.
impl Ord for BareGraph {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.edges
            .len()
            .cmp(&other.edges.len())
            .then_with(|| self.vertex_count.cmp(&other.vertex_count))
            .then_with(|| self.edges.cmp(&other.edges))
    }
}

impl fmt::Display for BareGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b{{{};", self.vertex_count)?;
        for &(u, v) in &self.edges {
            write!(f, "({},{})", u, v)?;
        }
        write!(f, "}}")
    }
}

impl FromStr for BareGraph {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BareGraph::parse(s)
    }
}

/// Canonical representative of a bare isomorphism class.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BareKey(BareGraph);

impl BareKey {
    pub fn graph(&self) -> &BareGraph {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.degree()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_unit()
    }
}

impl fmt::Display for BareKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl TermKey for BareKey {
    fn fmt_key(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Forgets the edge order of a tag.
pub fn forget(t: &Tag) -> BareGraph {
    BareGraph::from_sorted(t.vertex_count(), t.edges().to_vec())
}

/// The projection onto the commutative algebra, extended linearly: each
/// class maps to the class of its order-forgotten graph. Distinct ordered
/// classes can merge.
pub fn project(c: &LinComb) -> Result<BareLinComb, CapacityError> {
    let mut out = BareLinComb::zero();
    for (k, coefficient) in c.iter() {
        out.add_term(forget(k.tag()).canonical_key()?, coefficient.clone());
    }
    Ok(out)
}

/// [`project`] on both legs of a rank-two tensor.
pub fn project_tensor(c: &TensorComb) -> Result<BareTensorComb, CapacityError> {
    let mut out = BareTensorComb::zero();
    for ((l, r), coefficient) in c.iter() {
        out.add_term(
            (
                forget(l.tag()).canonical_key()?,
                forget(r.tag()).canonical_key()?,
            ),
            coefficient.clone(),
        );
    }
    Ok(out)
}

/// Disjoint union of bare graphs; commutative up to isomorphism.
pub fn bare_product(a: &BareGraph, b: &BareGraph) -> BareGraph {
    let shift = a.vertex_count;
    let mut edges = a.edges.clone();
    edges.extend(b.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
    BareGraph::from_sorted(a.vertex_count + b.vertex_count, edges)
}

/// Bilinear extension of [`bare_product`].
pub fn bare_product_lin(
    a: &BareLinComb,
    b: &BareLinComb,
) -> Result<BareLinComb, CapacityError> {
    let mut out = BareLinComb::zero();
    for (ka, ca) in a.iter() {
        for (kb, cb) in b.iter() {
            out.add_term(
                bare_product(ka.graph(), kb.graph()).canonical_key()?,
                ca * cb,
            );
        }
    }
    Ok(out)
}

fn bare_subgraph(host: &BareGraph, selected: &[usize]) -> BareGraph {
    let mut vertices: Vec<u32> = selected
        .iter()
        .flat_map(|&i| {
            let (u, v) = host.edges[i];
            [u, v]
        })
        .collect();
    vertices.sort_unstable();
    vertices.dedup();
    let position = |w: u32| vertices.binary_search(&w).unwrap() as u32 + 1;
    let edges = selected
        .iter()
        .map(|&i| {
            let (u, v) = host.edges[i];
            (position(u), position(v))
        })
        .collect();
    BareGraph::from_sorted(vertices.len() as u32, edges)
}

fn bare_contract(host: &BareGraph, selected: &[usize]) -> BareGraph {
    let n = host.vertex_count as usize;
    let mut uf = crate::graph::UnionFind::new(n + 1);
    let mut is_selected = vec![false; host.edge_count()];
    for &i in selected {
        is_selected[i] = true;
        let (u, v) = host.edges[i];
        uf.union(u as usize, v as usize);
    }
    let mut class_edges = Vec::new();
    for (i, &(u, v)) in host.edges.iter().enumerate() {
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
    let position = |w: u32| survivors.binary_search(&w).unwrap() as u32 + 1;
    let edges = class_edges
        .into_iter()
        .map(|(u, v)| (position(u), position(v)))
        .collect();
    BareGraph::from_sorted(survivors.len() as u32, edges)
}

/// The bare coproduct: the same edge-subset sum as the ordered coproduct,
/// over the stored edge list, with both legs taken as bare classes.
pub fn bare_coproduct(
    g: &BareGraph,
    capacity: usize,
) -> Result<BareTensorComb, CapacityError> {
    let m = g.edge_count();
    let effective = capacity.min(63);
    if m > effective {
        return Err(CapacityError {
            operation: "bare subset expansion",
            size: m,
            capacity: effective,
        });
    }
    let mut out = BareTensorComb::zero();
    for mask in 0..(1u64 << m) {
        let selected: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
        out.add_term(
            (
                bare_subgraph(g, &selected).canonical_key()?,
                bare_contract(g, &selected).canonical_key()?,
            ),
            Coefficient::one(),
        );
    }
    Ok(out)
}

/// The bare counit: 1 on the empty graph, 0 otherwise.
pub fn bare_counit(g: &BareGraph) -> Coefficient {
    if g.is_unit() {
        Coefficient::one()
    } else {
        num_traits::Zero::zero()
    }
}

/// The bare antipode, by the recursion on subgraphs over proper nonempty
/// edge subsets; memoized on bare canonical classes.
pub fn bare_antipode(g: &BareGraph, capacity: usize) -> Result<BareLinComb, CapacityError> {
    let mut memo = std::collections::HashMap::new();
    bare_antipode_memo(&g.canonical_key()?, capacity, &mut memo)
}

fn bare_antipode_memo(
    key: &BareKey,
    capacity: usize,
    memo: &mut std::collections::HashMap<BareKey, BareLinComb>,
) -> Result<BareLinComb, CapacityError> {
    if key.is_unit() {
        return Ok(BareLinComb::singleton(key.clone()));
    }
    if let Some(hit) = memo.get(key) {
        return Ok(hit.clone());
    }
    let g = key.graph();
    let m = g.edge_count();
    let effective = capacity.min(63);
    if m > effective {
        return Err(CapacityError {
            operation: "bare subset expansion",
            size: m,
            capacity: effective,
        });
    }

    let mut acc = BareLinComb::zero();
    acc.add_term(key.clone(), -Coefficient::one());
    for mask in 1..(1u64 << m) - 1 {
        let selected: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
        let sub = bare_subgraph(g, &selected).canonical_key()?;
        let quotient = bare_contract(g, &selected);
        let s_sub = bare_antipode_memo(&sub, capacity, memo)?;
        for (k, c) in s_sub.iter() {
            acc.add_term(
                bare_product(k.graph(), &quotient).canonical_key()?,
                -c.clone(),
            );
        }
    }
    memo.insert(key.clone(), acc.clone());
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::coeff;

    fn bare(vertex_count: u32, edges: &[(u32, u32)]) -> BareGraph {
        BareGraph::new(vertex_count, edges.iter().copied()).unwrap()
    }

    fn tag(vertex_count: u32, edges: &[(u32, u32)]) -> Tag {
        Tag::new(vertex_count, edges.iter().copied()).unwrap()
    }

    #[test]
    fn stores_edges_sorted() {
        let g = bare(3, &[(2, 3), (1, 2)]);
        assert_eq!(g.edges(), &[(1, 2), (2, 3)]);
        assert_eq!(g.to_string(), "b{3;(1,2)(2,3)}");
    }

    #[test]
    fn parses_bare_graphs() {
        assert_eq!(
            BareGraph::parse("b{2;(2,1)(1,2)}").unwrap(),
            bare(2, &[(1, 2), (1, 2)])
        );
        assert!(BareGraph::parse("b{0;}").unwrap().is_unit());
        assert!(BareGraph::parse("g{0;}").is_err());
        assert!(BareGraph::parse("b{3;(1,2)}").is_err());
    }

    #[test]
    fn canonicalizes_paths() {
        let a = bare(3, &[(1, 3), (1, 2)]).canonical_key().unwrap();
        let b = bare(3, &[(1, 2), (2, 3)]).canonical_key().unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn distinguishes_path_from_matching_plus_loop() {
        let path = bare(3, &[(1, 2), (2, 3)]);
        let other = bare(3, &[(1, 2), (3, 3)]);
        assert!(!path.is_isomorphic(&other).unwrap());
    }

    #[test]
    fn canonical_form_is_idempotent() {
        for g in [
            bare(4, &[(1, 2), (3, 4), (2, 3), (1, 1)]),
            bare(3, &[(1, 2), (1, 2), (2, 3)]),
            bare(5, &[(1, 5), (2, 4), (3, 3), (1, 2)]),
        ] {
            let once = g.canonical_key().unwrap();
            let twice = once.graph().canonical_key().unwrap();
            assert_eq!(once, twice);
        }
    }

    #[test]
    fn canonical_form_respects_vertex_capacity() {
        let cycle: Vec<(u32, u32)> = (1..=11).map(|i| (i, if i == 11 { 1 } else { i + 1 })).collect();
        let big = bare(11, &cycle);
        let err = big.canonical_key().unwrap_err();
        assert_eq!(err.size, 11);
        assert_eq!(err.capacity, 10);
    }

    #[test]
    fn forget_drops_the_order() {
        let a = tag(4, &[(1, 2), (2, 3), (3, 4)]);
        let b = tag(4, &[(1, 2), (3, 4), (2, 3)]);
        assert_ne!(a.canonical_key(), b.canonical_key());
        assert_eq!(
            forget(&a).canonical_key().unwrap(),
            forget(&b).canonical_key().unwrap()
        );
    }

    #[test]
    fn projection_merges_orderings() {
        let mut c = LinComb::zero();
        c.add_tag(&tag(4, &[(1, 2), (2, 3), (3, 4)]), coeff(1));
        c.add_tag(&tag(4, &[(1, 2), (3, 4), (2, 3)]), coeff(1));
        assert_eq!(c.term_count(), 2);
        let projected = project(&c).unwrap();
        assert_eq!(projected.term_count(), 1);
        assert_eq!(
            projected.coefficient(
                &bare(4, &[(1, 2), (2, 3), (3, 4)]).canonical_key().unwrap()
            ),
            coeff(2)
        );
    }

    #[test]
    fn bare_product_is_commutative_up_to_isomorphism() {
        let edge = bare(2, &[(1, 2)]);
        let bubble = bare(2, &[(1, 2), (1, 2)]);
        let ab = bare_product(&edge, &bubble);
        let ba = bare_product(&bubble, &edge);
        assert_ne!(ab, ba);
        assert!(ab.is_isomorphic(&ba).unwrap());
    }

    #[test]
    fn bare_coproduct_of_the_bubble() {
        let bubble = bare(2, &[(1, 2), (1, 2)]);
        let delta = bare_coproduct(&bubble, 20).unwrap();
        assert_eq!(delta.term_count(), 3);
        assert_eq!(
            delta.coefficient(&(
                bare(2, &[(1, 2)]).canonical_key().unwrap(),
                bare(1, &[(1, 1)]).canonical_key().unwrap()
            )),
            coeff(2)
        );
    }

    #[test]
    fn bare_antipode_of_the_bubble() {
        let bubble = bare(2, &[(1, 2), (1, 2)]);
        let s = bare_antipode(&bubble, 20).unwrap();
        // the second term is an edge next to a loop; its canonical relabelling
        // puts the looped vertex second
        assert_eq!(
            s.to_string(),
            "-1 * b{2;(1,2)(1,2)} + 2 * b{3;(1,3)(2,2)}"
        );
    }

    #[test]
    fn bare_counit_examples() {
        assert_eq!(bare_counit(&BareGraph::unit()), coeff(1));
        assert_eq!(bare_counit(&bare(2, &[(1, 2)])), coeff(0));
    }

    #[test]
    fn projection_identifies_the_product_witness() {
        let edge = tag(2, &[(1, 2)]);
        let bubble = tag(2, &[(1, 2), (1, 2)]);
        let ab = crate::algebra::product(&edge, &bubble);
        let ba = crate::algebra::product(&bubble, &edge);
        assert!(!ab.is_isomorphic(&ba));
        assert!(forget(&ab).is_isomorphic(&forget(&ba)).unwrap());
    }
}
