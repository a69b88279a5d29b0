//! Edge-ordered multigraphs ("totally assigned graphs", TAGs) and their
//! canonical forms.
//!
//! A [`Tag`] is a finite multigraph — self-loops and parallel edges allowed,
//! connectivity not required — together with a total order on its edges. The
//! order is stored positionally: the edge at index `i` of the edge sequence
//! carries standard label `i + 1`. Vertices are anonymous; they are numbered
//! `1..=vertex_count` purely for representation, and two tags are considered
//! the same graph when a vertex renumbering maps the edge at each position
//! onto the edge at the same position ([`Tag::is_isomorphic`]).

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A multigraph with a total order on its edges.
///
/// Vertices are `1..=vertex_count`; every vertex is incident to at least one
/// edge (isolated vertices are not representable). The empty tag
/// ([`Tag::unit`]) is the unit of the graph algebra.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tag {
    vertex_count: u32,
    /// Endpoint pairs, each stored with `u <= v`; index = position - 1.
    edges: Vec<(u32, u32)>,
}

/// Construction errors for [`Tag::new`].
#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum TagError {
    #[error("edge {position}: endpoint {endpoint} out of range 1..={vertex_count}")]
    EndpointOutOfRange {
        position: usize,
        endpoint: u32,
        vertex_count: u32,
    },
    #[error("isolated vertex not representable: vertex {vertex} has no incident edge")]
    IsolatedVertex { vertex: u32 },
}

impl Tag {
    /// Builds a tag from a vertex count and an edge sequence; the sequence
    /// order is the edge order. Endpoint pairs may be given in either
    /// orientation and are stored sorted.
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
        Ok(Tag {
            vertex_count,
            edges: normalized,
        })
    }

    /// The empty graph, unit of the product.
    pub fn unit() -> Self {
        Tag {
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

    /// Endpoint pairs in edge order, each with `u <= v`.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// Number of edges; the grading of the graph algebra.
    pub fn degree(&self) -> usize {
        self.edges.len()
    }

    /// Invariant-free constructor for internal callers that build tags which
    /// already satisfy the representation invariants (or deliberately break
    /// them, as the verifier's mutant implementations do).
    pub(crate) fn new_unchecked(vertex_count: u32, edges: Vec<(u32, u32)>) -> Self {
        Tag {
            vertex_count,
            edges,
        }
    }

    /// The canonical representative of this tag's isomorphism class.
    ///
    /// The representative is the lexicographically smallest edge-endpoint
    /// sequence over all vertex renumberings; edge positions never move. The
    /// search walks the edge sequence once, keeping every partial renumbering
    /// that still realizes the minimal prefix, so only genuinely ambiguous
    /// choices branch.
    pub fn canonical_key(&self) -> CanonicalKey {
        let n = self.vertex_count as usize;
        if self.edges.is_empty() {
            return CanonicalKey(self.clone());
        }

        // Last edge index touching each vertex, so renumberings can be
        // forgotten once a vertex no longer occurs.
        let mut last_use = vec![0usize; n + 1];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            last_use[u as usize] = i;
            last_use[v as usize] = i;
        }

        // map[w] = new number of vertex w, 0 while unassigned
        let mut frontier: Vec<Vec<u32>> = vec![vec![0u32; n + 1]];
        let mut used: u32 = 0;
        let mut canonical_edges = Vec::with_capacity(self.edges.len());

        for (i, &(u, v)) in self.edges.iter().enumerate() {
            let (u, v) = (u as usize, v as usize);
            let mut best: Option<(u32, u32)> = None;
            for map in &frontier {
                let enc = match (map[u], map[v]) {
                    (0, 0) if u == v => (used + 1, used + 1),
                    (0, 0) => (used + 1, used + 2),
                    (a, 0) | (0, a) => (a, used + 1),
                    (a, b) => (a.min(b), a.max(b)),
                };
                if best.is_none() || enc < best.unwrap() {
                    best = Some(enc);
                }
            }
            let enc = best.unwrap();

            let mut next: Vec<Vec<u32>> = Vec::new();
            for map in &frontier {
                match (map[u], map[v]) {
                    (0, 0) if u == v => {
                        if enc == (used + 1, used + 1) {
                            let mut m = map.clone();
                            m[u] = used + 1;
                            next.push(m);
                        }
                    }
                    (0, 0) => {
                        if enc == (used + 1, used + 2) {
                            let mut m1 = map.clone();
                            m1[u] = used + 1;
                            m1[v] = used + 2;
                            let mut m2 = map.clone();
                            m2[u] = used + 2;
                            m2[v] = used + 1;
                            next.push(m1);
                            next.push(m2);
                        }
                    }
                    (a, 0) => {
                        if enc == (a, used + 1) {
                            let mut m = map.clone();
                            m[v] = used + 1;
                            next.push(m);
                        }
                    }
                    (0, b) => {
                        if enc == (b, used + 1) {
                            let mut m = map.clone();
                            m[u] = used + 1;
                            next.push(m);
                        }
                    }
                    (a, b) => {
                        if enc == (a.min(b), a.max(b)) {
                            next.push(map.clone());
                        }
                    }
                }
            }

            canonical_edges.push(enc);
            used = used.max(enc.1);

            // Drop assignments of vertices that never occur again, then
            // dedupe; this keeps the frontier small on disjoint unions.
            for map in &mut next {
                for w in 1..=n {
                    if map[w] != 0 && last_use[w] <= i {
                        map[w] = 0;
                    }
                }
            }
            next.sort_unstable();
            next.dedup();
            frontier = next;
        }

        CanonicalKey(Tag {
            vertex_count: self.vertex_count,
            edges: canonical_edges,
        })
    }

    /// True iff a vertex bijection maps the edge at each position of `self`
    /// onto the edge at the same position of `other`.
    pub fn is_isomorphic(&self, other: &Tag) -> bool {
        self.canonical_key() == other.canonical_key()
    }

    /// Connected components, ordered by smallest vertex. The unit has none.
    pub fn connected_components(&self) -> Vec<Component> {
        let n = self.vertex_count as usize;
        let mut uf = UnionFind::new(n + 1);
        for &(u, v) in &self.edges {
            uf.union(u as usize, v as usize);
        }
        let mut components: Vec<Component> = Vec::new();
        let mut index_of_root = vec![usize::MAX; n + 1];
        for vertex in 1..=n {
            let root = uf.find(vertex);
            if index_of_root[root] == usize::MAX {
                index_of_root[root] = components.len();
                components.push(Component::default());
            }
            components[index_of_root[root]].vertices.push(vertex as u32);
        }
        for (i, &(u, _)) in self.edges.iter().enumerate() {
            let root = uf.find(u as usize);
            components[index_of_root[root]].edge_positions.push(i + 1);
        }
        components
    }

    /// The unique minimum spanning forest under the edge order: edges are
    /// scanned in increasing position and kept iff they join two distinct
    /// components. Self-loops never join components and are never selected.
    pub fn min_spanning_forest(&self) -> EdgeSubset {
        let mut uf = UnionFind::new(self.vertex_count as usize + 1);
        let mut forest = EdgeSubset::empty();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if uf.find(u as usize) != uf.find(v as usize) {
                uf.union(u as usize, v as usize);
                forest.insert(i + 1);
            }
        }
        forest
    }

    /// Parses the `g{<vertex_count>;(u,v)(u,v)...}` format and returns the
    /// canonical form of the described tag, so parsing then rendering
    /// canonicalizes. Whitespace is insignificant.
    pub fn parse(text: &str) -> Result<Tag, ParseError> {
        let (vertex_count, edges) = parse_graph_body(text, 'g')?;
        let tag = Tag::new(vertex_count, edges)?;
        Ok(tag.canonical_key().into_tag())
    }
}

impl PartialOrd for Tag {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Tags order by degree first, so linear-combination output groups terms by
/// grading, then by vertex count and edge sequence.
impl Ord for Tag {
    fn cmp(&self, other: &Self) -> Ordering {
        self.edges
            .len()
            .cmp(&other.edges.len())
            .then_with(|| self.vertex_count.cmp(&other.vertex_count))
            .then_with(|| self.edges.cmp(&other.edges))
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g{{{};", self.vertex_count)?;
        for &(u, v) in &self.edges {
            write!(f, "({},{})", u, v)?;
        }
        write!(f, "}}")
    }
}

impl FromStr for Tag {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Tag::parse(s)
    }
}

/// Canonical representative of a tag isomorphism class; the comparable and
/// hashable key under which linear combinations collect terms.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalKey(Tag);

impl CanonicalKey {
    pub fn tag(&self) -> &Tag {
        &self.0
    }

    pub fn into_tag(self) -> Tag {
        self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_unit()
    }

    pub fn degree(&self) -> usize {
        self.0.degree()
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// One connected component: its vertices and the positions of its edges,
/// both ascending.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Component {
    pub vertices: Vec<u32>,
    pub edge_positions: Vec<usize>,
}

/// A set of 1-based edge positions within some host tag.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct EdgeSubset {
    positions: BTreeSet<usize>,
}

/// Errors for edge subsets used against a host tag.
#[derive(Clone, PartialEq, Eq, Debug, Error)]
#[error("edge position {position} out of range 1..={edge_count}")]
pub struct SubsetError {
    pub position: usize,
    pub edge_count: usize,
}

impl EdgeSubset {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Validates each position against the host's edge count.
    pub fn from_positions(
        positions: impl IntoIterator<Item = usize>,
        edge_count: usize,
    ) -> Result<Self, SubsetError> {
        let mut set = BTreeSet::new();
        for position in positions {
            if position == 0 || position > edge_count {
                return Err(SubsetError {
                    position,
                    edge_count,
                });
            }
            set.insert(position);
        }
        Ok(EdgeSubset { positions: set })
    }

    /// All positions `1..=edge_count`.
    pub fn full(edge_count: usize) -> Self {
        EdgeSubset {
            positions: (1..=edge_count).collect(),
        }
    }

    pub(crate) fn from_mask(mask: u64) -> Self {
        EdgeSubset {
            positions: (0..64).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect(),
        }
    }

    pub fn insert(&mut self, position: usize) {
        self.positions.insert(position);
    }

    pub fn contains(&self, position: usize) -> bool {
        self.positions.contains(&position)
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn max_position(&self) -> Option<usize> {
        self.positions.iter().next_back().copied()
    }

    /// Ascending positions.
    pub fn positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.positions.iter().copied()
    }

    pub fn is_subset_of(&self, other: &EdgeSubset) -> bool {
        self.positions.is_subset(&other.positions)
    }

    pub fn union(&self, other: &EdgeSubset) -> EdgeSubset {
        EdgeSubset {
            positions: self.positions.union(&other.positions).copied().collect(),
        }
    }

    pub fn difference(&self, other: &EdgeSubset) -> EdgeSubset {
        EdgeSubset {
            positions: self.positions.difference(&other.positions).copied().collect(),
        }
    }

    /// Renumbers the positions of `self` through the deletion of `removed`:
    /// positions not in `removed` are relabelled `1..` preserving order, and
    /// the image of `self` is returned. This is how a subset of a host's
    /// surviving edges reads inside the contracted host, where the survivors
    /// have been given fresh standard labels.
    ///
    /// `self` must be disjoint from `removed`.
    pub fn reindex_after_removing(&self, removed: &EdgeSubset, edge_count: usize) -> EdgeSubset {
        debug_assert!(self.positions.is_disjoint(&removed.positions));
        let mut out = BTreeSet::new();
        let mut fresh = 0usize;
        for position in 1..=edge_count {
            if removed.contains(position) {
                continue;
            }
            fresh += 1;
            if self.contains(position) {
                out.insert(fresh);
            }
        }
        EdgeSubset { positions: out }
    }
}

impl fmt::Display for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, position) in self.positions().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", position)?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<usize> for EdgeSubset {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        EdgeSubset {
            positions: iter.into_iter().collect(),
        }
    }
}

/// Parse errors for the graph text formats.
#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum ParseError {
    #[error("syntax: expected {expected} at byte {at}")]
    Syntax { expected: &'static str, at: usize },
    #[error("syntax: number too large at byte {at}")]
    NumberTooLarge { at: usize },
    #[error(transparent)]
    Invalid(#[from] TagError),
}

/// Parses `<prefix>{<vertex_count>;(u,v)(u,v)...}` with insignificant
/// whitespace; shared by the ordered (`g`) and bare (`b`) formats.
pub(crate) fn parse_graph_body(
    text: &str,
    prefix: char,
) -> Result<(u32, Vec<(u32, u32)>), ParseError> {
    let bytes = text.as_bytes();
    let mut pos = 0usize;

    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let expect = |pos: &mut usize, ch: u8, what: &'static str| -> Result<(), ParseError> {
        skip_ws(pos);
        if *pos < bytes.len() && bytes[*pos] == ch {
            *pos += 1;
            Ok(())
        } else {
            Err(ParseError::Syntax {
                expected: what,
                at: *pos,
            })
        }
    };
    let number = |pos: &mut usize| -> Result<u32, ParseError> {
        skip_ws(pos);
        let start = *pos;
        let mut value: u64 = 0;
        while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
            value = value * 10 + u64::from(bytes[*pos] - b'0');
            if value > u64::from(u32::MAX) {
                return Err(ParseError::NumberTooLarge { at: start });
            }
            *pos += 1;
        }
        if *pos == start {
            return Err(ParseError::Syntax {
                expected: "number",
                at: start,
            });
        }
        Ok(value as u32)
    };

    let prefix_name = if prefix == 'g' { "'g'" } else { "'b'" };
    expect(&mut pos, prefix as u8, prefix_name)?;
    expect(&mut pos, b'{', "'{'")?;
    let vertex_count = number(&mut pos)?;
    expect(&mut pos, b';', "';'")?;

    let mut edges = Vec::new();
    loop {
        skip_ws(&mut pos);
        if pos < bytes.len() && bytes[pos] == b'}' {
            pos += 1;
            break;
        }
        expect(&mut pos, b'(', "'(' or '}'")?;
        let u = number(&mut pos)?;
        expect(&mut pos, b',', "','")?;
        let v = number(&mut pos)?;
        expect(&mut pos, b')', "')'")?;
        edges.push((u, v));
    }
    skip_ws(&mut pos);
    if pos != bytes.len() {
        return Err(ParseError::Syntax {
            expected: "end of input",
            at: pos,
        });
    }
    Ok((vertex_count, edges))
}

/// Union-find with the smallest element of each class as its root.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        if self.parent[x] == x {
            x
        } else {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
            root
        }
    }

    pub(crate) fn union(&mut self, x: usize, y: usize) {
        let rx = self.find(x);
        let ry = self.find(y);
        // keep the smaller vertex as representative
        if rx < ry {
            self.parent[ry] = rx;
        } else if ry < rx {
            self.parent[rx] = ry;
        }
    }
}
