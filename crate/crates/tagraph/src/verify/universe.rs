//! Graph universes the axiom checks quantify over: exhaustive enumerations
//! of small isomorphism classes, and seeded random samples of larger ones.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{CanonicalKey, Tag};
use crate::CapacityError;

/// Largest edge count for exhaustive enumeration; class counts grow fast.
pub const ENUMERATION_EDGE_CAPACITY: usize = 5;

/// A family of tags to check axioms over.
#[derive(Clone, Debug)]
pub struct TestUniverse {
    pub max_edges: usize,
    pub max_vertices: u32,
    pub min_edges: usize,
    pub mode: UniverseMode,
}

#[derive(Clone, Debug)]
pub enum UniverseMode {
    /// Every isomorphism class up to `max_edges`, exactly once.
    Exhaustive,
    /// `count` pseudorandom tags from the given seed; duplicates allowed.
    Sampled { seed: u64, count: usize },
}

impl TestUniverse {
    /// All classes with at most `max_edges` edges.
    pub fn exhaustive(max_edges: usize) -> Self {
        TestUniverse {
            max_edges,
            max_vertices: 2 * max_edges as u32,
            min_edges: 0,
            mode: UniverseMode::Exhaustive,
        }
    }

    /// `count` seeded samples with `0..=max_edges` edges.
    pub fn sampled(max_edges: usize, max_vertices: u32, seed: u64, count: usize) -> Self {
        TestUniverse {
            max_edges,
            max_vertices,
            min_edges: 0,
            mode: UniverseMode::Sampled { seed, count },
        }
    }

    /// `count` seeded samples with `min_edges..=max_edges` edges.
    pub fn sampled_range(
        min_edges: usize,
        max_edges: usize,
        max_vertices: u32,
        seed: u64,
        count: usize,
    ) -> Self {
        TestUniverse {
            max_edges,
            max_vertices,
            min_edges,
            mode: UniverseMode::Sampled { seed, count },
        }
    }

    /// Materializes the universe, deterministically: sorted canonical
    /// classes in exhaustive mode, the seeded sample sequence otherwise.
    pub fn tags(&self) -> Result<Vec<Tag>, CapacityError> {
        match self.mode {
            UniverseMode::Exhaustive => enumerate_tags(self.max_edges),
            UniverseMode::Sampled { seed, count } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                Ok((0..count)
                    .map(|_| {
                        random_tag(&mut rng, self.min_edges, self.max_edges, self.max_vertices)
                    })
                    .collect())
            }
        }
    }

    /// One-line description for verification records.
    pub fn describe(&self, realized: usize) -> String {
        match self.mode {
            UniverseMode::Exhaustive => format!(
                "all {} classes with at most {} edges",
                realized, self.max_edges
            ),
            UniverseMode::Sampled { seed, count } => format!(
                "{} samples (seed {}, {}..={} edges, at most {} vertices)",
                count, seed, self.min_edges, self.max_edges, self.max_vertices
            ),
        }
    }
}

/// Every isomorphism class with at most `max_edges` edges, each exactly
/// once, in sorted canonical form. Walks all edge sequences whose vertices
/// appear in first-use order, so every class is reached; canonical keys
/// dedupe the rest.
pub fn enumerate_tags(max_edges: usize) -> Result<Vec<Tag>, CapacityError> {
    if max_edges > ENUMERATION_EDGE_CAPACITY {
        return Err(CapacityError {
            operation: "exhaustive class enumeration",
            size: max_edges,
            capacity: ENUMERATION_EDGE_CAPACITY,
        });
    }
    let mut seen: std::collections::BTreeSet<CanonicalKey> = Default::default();
    seen.insert(Tag::unit().canonical_key());
    let mut stack: Vec<(Vec<(u32, u32)>, u32)> = vec![(Vec::new(), 0)];
    while let Some((edges, used)) = stack.pop() {
        if edges.len() == max_edges {
            continue;
        }
        let mut extensions: Vec<((u32, u32), u32)> = Vec::new();
        for u in 1..=used {
            for v in u..=used {
                extensions.push(((u, v), used));
            }
            extensions.push(((u, used + 1), used + 1));
        }
        extensions.push(((used + 1, used + 1), used + 1));
        extensions.push(((used + 1, used + 2), used + 2));
        for ((u, v), next_used) in extensions {
            let mut next = edges.clone();
            next.push((u, v));
            seen.insert(Tag::new_unchecked(next_used, next.clone()).canonical_key());
            stack.push((next, next_used));
        }
    }
    Ok(seen.into_iter().map(CanonicalKey::into_tag).collect())
}

/// One pseudorandom tag: a uniform edge count in `min_edges..=max_edges`,
/// then edge by edge, each endpoint either an existing vertex or (budget
/// permitting) a fresh one. Every vertex enters through an edge, so the
/// result is always valid.
pub fn random_tag(
    rng: &mut impl Rng,
    min_edges: usize,
    max_edges: usize,
    max_vertices: u32,
) -> Tag {
    let m = rng.gen_range(min_edges..=max_edges);
    let mut used: u32 = 0;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let mut pick = |used: &mut u32| -> u32 {
            let ceiling = (*used + 1).min(max_vertices.max(1));
            let w = rng.gen_range(1..=ceiling);
            *used = (*used).max(w);
            w
        };
        let u = pick(&mut used);
        let v = pick(&mut used);
        edges.push((u.min(v), u.max(v)));
    }
    Tag::new_unchecked(used, edges)
}

/// All ordered pairs over tags of degree at most `max_factor_degree`.
pub fn ordered_pairs(tags: &[Tag], max_factor_degree: usize) -> Vec<(Tag, Tag)> {
    let small: Vec<&Tag> = tags
        .iter()
        .filter(|t| t.degree() <= max_factor_degree)
        .collect();
    let mut pairs = Vec::with_capacity(small.len() * small.len());
    for a in &small {
        for b in &small {
            pairs.push(((*a).clone(), (*b).clone()));
        }
    }
    pairs
}

/// All ordered triples over tags of degree at most `max_factor_degree`.
pub fn ordered_triples(tags: &[Tag], max_factor_degree: usize) -> Vec<(Tag, Tag, Tag)> {
    let small: Vec<&Tag> = tags
        .iter()
        .filter(|t| t.degree() <= max_factor_degree)
        .collect();
    let mut triples = Vec::new();
    for a in &small {
        for b in &small {
            for c in &small {
                triples.push(((*a).clone(), (*b).clone(), (*c).clone()));
            }
        }
    }
    triples
}

/// Consecutive disjoint pairs of a sample sequence.
pub fn pair_up(tags: &[Tag]) -> Vec<(Tag, Tag)> {
    tags.chunks_exact(2)
        .map(|w| (w[0].clone(), w[1].clone()))
        .collect()
}

/// Consecutive disjoint triples of a sample sequence.
pub fn triple_up(tags: &[Tag]) -> Vec<(Tag, Tag, Tag)> {
    tags.chunks_exact(3)
        .map(|w| (w[0].clone(), w[1].clone(), w[2].clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts_for_tiny_sizes() {
        assert_eq!(enumerate_tags(0).unwrap().len(), 1);
        assert_eq!(enumerate_tags(1).unwrap().len(), 3);
        assert_eq!(enumerate_tags(2).unwrap().len(), 12);
    }

    #[test]
    fn enumeration_is_sorted_and_distinct() {
        let tags = enumerate_tags(3).unwrap();
        for window in tags.windows(2) {
            assert!(window[0] < window[1]);
        }
        assert!(tags[0].is_unit());
    }

    #[test]
    fn enumeration_yields_canonical_forms() {
        for t in enumerate_tags(3).unwrap() {
            assert_eq!(t.canonical_key().into_tag(), t);
        }
    }

    #[test]
    fn enumeration_respects_capacity() {
        assert!(enumerate_tags(6).is_err());
    }

    #[test]
    fn sampling_is_deterministic_and_in_bounds() {
        let u = TestUniverse::sampled_range(4, 5, 10, 42, 50);
        let a = u.tags().unwrap();
        let b = u.tags().unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 50);
        for t in &a {
            assert!((4..=5).contains(&t.degree()));
            assert!(t.vertex_count() <= 10);
        }
    }

    #[test]
    fn samples_vary_with_the_seed() {
        let a = TestUniverse::sampled(5, 10, 1, 30).tags().unwrap();
        let b = TestUniverse::sampled(5, 10, 2, 30).tags().unwrap();
        assert_ne!(a, b);
    }
}
