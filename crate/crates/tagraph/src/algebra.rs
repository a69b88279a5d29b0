//! The free vector space on canonical graph classes, with the ordinal-sum
//! product.
//!
//! Coefficients are exact rationals ([`Coefficient`]); a [`Combination`] is a
//! finite formal sum of basis keys. Keys are canonical forms, so inserting a
//! tag first canonicalizes it and equal classes collect automatically. The
//! zero coefficient is never stored: two combinations are equal as values iff
//! they are equal as vectors.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::graph::{CanonicalKey, ParseError, Tag};

/// Exact rational scalar.
pub type Coefficient = BigRational;

/// Shorthand for an integer coefficient.
pub fn coeff(n: i64) -> Coefficient {
    Coefficient::from_integer(BigInt::from(n))
}

/// A finite formal rational combination of basis keys.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Combination<K: Ord> {
    terms: BTreeMap<K, Coefficient>,
}

/// Combination over graph classes.
pub type LinComb = Combination<CanonicalKey>;

/// Combination over ordered pairs of graph classes (rank-two tensors).
pub type TensorComb = Combination<(CanonicalKey, CanonicalKey)>;

/// Combination over ordered triples (rank-three tensors).
pub type Tensor3Comb = Combination<(CanonicalKey, CanonicalKey, CanonicalKey)>;

impl<K: Ord> Default for Combination<K> {
    fn default() -> Self {
        Combination {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> Combination<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The single term `1 * key`.
    pub fn singleton(key: K) -> Self {
        let mut c = Self::zero();
        c.add_term(key, Coefficient::one());
        c
    }

    /// Adds `coefficient * key`, dropping the term if it cancels to zero.
    pub fn add_term(&mut self, key: K, coefficient: Coefficient) {
        if coefficient.is_zero() {
            return;
        }
        let entry = self.terms.entry(key);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coefficient);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coefficient;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in key order.
    pub fn iter(&self) -> impl Iterator<Item = (&K, &Coefficient)> {
        self.terms.iter()
    }

    /// Coefficient of `key`, zero when absent.
    pub fn coefficient(&self, key: &K) -> Coefficient {
        self.terms.get(key).cloned().unwrap_or_else(Coefficient::zero)
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.iter() {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.iter() {
            out.add_term(k.clone(), -c.clone());
        }
        out
    }

    pub fn scaled(&self, factor: &Coefficient) -> Self {
        let mut out = Self::zero();
        for (k, c) in self.iter() {
            out.add_term(k.clone(), c * factor);
        }
        out
    }

    pub fn negated(&self) -> Self {
        let mut out = Self::zero();
        for (k, c) in self.iter() {
            out.add_term(k.clone(), -c.clone());
        }
        out
    }

    /// Linear extension of a key map.
    pub fn map_keys<L: Ord + Clone>(&self, f: impl Fn(&K) -> L) -> Combination<L> {
        let mut out = Combination::zero();
        for (k, c) in self.iter() {
            out.add_term(f(k), c.clone());
        }
        out
    }

    /// Linear extension of a map into combinations.
    pub fn flat_map<L: Ord + Clone>(
        &self,
        f: impl Fn(&K) -> Combination<L>,
    ) -> Combination<L> {
        let mut out = Combination::zero();
        for (k, c) in self.iter() {
            for (l, d) in f(k).iter() {
                out.add_term(l.clone(), c * d);
            }
        }
        out
    }

    /// Fallible variant of [`Combination::flat_map`].
    pub fn try_flat_map<L: Ord + Clone, E>(
        &self,
        mut f: impl FnMut(&K) -> Result<Combination<L>, E>,
    ) -> Result<Combination<L>, E> {
        let mut out = Combination::zero();
        for (k, c) in self.iter() {
            for (l, d) in f(k)?.iter() {
                out.add_term(l.clone(), c * d);
            }
        }
        Ok(out)
    }
}

impl LinComb {
    /// The combination `1 * t`, canonicalizing `t`.
    pub fn from_tag(t: &Tag) -> Self {
        Self::singleton(t.canonical_key())
    }

    /// Adds `coefficient * t`, canonicalizing `t`.
    pub fn add_tag(&mut self, t: &Tag, coefficient: Coefficient) {
        self.add_term(t.canonical_key(), coefficient);
    }

    /// Parses `<rational> * <tag> + ...`; a lone tag reads as coefficient 1,
    /// and a bare `0` as the zero combination. Terms need not be distinct or
    /// sorted; they collect on canonical keys.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut out = Self::zero();
        let bytes = text.as_bytes();
        let mut pos = 0usize;
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };

        skip_ws(&mut pos);
        if pos == bytes.len() {
            return Err(ParseError::Syntax {
                expected: "term",
                at: pos,
            });
        }
        loop {
            skip_ws(&mut pos);
            let coefficient = if pos < bytes.len() && bytes[pos] != b'g' {
                let start = pos;
                if pos < bytes.len() && bytes[pos] == b'-' {
                    pos += 1;
                }
                while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == b'/') {
                    pos += 1;
                }
                let c: Coefficient =
                    text[start..pos].parse().map_err(|_| ParseError::Syntax {
                        expected: "rational coefficient",
                        at: start,
                    })?;
                skip_ws(&mut pos);
                if pos == bytes.len() && c.is_zero() && out.is_zero() && start == 0 {
                    return Ok(out);
                }
                if pos >= bytes.len() || bytes[pos] != b'*' {
                    return Err(ParseError::Syntax {
                        expected: "'*'",
                        at: pos,
                    });
                }
                pos += 1;
                skip_ws(&mut pos);
                c
            } else {
                Coefficient::one()
            };

            if pos >= bytes.len() || bytes[pos] != b'g' {
                return Err(ParseError::Syntax {
                    expected: "'g'",
                    at: pos,
                });
            }
            let end = text[pos..].find('}').map(|i| pos + i + 1).ok_or(
                ParseError::Syntax {
                    expected: "'}'",
                    at: bytes.len(),
                },
            )?;
            let tag = Tag::parse(&text[pos..end])?;
            pos = end;
            out.add_tag(&tag, coefficient);

            skip_ws(&mut pos);
            if pos == bytes.len() {
                return Ok(out);
            }
            if bytes[pos] != b'+' {
                return Err(ParseError::Syntax {
                    expected: "'+' or end of input",
                    at: pos,
                });
            }
            pos += 1;
        }
    }

    /// Largest degree among terms; `None` for zero.
    pub fn max_degree(&self) -> Option<usize> {
        self.iter().map(|(k, _)| k.degree()).max()
    }

    /// True when every term has the given degree (vacuously true for zero).
    pub fn is_homogeneous_of_degree(&self, degree: usize) -> bool {
        self.iter().all(|(k, _)| k.degree() == degree)
    }
}

/// Rendering of a basis key inside a combination term.
pub trait TermKey {
    fn fmt_key(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result;
}

impl TermKey for CanonicalKey {
    fn fmt_key(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<A: TermKey, B: TermKey> TermKey for (A, B) {
    fn fmt_key(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_key(f)?;
        write!(f, " (x) ")?;
        self.1.fmt_key(f)
    }
}

impl<A: TermKey, B: TermKey, C: TermKey> TermKey for (A, B, C) {
    fn fmt_key(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_key(f)?;
        write!(f, " (x) ")?;
        self.1.fmt_key(f)?;
        write!(f, " (x) ")?;
        self.2.fmt_key(f)
    }
}

/// Terms render as `<coefficient> * <key>` joined by ` + `, in key order,
/// with the coefficient always present (so `1 * ...`, and negatives carry
/// their sign in the coefficient). The zero combination renders as `0`.
impl<K: Ord + TermKey> fmt::Display for Combination<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{} * ", c)?;
            k.fmt_key(f)?;
        }
        Ok(())
    }
}

/// Ordinal sum: disjoint union with `b`'s vertices shifted past `a`'s and
/// `b`'s edges appended after `a`'s, so all of `a` precedes all of `b` in the
/// edge order. Associative, unit [`Tag::unit`], and deliberately not
/// commutative.
pub fn product(a: &Tag, b: &Tag) -> Tag {
    let shift = a.vertex_count();
    let mut edges = a.edges().to_vec();
    edges.extend(b.edges().iter().map(|&(u, v)| (u + shift, v + shift)));
    Tag::new_unchecked(a.vertex_count() + b.vertex_count(), edges)
}

/// Bilinear extension of [`product`] to combinations.
pub fn product_lin(a: &LinComb, b: &LinComb) -> LinComb {
    let mut out = LinComb::zero();
    for (ka, ca) in a.iter() {
        for (kb, cb) in b.iter() {
            out.add_tag(&product(ka.tag(), kb.tag()), ca * cb);
        }
    }
    out
}

/// Componentwise product on rank-two tensors:
/// `(a (x) b) * (c (x) d) = (a * c) (x) (b * d)` extended bilinearly.
pub fn tensor_product(a: &TensorComb, b: &TensorComb) -> TensorComb {
    let mut out = TensorComb::zero();
    for ((la, ra), ca) in a.iter() {
        for ((lb, rb), cb) in b.iter() {
            out.add_term(
                (
                    product(la.tag(), lb.tag()).canonical_key(),
                    product(ra.tag(), rb.tag()).canonical_key(),
                ),
                ca * cb,
            );
        }
    }
    out
}
