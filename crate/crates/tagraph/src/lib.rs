//! A non-commutative Hopf algebra of edge-ordered multigraphs.
//!
//! The basis objects are totally assigned graphs ([`Tag`]): finite
//! multigraphs — self-loops and parallel edges welcome, connectivity not
//! required — whose edges carry a total order. Over exact rational
//! coefficients this crate implements:
//!
//! - the **ordinal-sum product**: disjoint union where every edge of the
//!   left factor precedes every edge of the right, which makes the algebra
//!   genuinely non-commutative ([`algebra`]);
//! - the **edge-subset coproduct**: each subset of edge positions splits a
//!   graph into the subgraph it spans and the contraction of that subgraph,
//!   summed over all `2^edges` subsets ([`hopf`]);
//! - the **counit** and the **antipode**, the latter by two independent
//!   recursions whose agreement is one of the checked theorems ([`hopf`]);
//! - the **projection** onto the classical commutative Hopf algebra of
//!   unordered multigraphs, implemented as its own structure so the
//!   morphism laws are testable rather than tautological ([`commutative`]);
//! - a **verification harness** that replays the Hopf-algebra axioms —
//!   associativity, coassociativity, counit and bialgebra laws, antipode
//!   identities, grading, projection morphisms — over exhaustively
//!   enumerated or randomly sampled graph universes, against brute-force
//!   oracles where one exists ([`verify`]);
//! - graph utilities: canonical forms under vertex renumbering, connected
//!   components, and the minimum spanning forest picked out by the edge
//!   order ([`graph`]).
//!
//! Everything is exact: coefficients are arbitrary-precision rationals, and
//! equalities in tests and reports are literal equalities of normal forms.
//!
//! # Example
//!
//! ```
//! use tagraph::{coproduct, Tag};
//!
//! let bubble = Tag::parse("g{2;(1,2)(1,2)}")?;
//! let delta = coproduct(&bubble)?;
//! assert_eq!(
//!     delta.to_string(),
//!     "1 * g{0;} (x) g{2;(1,2)(1,2)} + 2 * g{2;(1,2)} (x) g{1;(1,1)} \
//!      + 1 * g{2;(1,2)(1,2)} (x) g{0;}",
//! );
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod algebra;
pub mod commutative;
pub mod graph;
pub mod hopf;
pub mod verify;

use thiserror::Error;

/// An input too large for an operation that expands combinatorially.
///
/// Coproducts and antipodes walk all `2^edges` subsets; bare canonical forms
/// minimize over vertex orderings. Each such operation carries a capacity
/// and refuses larger inputs rather than hanging.
#[derive(Clone, PartialEq, Eq, Debug, Error)]
#[error("{operation}: input of size {size} exceeds capacity {capacity}")]
pub struct CapacityError {
    pub operation: &'static str,
    pub size: usize,
    pub capacity: usize,
}

pub use algebra::{
    coeff, product, product_lin, tensor_product, Coefficient, Combination, LinComb, Tensor3Comb,
    TensorComb,
};
pub use commutative::{
    bare_antipode, bare_coproduct, bare_counit, bare_product, bare_product_lin, forget, project,
    project_tensor, BareGraph, BareKey, BareLinComb, BareTensorComb, BARE_VERTEX_CAPACITY,
};
pub use graph::{
    CanonicalKey, Component, EdgeSubset, ParseError, SubsetError, Tag, TagError,
};
pub use hopf::{
    antipode, antipode_alt, antipode_alt_with_capacity, antipode_lin, antipode_with_capacity,
    contract, coproduct, coproduct_lin, coproduct_with_capacity, counit, counit_lin,
    reduced_coproduct, reduced_coproduct_with_capacity, subgraph, HopfError,
    DEFAULT_EDGE_CAPACITY,
};
pub use verify::{enumerate_tags, run_axiom_suite, TestUniverse, VerificationReport};
