//! Combinatorics of simple polytopes carrying integral characteristic data.
//!
//! A *characteristic pair* is a simple polytope together with an integer
//! vector attached to each facet, subject to a linear-independence condition
//! at every vertex. This crate computes the invariants such pairs carry:
//!
//! * local group orders at vertices and at vertices of faces ([`charpair`]),
//! * simplicial and polytopal wedge constructions that multiply facets
//!   ([`complex`], [`polytope`], [`CharacteristicPair::wedge`]),
//! * retraction sequences of the polytope and the prime-avoidance search
//!   they support, which certifies that the associated orbit space has
//!   torsion-free, even-degree integral cohomology ([`retraction`]),
//! * the weighted face ring: piecewise-integrality of rational polynomials
//!   against vertex substitution rules, graded integral bases, and ring
//!   presentations ([`wsr`]).
//!
//! Everything is exact: arbitrary-precision integers and rationals
//! throughout, no floating point anywhere ([`linalg`]).
//!
//! [`CharacteristicPair::wedge`]: charpair::CharacteristicPair::wedge

pub mod charpair;
pub mod complex;
pub mod document;
pub mod fixtures;
pub mod linalg;
pub mod polytope;
pub mod retraction;
pub mod wsr;

/// Errors shared across the crate.
///
/// The variants map onto the distinct failure classes callers need to tell
/// apart: malformed input documents, characteristic data violating the
/// vertex independence condition, structurally invalid operations, search
/// budgets running out, and computations invoked without their hypothesis.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Input document is malformed. `path` locates the offending field.
    #[error("schema violation at {path}: {message}")]
    Schema { path: String, message: String },

    /// The independence condition fails at a vertex: the facet vectors
    /// meeting there are linearly dependent.
    #[error("characteristic vectors are dependent at vertex {vertex}")]
    Condition { vertex: String },

    /// Operation applied to data that cannot support it (wrong dimensions,
    /// unknown facet, disconnected subcomplex, singular matrix, ...).
    #[error("{0}")]
    Structural(String),

    /// A bounded search ran out of budget before reaching a conclusion.
    #[error("search budget of {budget} node expansions exhausted")]
    Budget { budget: u64 },

    /// A computation requiring a previously established certificate was
    /// invoked without one.
    #[error("hypothesis not established: {0}")]
    Hypothesis(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

pub use charpair::CharacteristicPair;
pub use complex::SimplicialComplex;
pub use polytope::Polytope;
