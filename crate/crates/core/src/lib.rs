//! Spectral lower bounds for the orthogonal rank and chromatic-type graph
//! parameters.
//!
//! The crate bundles:
//! - a graph model with graph6 interchange and generators for the cycle,
//!   complete, complete-bipartite, Kneser, Andrasfai, folded-cube,
//!   orthogonality and path families ([`graph`], [`graph6`], [`families`]);
//! - dense eigendecompositions of the adjacency, Laplacian, signless
//!   Laplacian and Hermitian-weighted adjacency matrices, with inertia
//!   classification and the positive/negative spectral split ([`spectral`]);
//! - the Hoffman, Lima and Kolotilina bounds, the diagonal-shift family
//!   interpolating between them, exact inertial bounds for the orthogonal
//!   and projective ranks, and a weighted-Hoffman local search ([`bounds`]);
//! - exact small-graph oracles: chromatic, clique and independence numbers
//!   by branch-and-bound, and the fractional chromatic number as an exact
//!   rational via an independent-set covering LP solved in rational
//!   arithmetic ([`exact`]);
//! - heuristic search for orthogonal representations, certificate
//!   verification (vector and projector forms), the first-entry normal form
//!   and its diagonal-matrix identity ([`reps`]);
//! - report assembly with consistency checks and deterministic JSON
//!   ([`report`]).

pub mod bounds;
pub mod error;
pub mod exact;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod report;
pub mod reps;
pub mod spectral;

pub use error::{Error, Result};
pub use families::{generate, Family, FamilySpec};
pub use graph::Graph;
pub use graph6::{parse_graph6, serialize_graph6};
