//! Exact-arithmetic implementation of the renormalization Hopf algebra of
//! QCD Feynman graphs: graph combinatorics, the coproduct/antipode on
//! one-particle-irreducible graphs, Green's function series, the
//! Slavnov-Taylor Hopf ideal, Birkhoff decomposition of Laurent-series
//! characters with minimal subtraction, the coaction on coupling constants,
//! renormalization-group flow, and component-level BRST checks.
//!
//! All coefficients are exact rationals; there is no floating point anywhere
//! in the algebra.

pub mod brst;
pub mod coupling;
pub mod graph;
pub mod green;
pub mod hopf;
pub mod laurent;
pub mod linalg;
pub mod rat;
pub mod renorm;

pub use graph::{EdgeKind, FeynGraph, Flow, GraphError, Residue, VertexKind};
pub use green::TruncationSpec;
pub use hopf::{Generator, Hopf, HopfElement, Monomial, TensorElement};
