//! Exact combinatorics for strongly perfect graphs: bitmask graphs with
//! graph6 serialization, canonical forms, structure detectors, maximal
//! clique and strong-stable-set search, parametric family generators with
//! the evolution and mutation operators, certification of strong perfection
//! and of minimal counterexamples, and naive oracles to cross-check all of
//! it.

pub mod canon;
pub mod cliques;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod oracle;

pub use canon::{are_isomorphic, canonical_form, canonical_key, CanonicalKey};
pub use graph::{Graph, GraphError, VertexSet};
pub use graph6::{parse_graph6, write_dot, write_graph6, Graph6Error};
pub mod families;
pub mod detect;
