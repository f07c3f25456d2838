//! Signless Laplacian spectral radius (Q-index) of graphs without short odd
//! cycles: graph primitives, named constructions, exact and numeric spectral
//! tools, equitable quotients, degree bounds, odd-girth predicates and an
//! exhaustive extremal search.

pub mod bounds;
pub mod canon;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod lemmas;
pub mod odd_cycle;
pub mod partitions;
pub mod poly;
pub mod search;
pub mod spectral;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use error::{Error, Result};
pub use graph::{Graph, GraphBuilder, VertexSet};
pub use partitions::{QuotientMatrix, VertexPartition};
pub use poly::IntegerPolynomial;
pub use search::{SearchConfig, SearchReport};
pub use spectral::{q_index, IntMatrix};
