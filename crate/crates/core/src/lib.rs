//! Graph products of cyclic groups: reduced words and normal forms,
//! centralizers, and generating sets of the automorphism group checked
//! against brute-force enumeration on small graphs.

pub mod automorphisms;
pub mod centralizer;
pub mod cli;
pub mod error;
pub mod generators;
pub mod labeled_graph;
pub mod oracle;
pub mod words;

pub use automorphisms::{Automorphism, VertexMap, WellDefinedFailure};
pub use centralizer::{BasicForm, CentralizerGraph, CentralizerPresentation, Root};
pub use error::{Error, Result};
pub use labeled_graph::{GraphAutomorphism, LabeledGraph, Order, Vertex, VertexSet};
pub use words::{GraphProduct, GroupElement, Letter, ReductionType, Syllable};
