//! Recognition, decomposition, drawing and weighting of digraphs whose
//! directed cycles all have length three.

pub mod annular;
pub mod builder;
pub mod decomposition;
pub mod error;
mod exact;
pub mod fixtures;
pub mod graph;
pub mod oracle;
pub mod recognition;
pub mod rings;
pub mod weighting;

pub use annular::{AnnularDrawing, AnnularVerdict};
pub use builder::{BuildScript, BuildStep};
pub use decomposition::DecompositionTree;
pub use error::{Error, Result, Side};
pub use graph::{parse_edge_list, to_edge_list, Digraph, Edge, Vertex};
pub use recognition::Certificate;
pub use rings::LRing;
pub use weighting::{WeakDoubleCycle, Weighting};
