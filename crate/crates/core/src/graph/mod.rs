//! Digraphs, their underlying graphs, and the path utilities built on them.

mod away;
mod connectivity;
mod digraph;
mod ears;
mod io;
mod underlying;

pub use away::{min_away_path, AwayPath};
pub use connectivity::{
    is_strongly_2connected, is_strongly_connected, is_unbreakable, reachable, strong_components,
    BreakWitness,
};
pub use digraph::{Digraph, Edge, Vertex};
pub use ears::{ear_decomposition, find_ear, Ear, EarDecomposition, Subdigraph};
pub use io::{parse_edge_list, to_edge_list};
pub use underlying::{underlying, UnderlyingGraph};
