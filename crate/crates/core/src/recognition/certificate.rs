use serde::{Deserialize, Serialize};

use super::{BrancherEmbedding, Diwheel};
use crate::decomposition::{decompose_unbreakable, recompose, DecompositionTree};
use crate::graph::{is_unbreakable, strong_components, underlying, Digraph, Vertex};

/// One block of a strong component, with its decomposition. The tree uses
/// the block's own ids; `vertices[i]` is the id in the whole digraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockTree {
    pub vertices: Vec<Vertex>,
    pub tree: DecompositionTree,
}

/// Positive or negative evidence about 3-cyclicity and annularity. Vertex
/// ids refer to the digraph the certificate was computed for.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    ThreeCyclic { blocks: Vec<BlockTree> },
    LongCycle { cycle: Vec<Vertex> },
    TwoCycle { pair: [Vertex; 2] },
    NotRingable { cycle: Vec<Vertex> },
    Diwheel(Diwheel),
    Brancher(BrancherEmbedding),
    /// A piece where the structural test failed and no cycle search was run.
    NoValidSplit { vertices: Vec<Vertex>, reason: String },
}

impl Certificate {
    pub fn is_three_cyclic(&self) -> bool {
        matches!(self, Certificate::ThreeCyclic { .. })
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::ThreeCyclic { .. } => "three_cyclic",
            Certificate::LongCycle { .. } => "long_cycle",
            Certificate::TwoCycle { .. } => "two_cycle",
            Certificate::NotRingable { .. } => "not_ringable",
            Certificate::Diwheel(_) => "diwheel",
            Certificate::Brancher(_) => "brancher",
            Certificate::NoValidSplit { .. } => "no_valid_split",
        }
    }

    /// Renames every vertex `v` to `map[v]`.
    pub fn map_vertices(&self, map: &[Vertex]) -> Certificate {
        let m = |vs: &[Vertex]| vs.iter().map(|&v| map[v]).collect::<Vec<_>>();
        match self {
            Certificate::ThreeCyclic { blocks } => Certificate::ThreeCyclic {
                blocks: blocks
                    .iter()
                    .map(|b| BlockTree { vertices: m(&b.vertices), tree: b.tree.clone() })
                    .collect(),
            },
            Certificate::LongCycle { cycle } => Certificate::LongCycle { cycle: m(cycle) },
            Certificate::TwoCycle { pair } => Certificate::TwoCycle { pair: [map[pair[0]], map[pair[1]]] },
            Certificate::NotRingable { cycle } => Certificate::NotRingable { cycle: m(cycle) },
            Certificate::Diwheel(d) => Certificate::Diwheel(Diwheel { hub: map[d.hub], rim: m(&d.rim) }),
            Certificate::Brancher(b) => {
                Certificate::Brancher(BrancherEmbedding { variant: b.variant, map: m(&b.map) })
            }
            Certificate::NoValidSplit { vertices, reason } => Certificate::NoValidSplit {
                vertices: m(vertices),
                reason: reason.clone(),
            },
        }
    }

    /// Checks the certificate against `g` without trusting how it was made.
    pub fn verify(&self, g: &Digraph) -> bool {
        let n = g.vertex_count();
        let in_range = |vs: &[Vertex]| vs.iter().all(|&v| v < n);
        match self {
            Certificate::ThreeCyclic { blocks } => verify_blocks(g, blocks),
            Certificate::LongCycle { cycle } => {
                in_range(cycle) && cycle.len() != 3 && g.is_directed_cycle(cycle)
            }
            Certificate::TwoCycle { pair } => {
                in_range(pair) && pair[0] != pair[1] && g.has_arc(pair[0], pair[1]) && g.has_arc(pair[1], pair[0])
            }
            Certificate::NotRingable { cycle } => {
                in_range(cycle) && cycle.len() % 3 != 0 && g.is_directed_cycle(cycle)
            }
            Certificate::Diwheel(d) => d.verify(g),
            Certificate::Brancher(b) => b.verify(g),
            Certificate::NoValidSplit { vertices, .. } => {
                if !in_range(vertices) {
                    return false;
                }
                let (h, _) = g.induced(vertices);
                is_unbreakable(&h).is_ok()
                    && matches!(
                        decompose_unbreakable(&h, 0),
                        Ok(Err(Certificate::NoValidSplit { vertices: vs, .. })) if vs.len() == h.vertex_count()
                    )
            }
        }
    }
}

/// The blocks must be exactly the blocks of the strong components that have
/// arcs, and each tree must rebuild its block.
fn verify_blocks(g: &Digraph, blocks: &[BlockTree]) -> bool {
    let mut expected = Vec::new();
    for comp in strong_components(g) {
        if comp.len() < 2 {
            continue;
        }
        let (h, map) = g.induced(&comp);
        for block in underlying(&h).blocks() {
            let mut vs: Vec<Vertex> = block.iter().map(|&v| map[v]).collect();
            vs.sort_unstable();
            expected.push(vs);
        }
    }
    expected.sort();
    let mut given: Vec<Vec<Vertex>> = blocks.iter().map(|b| b.vertices.clone()).collect();
    given.sort();
    if given != expected {
        return false;
    }
    blocks.iter().all(|b| {
        b.vertices.windows(2).all(|w| w[0] < w[1])
            && recompose(&b.tree).is_ok_and(|h| h == g.induced(&b.vertices).0)
    })
}
