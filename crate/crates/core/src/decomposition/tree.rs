use serde::{Deserialize, Serialize};

use super::is_special_in;
use crate::error::{Error, Side};
use crate::graph::{Digraph, Edge, Vertex};
use crate::rings::LRing;

/// Binary tree of special edge sums over pinched pieces.
///
/// Each node describes a digraph on ids `0..n`. A leaf stores its digraph.
/// A sum node stores the identified arc in its own ids, and for each child a
/// map from the child's ids to the node's ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "node", rename_all = "snake_case")]
pub enum DecompositionTree {
    Leaf {
        graph: Digraph,
        ring: LRing,
    },
    Sum {
        arc: Edge,
        left_map: Vec<Vertex>,
        right_map: Vec<Vertex>,
        left: Box<DecompositionTree>,
        right: Box<DecompositionTree>,
    },
}

impl DecompositionTree {
    pub fn is_leaf(&self) -> bool {
        matches!(self, DecompositionTree::Leaf { .. })
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            DecompositionTree::Leaf { .. } => 1,
            DecompositionTree::Sum { left, right, .. } => left.leaf_count() + right.leaf_count(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            DecompositionTree::Leaf { .. } => 1,
            DecompositionTree::Sum { left, right, .. } => 1 + left.depth().max(right.depth()),
        }
    }

    /// Number of vertices of the digraph this node describes.
    pub fn vertex_count(&self) -> usize {
        match self {
            DecompositionTree::Leaf { graph, .. } => graph.vertex_count(),
            DecompositionTree::Sum { left_map, right_map, .. } => left_map.len() + right_map.len() - 2,
        }
    }

    /// Leaves in left-to-right order.
    pub fn leaves(&self) -> Vec<(&Digraph, &LRing)> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<(&'a Digraph, &'a LRing)>) {
        match self {
            DecompositionTree::Leaf { graph, ring } => out.push((graph, ring)),
            DecompositionTree::Sum { left, right, .. } => {
                left.collect_leaves(out);
                right.collect_leaves(out);
            }
        }
    }
}

/// Folds the sums bottom-up. Checks, at every node, that leaves carry valid
/// pinched 3-rings, that the maps place the two children so that they share
/// exactly the identified arc's ends, and that the arc is special in both.
pub fn recompose(t: &DecompositionTree) -> Result<Digraph, Error> {
    match t {
        DecompositionTree::Leaf { graph, ring } => {
            if ring.l != 3 || !ring.is_ring_of(graph) || !ring.is_pinched() {
                return Err(Error::InvalidArgument("leaf ring is not a pinched 3-ring".into()));
            }
            Ok(graph.clone())
        }
        DecompositionTree::Sum { arc, left_map, right_map, left, right } => {
            let lg = recompose(left)?;
            let rg = recompose(right)?;
            if lg.vertex_count() != left_map.len() || rg.vertex_count() != right_map.len() {
                return Err(Error::InvalidArgument("vertex map length mismatch".into()));
            }
            if left_map.len() < 3 || right_map.len() < 3 {
                return Err(Error::InvalidArgument("sum operand has fewer than three vertices".into()));
            }
            let n = left_map.len() + right_map.len() - 2;
            let (u, v) = *arc;
            let local = |map: &[Vertex], x: Vertex| map.iter().position(|&y| y == x);
            let (Some(lu), Some(lv), Some(ru), Some(rv)) =
                (local(left_map, u), local(left_map, v), local(right_map, u), local(right_map, v))
            else {
                return Err(Error::InvalidArgument("identified arc missing from a side".into()));
            };
            if !is_special_in(&lg, (lu, lv))? {
                return Err(Error::NotSpecial(Side::Left));
            }
            if !is_special_in(&rg, (ru, rv))? {
                return Err(Error::NotSpecial(Side::Right));
            }
            let mut labels: Vec<Option<String>> = vec![None; n];
            let mut covered = vec![0u8; n];
            for (child, map) in [(&lg, left_map), (&rg, right_map)] {
                for (i, &x) in map.iter().enumerate() {
                    if x >= n {
                        return Err(Error::InvalidArgument(format!("mapped vertex {x} out of range")));
                    }
                    covered[x] += 1;
                    match &labels[x] {
                        None => labels[x] = Some(child.label(i).to_string()),
                        Some(l) if l == child.label(i) => {}
                        Some(_) => return Err(Error::InvalidArgument("shared vertex labels disagree".into())),
                    }
                }
            }
            for (x, &c) in covered.iter().enumerate() {
                let shared = x == u || x == v;
                if c != if shared { 2 } else { 1 } {
                    return Err(Error::InvalidArgument(format!("vertex {x} is placed {c} times")));
                }
            }
            let mut g = Digraph::empty(n);
            for (child, map) in [(&lg, left_map), (&rg, right_map)] {
                for (a, b) in child.arcs() {
                    let (x, y) = (map[a], map[b]);
                    if !g.has_arc(x, y) {
                        g.add_arc(x, y)?;
                    }
                }
            }
            g.with_labels(labels.into_iter().map(|l| l.expect("covered")).collect())
        }
    }
}
