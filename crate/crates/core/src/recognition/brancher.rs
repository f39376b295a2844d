use serde::{Deserialize, Serialize};

use crate::fixtures;
use crate::graph::{Digraph, Vertex};

/// An embedding of brancher `variant` (1 to 4): `map[i]` is the image of
/// pattern vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BrancherEmbedding {
    pub variant: u8,
    pub map: Vec<Vertex>,
}

/// The four 8-vertex patterns. Variants 3 and 4 reverse variants 1 and 2.
pub fn brancher_pattern(variant: u8) -> Option<Digraph> {
    match variant {
        1 => Some(fixtures::b1()),
        2 => Some(fixtures::b2()),
        3 => Some(fixtures::b1().reversed()),
        4 => Some(fixtures::b2().reversed()),
        _ => None,
    }
}

impl BrancherEmbedding {
    pub fn verify(&self, g: &Digraph) -> bool {
        let Some(p) = brancher_pattern(self.variant) else {
            return false;
        };
        if self.map.len() != p.vertex_count() || self.map.iter().any(|&x| x >= g.vertex_count()) {
            return false;
        }
        let mut sorted = self.map.clone();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.len() == self.map.len() && p.arcs().all(|(a, b)| g.has_arc(self.map[a], self.map[b]))
    }
}

/// First injective arc-preserving map of `pattern` into `g`, assigning
/// pattern vertices in id order and trying targets in ascending order.
pub fn find_embedding(pattern: &Digraph, g: &Digraph) -> Option<Vec<Vertex>> {
    let k = pattern.vertex_count();
    if k > g.vertex_count() || pattern.arc_count() > g.arc_count() {
        return None;
    }
    let mut map = vec![usize::MAX; k];
    let mut used = vec![false; g.vertex_count()];
    extend(pattern, g, 0, &mut map, &mut used).then_some(map)
}

fn extend(p: &Digraph, g: &Digraph, i: usize, map: &mut [Vertex], used: &mut [bool]) -> bool {
    if i == p.vertex_count() {
        return true;
    }
    let anchor = p.neighbors(i).into_iter().find(|&j| j < i);
    let candidates: Vec<Vertex> = match anchor {
        Some(j) => g.neighbors(map[j]),
        None => g.vertices().collect(),
    };
    for c in candidates {
        if used[c] || g.out_degree(c) < p.out_degree(i) || g.in_degree(c) < p.in_degree(i) {
            continue;
        }
        let fits = p.out_neighbors(i).iter().filter(|&&j| j < i).all(|&j| g.has_arc(c, map[j]))
            && p.in_neighbors(i).iter().filter(|&&j| j < i).all(|&j| g.has_arc(map[j], c));
        if !fits {
            continue;
        }
        map[i] = c;
        used[c] = true;
        if extend(p, g, i + 1, map, used) {
            return true;
        }
        used[c] = false;
    }
    map[i] = usize::MAX;
    false
}

/// The first brancher (by variant) contained in `g` as a subdigraph.
pub fn find_brancher(g: &Digraph) -> Option<BrancherEmbedding> {
    (1..=4u8).find_map(|variant| {
        let p = brancher_pattern(variant).expect("known variant");
        find_embedding(&p, g).map(|map| BrancherEmbedding { variant, map })
    })
}
