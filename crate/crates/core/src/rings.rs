//! Ordered partitions in which every arc steps from one part to the next.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::{is_strongly_connected, Digraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LRing {
    pub l: usize,
    pub parts: Vec<Vec<Vertex>>,
}

impl LRing {
    /// Index of the part containing `v`.
    pub fn part_of(&self, v: Vertex) -> Option<usize> {
        self.parts.iter().position(|p| p.binary_search(&v).is_ok())
    }

    /// Per-vertex part index for a digraph on `n` vertices.
    pub fn labels(&self, n: usize) -> Vec<usize> {
        let mut lab = vec![usize::MAX; n];
        for (i, part) in self.parts.iter().enumerate() {
            for &v in part {
                if v < n {
                    lab[v] = i;
                }
            }
        }
        lab
    }

    pub fn is_pinched(&self) -> bool {
        is_pinched(self)
    }

    /// Whether this is an `l`-ring of `g`: the parts partition the vertex set
    /// and every arc goes from part `i` to part `i + 1 mod l`.
    pub fn is_ring_of(&self, g: &Digraph) -> bool {
        let n = g.vertex_count();
        if self.l < 2 || self.parts.len() != self.l {
            return false;
        }
        let mut seen = vec![false; n];
        for part in &self.parts {
            for &v in part {
                if v >= n || seen[v] {
                    return false;
                }
                seen[v] = true;
            }
        }
        if !seen.iter().all(|&b| b) {
            return false;
        }
        let lab = self.labels(n);
        g.arcs().all(|(u, v)| lab[v] == (lab[u] + 1) % self.l)
    }

    /// The same ring with parts rotated so the first part holds the smallest vertex.
    pub fn canonical(mut self) -> Self {
        let min_part = self
            .parts
            .iter()
            .enumerate()
            .filter_map(|(i, p)| p.first().map(|&v| (v, i)))
            .min()
            .map_or(0, |(_, i)| i);
        self.parts.rotate_left(min_part);
        self
    }
}

pub fn is_pinched(ring: &LRing) -> bool {
    ring.parts.iter().map(Vec::len).min() == Some(1)
}

fn bfs(g: &Digraph, root: Vertex) -> (Vec<usize>, Vec<Vertex>) {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    dist[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &w in g.out_neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    (dist, parent)
}

fn tree_path(parent: &[Vertex], root: Vertex, to: Vertex) -> Vec<Vertex> {
    let mut path = vec![to];
    let mut cur = to;
    while cur != root {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    path
}

/// Splits a closed walk (first vertex repeated at the end) into directed
/// cycles, in the order they close.
fn peel_cycles(walk: &[Vertex]) -> Vec<Vec<Vertex>> {
    let mut stack: Vec<Vertex> = Vec::new();
    let mut cycles = Vec::new();
    for &x in walk {
        if let Some(i) = stack.iter().position(|&y| y == x) {
            cycles.push(stack[i..].to_vec());
            stack.truncate(i);
        }
        stack.push(x);
    }
    cycles
}

pub(crate) fn rotate_to_min(mut cycle: Vec<Vertex>) -> Vec<Vertex> {
    if let Some(i) = cycle.iter().enumerate().min_by_key(|&(_, &v)| v).map(|(i, _)| i) {
        cycle.rotate_left(i);
    }
    cycle
}

/// The `l`-ring obtained from distances out of `root`, rotated canonically.
pub fn lring_from_root(g: &Digraph, l: usize, root: Vertex) -> Result<LRing, Error> {
    if l < 2 {
        return Err(Error::InvalidArgument(format!("ring modulus {l} is below 2")));
    }
    if g.vertex_count() == 0 {
        return Err(Error::TooSmall { need: 1, got: 0 });
    }
    if !is_strongly_connected(g) {
        return Err(Error::NotStronglyConnected("ring".into()));
    }
    let (dist, parent) = bfs(g, root);
    let Some((u, v)) = g.arcs().find(|&(u, v)| (dist[u] + 1) % l != dist[v] % l) else {
        let mut parts = vec![Vec::new(); l];
        for v in g.vertices() {
            parts[dist[v] % l].push(v);
        }
        return Ok(LRing { l, parts }.canonical());
    };

    // Shortest paths back to the root.
    let (back_dist, back_parent) = bfs(&g.reversed(), root);
    let mut home = tree_path(&back_parent, root, v);
    home.reverse();
    debug_assert_eq!(home.len(), back_dist[v] + 1);
    // Walk through the conflicting arc, and the walk along the tree to v.
    // Their lengths differ by a non-multiple of l, so one of them is not a
    // multiple of l.
    let mut through = tree_path(&parent, root, u);
    through.extend_from_slice(&home);
    let mut direct = tree_path(&parent, root, v);
    direct.extend_from_slice(&home[1..]);
    let walk = if !(through.len() - 1).is_multiple_of(l) { through } else { direct };
    let cycle = peel_cycles(&walk)
        .into_iter()
        .find(|c| c.len() % l != 0)
        .ok_or_else(|| Error::Internal("closed walk split into multiples of l".into()))?;
    Err(Error::NotRingable { l, cycle: rotate_to_min(cycle) })
}

/// The `l`-ring of a strongly connected digraph, with the part holding the
/// smallest vertex first. Fails with a directed cycle of length not divisible
/// by `l` when there is none.
pub fn compute_lring(g: &Digraph, l: usize) -> Result<LRing, Error> {
    lring_from_root(g, l, 0)
}

/// The ring of `g` if it is pinched. A strongly connected digraph has at most
/// one `l`-ring up to rotation, so only that one needs checking.
pub fn find_pinched_ring(g: &Digraph, l: usize) -> Result<Option<LRing>, Error> {
    let ring = compute_lring(g, l)?;
    Ok(is_pinched(&ring).then_some(ring))
}
