use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::Error;
use crate::graph::{ear_decomposition, is_strongly_connected, Digraph, Edge, Ear, Subdigraph, Vertex};

/// One basis cycle: an ear from `a` to `b` (with `a == b` for the initial
/// cycle and closed ears) closed up by a path from `b` back to `a` through
/// what was built before.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasisCycle {
    pub ear: Vec<Vertex>,
    pub closing: Vec<Vertex>,
    /// Listed without repeating the first vertex.
    pub cycle: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleBasis {
    pub cycles: Vec<BasisCycle>,
}

impl CycleBasis {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }
}

/// Shortest path from `s` to `t` using arcs of `host` only.
fn host_path(host: &Subdigraph, g: &Digraph, s: Vertex, t: Vertex) -> Option<Vec<Vertex>> {
    let mut prev = vec![usize::MAX; g.vertex_count()];
    prev[s] = s;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        if u == t {
            let mut path = vec![t];
            let mut x = t;
            while x != s {
                x = prev[x];
                path.push(x);
            }
            path.reverse();
            return Some(path);
        }
        for &v in g.out_neighbors(u) {
            if prev[v] == usize::MAX && host.contains_arc(u, v) {
                prev[v] = u;
                queue.push_back(v);
            }
        }
    }
    None
}

fn close(ear: Vec<Vertex>, closing: Vec<Vertex>) -> BasisCycle {
    let mut cycle = ear[..ear.len() - 1].to_vec();
    cycle.extend_from_slice(&closing[..closing.len() - 1]);
    BasisCycle { ear, closing, cycle }
}

/// A basis of the cycle space spanned by directed cycles, built from an ear
/// decomposition of `g` minus `marked` and then one single-arc ear per
/// marked arc, so each marked arc lies in exactly one basis cycle.
pub fn cycle_basis(g: &Digraph, marked: &[Edge]) -> Result<CycleBasis, Error> {
    if !is_strongly_connected(g) {
        return Err(Error::NotStronglyConnected("digraph".into()));
    }
    let marked: BTreeSet<Edge> = marked.iter().copied().collect();
    if let Some(&arc) = marked.iter().find(|&&(u, v)| u >= g.vertex_count() || v >= g.vertex_count() || !g.has_arc(u, v)) {
        return Err(Error::ArcNotPresent(arc));
    }
    let rest = g.without_arcs(&marked.iter().copied().collect::<Vec<_>>());
    if !is_strongly_connected(&rest) {
        return Err(Error::NotStronglyConnected("digraph minus the marked arcs".into()));
    }
    if g.vertex_count() < 2 {
        return Ok(CycleBasis { cycles: Vec::new() });
    }
    let dec = ear_decomposition(&rest)?;
    let mut host = Subdigraph::from_cycle(g.vertex_count(), &dec.initial);
    let mut initial = dec.initial.clone();
    initial.push(dec.initial[0]);
    let mut cycles = vec![close(initial, vec![dec.initial[0]])];
    let ears = dec.ears.into_iter().chain(marked.iter().map(|&(u, v)| Ear { path: vec![u, v] }));
    for ear in ears {
        let closing = if ear.is_closed() {
            vec![ear.start()]
        } else {
            host_path(&host, g, ear.end(), ear.start())
                .ok_or_else(|| Error::Internal("ear ends are not joined in the built part".into()))?
        };
        host.add_ear(&ear);
        cycles.push(close(ear.path, closing));
    }
    Ok(CycleBasis { cycles })
}
