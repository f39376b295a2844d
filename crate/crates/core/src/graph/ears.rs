use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::{is_strongly_connected, Digraph, Edge, Vertex};
use crate::error::Error;

/// A subdigraph of some ambient digraph, given by a vertex set and an arc set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subdigraph {
    vertices: Vec<bool>,
    arcs: BTreeSet<Edge>,
}

impl Subdigraph {
    pub fn new(n: usize) -> Self {
        Subdigraph {
            vertices: vec![false; n],
            arcs: BTreeSet::new(),
        }
    }

    /// The subdigraph of `g` induced on `vs`.
    pub fn induced(g: &Digraph, vs: &[Vertex]) -> Self {
        let mut h = Subdigraph::new(g.vertex_count());
        for &v in vs {
            h.vertices[v] = true;
        }
        for (u, v) in g.arcs() {
            if h.vertices[u] && h.vertices[v] {
                h.arcs.insert((u, v));
            }
        }
        h
    }

    /// The subdigraph formed by a directed cycle.
    pub fn from_cycle(n: usize, cycle: &[Vertex]) -> Self {
        let mut h = Subdigraph::new(n);
        h.add_cycle(cycle);
        h
    }

    pub fn add_vertex(&mut self, v: Vertex) {
        self.vertices[v] = true;
    }

    pub fn add_arc(&mut self, u: Vertex, v: Vertex) {
        self.vertices[u] = true;
        self.vertices[v] = true;
        self.arcs.insert((u, v));
    }

    fn add_cycle(&mut self, cycle: &[Vertex]) {
        for i in 0..cycle.len() {
            self.add_arc(cycle[i], cycle[(i + 1) % cycle.len()]);
        }
    }

    pub fn add_ear(&mut self, ear: &Ear) {
        for w in ear.path.windows(2) {
            self.add_arc(w[0], w[1]);
        }
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.vertices[v]
    }

    pub fn contains_arc(&self, u: Vertex, v: Vertex) -> bool {
        self.arcs.contains(&(u, v))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.iter().filter(|&&b| b).count()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn vertex_list(&self) -> Vec<Vertex> {
        (0..self.vertices.len()).filter(|&v| self.vertices[v]).collect()
    }

    pub fn arcs(&self) -> impl Iterator<Item = Edge> + '_ {
        self.arcs.iter().copied()
    }

    pub fn spans(&self, g: &Digraph) -> bool {
        self.vertex_count() == g.vertex_count() && self.arc_count() == g.arc_count()
    }

    /// The subdigraph as a digraph on the ambient vertex ids (vertices outside
    /// the subdigraph become isolated).
    pub fn to_digraph(&self, g: &Digraph) -> Digraph {
        g.without_arcs(&g.arcs().filter(|&(u, v)| !self.contains_arc(u, v)).collect::<Vec<_>>())
    }
}

/// A directed path `p_1 ... p_m` with both ends in a host subdigraph and no
/// internal vertex or arc in it. When `p_1 == p_m` the ear is closed: a
/// directed cycle meeting the host in exactly one vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ear {
    pub path: Vec<Vertex>,
}

impl Ear {
    pub fn len(&self) -> usize {
        self.path.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.path.len() < 2
    }

    pub fn is_closed(&self) -> bool {
        self.path.first() == self.path.last()
    }

    pub fn start(&self) -> Vertex {
        self.path[0]
    }

    pub fn end(&self) -> Vertex {
        *self.path.last().unwrap()
    }

    pub fn internal(&self) -> &[Vertex] {
        &self.path[1..self.path.len() - 1]
    }

    pub fn arcs(&self) -> impl Iterator<Item = Edge> + '_ {
        self.path.windows(2).map(|w| (w[0], w[1]))
    }

    /// Whether this is an ear for `host` in `g`.
    pub fn is_ear_for(&self, g: &Digraph, host: &Subdigraph) -> bool {
        if self.path.len() < 2 {
            return false;
        }
        let inner = self.internal();
        let distinct: BTreeSet<Vertex> = inner.iter().copied().collect();
        let ends_ok = host.contains_vertex(self.start()) && host.contains_vertex(self.end());
        let closed_ok = !self.is_closed() || self.path.len() >= 3;
        ends_ok
            && closed_ok
            && distinct.len() == inner.len()
            && !inner.contains(&self.start())
            && !inner.contains(&self.end())
            && inner.iter().all(|&v| !host.contains_vertex(v))
            && self.arcs().all(|(u, v)| g.has_arc(u, v) && !host.contains_arc(u, v))
    }
}

/// Lexicographically least shortest directed path from `s` to a target.
/// Internal vertices must be passable; `first_ok` filters the first hop.
fn lex_shortest(
    g: &Digraph,
    s: Vertex,
    is_target: &dyn Fn(Vertex) -> bool,
    passable: &dyn Fn(Vertex) -> bool,
    first_ok: &dyn Fn(Vertex) -> bool,
) -> Option<Vec<Vertex>> {
    let n = g.vertex_count();
    // dist[w]: hops from passable w to a target through passable vertices.
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for t in 0..n {
        if !is_target(t) {
            continue;
        }
        for &x in g.in_neighbors(t) {
            if passable(x) && dist[x] == usize::MAX {
                dist[x] = 1;
                queue.push_back(x);
            }
        }
    }
    while let Some(x) = queue.pop_front() {
        for &y in g.in_neighbors(x) {
            if passable(y) && dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    let cost = |w: Vertex, first: bool| -> Option<usize> {
        if first && !first_ok(w) {
            None
        } else if is_target(w) {
            Some(1)
        } else if passable(w) && dist[w] != usize::MAX {
            Some(dist[w] + 1)
        } else {
            None
        }
    };
    let best = g.out_neighbors(s).iter().filter_map(|&w| cost(w, true)).min()?;
    let mut path = vec![s];
    let mut current = s;
    let mut remaining = best;
    while remaining > 0 {
        let first = current == s && path.len() == 1;
        let next = *g
            .out_neighbors(current)
            .iter()
            .find(|&&w| cost(w, first) == Some(remaining))
            .expect("distance labels are consistent");
        path.push(next);
        current = next;
        remaining -= 1;
    }
    Some(path)
}

fn shortest_open_ear(g: &Digraph, host: &Subdigraph) -> Option<Ear> {
    let mut best: Option<Vec<Vertex>> = None;
    for s in host.vertex_list() {
        let found = lex_shortest(
            g,
            s,
            &|t| t != s && host.contains_vertex(t),
            &|w| !host.contains_vertex(w),
            &|w| !host.contains_arc(s, w),
        );
        if let Some(p) = found {
            if best.as_ref().is_none_or(|b| p.len() < b.len()) {
                best = Some(p);
            }
        }
    }
    best.map(|path| Ear { path })
}

fn shortest_closed_ear(g: &Digraph, host: &Subdigraph) -> Option<Ear> {
    let mut best: Option<Vec<Vertex>> = None;
    for s in host.vertex_list() {
        let found = lex_shortest(g, s, &|t| t == s, &|w| !host.contains_vertex(w), &|_| true);
        if let Some(p) = found {
            if best.as_ref().is_none_or(|b| p.len() < b.len()) {
                best = Some(p);
            }
        }
    }
    best.map(|path| Ear { path })
}

/// A shortest ear for `host` in the unbreakable digraph `g`, ties broken by
/// the lexicographically least vertex sequence.
pub fn find_ear(g: &Digraph, host: &Subdigraph) -> Result<Ear, Error> {
    if host.spans(g) {
        return Err(Error::HostEqualsGraph);
    }
    if host.vertex_count() < 2 {
        return Err(Error::InvalidArgument("host must have at least two vertices".into()));
    }
    shortest_open_ear(g, host).ok_or(Error::NoEar)
}

/// An initial directed cycle followed by ears whose union is the digraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EarDecomposition {
    /// Listed without repeating the first vertex.
    pub initial: Vec<Vertex>,
    pub ears: Vec<Ear>,
}

impl EarDecomposition {
    /// Rebuilds the digraph on `n` vertices from the cycle and ears.
    pub fn replay(&self, n: usize) -> Result<Digraph, Error> {
        let mut g = Digraph::empty(n);
        let k = self.initial.len();
        for i in 0..k {
            g.add_arc(self.initial[i], self.initial[(i + 1) % k])?;
        }
        for ear in &self.ears {
            for (u, v) in ear.arcs() {
                g.add_arc(u, v)?;
            }
        }
        Ok(g)
    }
}

/// Shortest directed cycle whose minimum vertex is as small as possible,
/// rotated to start there.
pub(crate) fn initial_cycle(g: &Digraph) -> Option<Vec<Vertex>> {
    let mut best: Option<Vec<Vertex>> = None;
    for s in g.vertices() {
        if let Some(mut p) = lex_shortest(g, s, &|t| t == s, &|w| w > s, &|_| true) {
            p.pop();
            if best.as_ref().is_none_or(|b| p.len() < b.len()) {
                best = Some(p);
            }
        }
    }
    best
}

/// Ear decomposition of a strongly connected digraph. Open ears are
/// preferred; a closed ear is used only when no open ear exists (which cannot
/// happen when the underlying graph is 2-connected).
pub fn ear_decomposition(g: &Digraph) -> Result<EarDecomposition, Error> {
    if g.vertex_count() < 2 {
        return Err(Error::TooSmall { need: 2, got: g.vertex_count() });
    }
    if !is_strongly_connected(g) {
        return Err(Error::NotStronglyConnected("ear decomposition".into()));
    }
    let initial = initial_cycle(g).ok_or(Error::NoEar)?;
    let mut host = Subdigraph::from_cycle(g.vertex_count(), &initial);
    let mut ears = Vec::new();
    while !host.spans(g) {
        let ear = shortest_open_ear(g, &host)
            .or_else(|| shortest_closed_ear(g, &host))
            .ok_or(Error::NoEar)?;
        host.add_ear(&ear);
        ears.push(ear);
    }
    Ok(EarDecomposition { initial, ears })
}
