use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Dense vertex identifier, `0..n`.
pub type Vertex = usize;

/// An arc `(tail, head)`.
pub type Edge = (Vertex, Vertex);

/// A loop-free digraph without parallel arcs. Antiparallel pairs are allowed.
///
/// Vertices are the dense range `0..n`; each carries a string label, and the
/// labels are pairwise distinct. Adjacency lists are kept sorted so that every
/// traversal in the crate visits neighbours in ascending id order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    labels: Vec<String>,
    out: Vec<Vec<Vertex>>,
    inn: Vec<Vec<Vertex>>,
    arc_count: usize,
}

impl Digraph {
    /// An arcless digraph on `n` vertices labelled `"0"`, `"1"`, ...
    pub fn empty(n: usize) -> Self {
        Digraph {
            labels: (0..n).map(|v| v.to_string()).collect(),
            out: vec![Vec::new(); n],
            inn: vec![Vec::new(); n],
            arc_count: 0,
        }
    }

    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut g = Digraph::empty(n);
        for (u, v) in arcs {
            g.add_arc(u, v)?;
        }
        Ok(g)
    }

    /// Replaces all labels. Fails unless `labels` has one distinct entry per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, Error> {
        if labels.len() != self.vertex_count() {
            return Err(Error::InvalidLabels(format!(
                "expected {} labels, got {}",
                self.vertex_count(),
                labels.len()
            )));
        }
        let distinct: BTreeSet<&String> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::InvalidLabels("labels are not distinct".into()));
        }
        self.labels = labels;
        Ok(self)
    }

    /// Relabels every vertex with its decimal id.
    pub fn with_index_labels(mut self) -> Self {
        self.labels = (0..self.vertex_count()).map(|v| v.to_string()).collect();
        self
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> Result<Vertex, Error> {
        let label = label.into();
        if self.labels.contains(&label) {
            return Err(Error::InvalidLabels(format!("duplicate label {label:?}")));
        }
        self.labels.push(label);
        self.out.push(Vec::new());
        self.inn.push(Vec::new());
        Ok(self.labels.len() - 1)
    }

    pub fn add_arc(&mut self, u: Vertex, v: Vertex) -> Result<(), Error> {
        let n = self.vertex_count();
        if u >= n || v >= n {
            return Err(Error::VertexOutOfRange(u.max(v)));
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        match self.out[u].binary_search(&v) {
            Ok(_) => Err(Error::DuplicateArc(u, v)),
            Err(pos) => {
                self.out[u].insert(pos, v);
                let pos = self.inn[v].binary_search(&u).unwrap_err();
                self.inn[v].insert(pos, u);
                self.arc_count += 1;
                Ok(())
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.vertex_count()
    }

    /// All arcs in ascending `(tail, head)` order.
    pub fn arcs(&self) -> impl Iterator<Item = Edge> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, hs)| hs.iter().map(move |&v| (u, v)))
    }

    pub fn arc_vec(&self) -> Vec<Edge> {
        self.arcs().collect()
    }

    /// Position of `(u, v)` in the order produced by [`Digraph::arcs`].
    pub fn arc_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        if u >= self.vertex_count() {
            return None;
        }
        let before: usize = self.out[..u].iter().map(Vec::len).sum();
        self.out[u].binary_search(&v).ok().map(|i| before + i)
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        u < self.vertex_count() && self.out[u].binary_search(&v).is_ok()
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    pub fn out_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.inn[v]
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        self.inn[v].len()
    }

    /// Number of distinct neighbours, counting an antiparallel pair once.
    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    /// Sorted, deduplicated union of in- and out-neighbours.
    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        let (a, b) = (&self.out[v], &self.inn[v]);
        let mut merged = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let next = match (a.get(i), b.get(j)) {
                (Some(&x), Some(&y)) if x == y => {
                    i += 1;
                    j += 1;
                    x
                }
                (Some(&x), Some(&y)) if x < y => {
                    i += 1;
                    x
                }
                (Some(_), Some(&y)) => {
                    j += 1;
                    y
                }
                (Some(&x), None) => {
                    i += 1;
                    x
                }
                (None, Some(&y)) => {
                    j += 1;
                    y
                }
                (None, None) => unreachable!(),
            };
            merged.push(next);
        }
        merged
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<Vertex> {
        self.labels.iter().position(|l| l == label)
    }

    /// Looks up a vertex by label, panicking if it does not exist. Meant for
    /// tests and fixtures.
    pub fn v(&self, label: &str) -> Vertex {
        self.vertex_by_label(label)
            .unwrap_or_else(|| panic!("no vertex labelled {label:?}"))
    }

    pub fn has_antiparallel_pair(&self) -> Option<Edge> {
        self.arcs().find(|&(u, v)| u < v && self.has_arc(v, u))
    }

    /// The subdigraph induced on `keep`, with vertices renumbered in the
    /// order given. Returns the digraph and the map from new ids to old ids.
    pub fn induced(&self, keep: &[Vertex]) -> (Digraph, Vec<Vertex>) {
        let mut local = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            local[v] = i;
        }
        let mut h = Digraph {
            labels: keep.iter().map(|&v| self.labels[v].clone()).collect(),
            out: vec![Vec::new(); keep.len()],
            inn: vec![Vec::new(); keep.len()],
            arc_count: 0,
        };
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.out[v] {
                let j = local[w];
                if j != usize::MAX {
                    h.out[i].push(j);
                    h.inn[j].push(i);
                    h.arc_count += 1;
                }
            }
        }
        for list in h.out.iter_mut().chain(h.inn.iter_mut()) {
            list.sort_unstable();
        }
        (h, keep.to_vec())
    }

    /// Induced subdigraph on the complement of `removed`, keeping ascending order.
    pub fn without_vertices(&self, removed: &[Vertex]) -> (Digraph, Vec<Vertex>) {
        let mut gone = vec![false; self.vertex_count()];
        for &v in removed {
            gone[v] = true;
        }
        let keep: Vec<Vertex> = self.vertices().filter(|&v| !gone[v]).collect();
        self.induced(&keep)
    }

    /// Same vertex set, with the listed arcs deleted.
    pub fn without_arcs(&self, removed: &[Edge]) -> Digraph {
        let mut h = self.clone();
        for &(u, v) in removed {
            if let Ok(i) = h.out[u].binary_search(&v) {
                h.out[u].remove(i);
                let j = h.inn[v].binary_search(&u).unwrap();
                h.inn[v].remove(j);
                h.arc_count -= 1;
            }
        }
        h
    }

    /// Every arc reversed.
    pub fn reversed(&self) -> Digraph {
        Digraph {
            labels: self.labels.clone(),
            out: self.inn.clone(),
            inn: self.out.clone(),
            arc_count: self.arc_count,
        }
    }

    /// Renumbers vertices: old vertex `v` becomes `perm[v]`. Labels travel with
    /// their vertices.
    pub fn permuted(&self, perm: &[Vertex]) -> Digraph {
        let n = self.vertex_count();
        assert_eq!(perm.len(), n, "permutation length mismatch");
        let mut labels = vec![String::new(); n];
        for v in 0..n {
            labels[perm[v]] = self.labels[v].clone();
        }
        let mut g = Digraph {
            labels,
            out: vec![Vec::new(); n],
            inn: vec![Vec::new(); n],
            arc_count: self.arc_count,
        };
        for (u, v) in self.arcs() {
            g.out[perm[u]].push(perm[v]);
            g.inn[perm[v]].push(perm[u]);
        }
        for list in g.out.iter_mut().chain(g.inn.iter_mut()) {
            list.sort_unstable();
        }
        g
    }

    /// Checks that `cycle` (listed without repeating its first vertex) is a
    /// directed cycle of this digraph.
    pub fn is_directed_cycle(&self, cycle: &[Vertex]) -> bool {
        if cycle.len() < 2 {
            return false;
        }
        let distinct: BTreeSet<Vertex> = cycle.iter().copied().collect();
        distinct.len() == cycle.len()
            && cycle
                .iter()
                .zip(cycle.iter().cycle().skip(1))
                .all(|(&u, &v)| self.has_arc(u, v))
    }

    /// Checks that `path` is a directed path (distinct vertices, consecutive arcs).
    pub fn is_directed_path(&self, path: &[Vertex]) -> bool {
        let distinct: BTreeSet<Vertex> = path.iter().copied().collect();
        !path.is_empty()
            && distinct.len() == path.len()
            && path.windows(2).all(|w| self.has_arc(w[0], w[1]))
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arcs: Vec<String> = self
            .arcs()
            .map(|(u, v)| format!("{}->{}", self.labels[u], self.labels[v]))
            .collect();
        f.debug_struct("Digraph")
            .field("n", &self.vertex_count())
            .field("arcs", &arcs)
            .finish()
    }
}

#[derive(Serialize, Deserialize)]
struct DigraphRepr {
    labels: Vec<String>,
    arcs: Vec<Edge>,
}

impl Serialize for Digraph {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        DigraphRepr {
            labels: self.labels.clone(),
            arcs: self.arc_vec(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Digraph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = DigraphRepr::deserialize(d)?;
        let g = Digraph::from_arcs(repr.labels.len(), repr.arcs).map_err(serde::de::Error::custom)?;
        g.with_labels(repr.labels).map_err(serde::de::Error::custom)
    }
}
