//! Special edges, special edge sums, splitting at 2-cutsets, and
//! decomposition into pinched pieces.

mod tree;

use std::collections::HashSet;
use std::ops::ControlFlow;

use crate::error::{Error, Side};
use crate::graph::{is_unbreakable, underlying, Digraph, Edge, Vertex};
use crate::oracle::visit_cycles;
use crate::recognition::Certificate;
use crate::rings::{compute_lring, is_pinched, rotate_to_min};

pub use tree::{recompose, DecompositionTree};

pub(crate) fn is_special_in(g: &Digraph, (u, v): Edge) -> Result<bool, Error> {
    if u >= g.vertex_count() || v >= g.vertex_count() || !g.has_arc(u, v) {
        return Err(Error::ArcNotPresent((u, v)));
    }
    Ok(g.out_degree(u) == 1 || g.in_degree(v) == 1)
}

/// Whether `u` has out-degree one or `v` has in-degree one.
pub fn is_special_edge(g: &Digraph, arc: Edge) -> Result<bool, Error> {
    is_special_in(g, arc)
}

/// The result of gluing two digraphs along an arc, with the placement of
/// each operand's vertices in the sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSum {
    pub graph: Digraph,
    pub left_map: Vec<Vertex>,
    pub right_map: Vec<Vertex>,
}

/// Identifies `a1` of `g1` with `a2` of `g2`. Vertices of `g1` keep their
/// ids; the other vertices of `g2` follow in ascending order. A label of `g2`
/// that is already taken gets `'` appended until it is free.
pub fn special_edge_sum_with_maps(g1: &Digraph, a1: Edge, g2: &Digraph, a2: Edge) -> Result<EdgeSum, Error> {
    if !is_special_in(g1, a1)? {
        return Err(Error::NotSpecial(Side::Left));
    }
    if !is_special_in(g2, a2)? {
        return Err(Error::NotSpecial(Side::Right));
    }
    let n1 = g1.vertex_count();
    let mut labels: Vec<String> = g1.labels().to_vec();
    let mut taken: HashSet<String> = labels.iter().cloned().collect();
    let mut right_map = vec![usize::MAX; g2.vertex_count()];
    right_map[a2.0] = a1.0;
    right_map[a2.1] = a1.1;
    for x in g2.vertices() {
        if right_map[x] != usize::MAX {
            continue;
        }
        let mut label = g2.label(x).to_string();
        while taken.contains(&label) {
            label.push('\'');
        }
        taken.insert(label.clone());
        labels.push(label);
        right_map[x] = labels.len() - 1;
    }
    let mut g = Digraph::empty(labels.len());
    for (u, v) in g1.arcs() {
        g.add_arc(u, v)?;
    }
    for (u, v) in g2.arcs() {
        let (x, y) = (right_map[u], right_map[v]);
        if !g.has_arc(x, y) {
            g.add_arc(x, y)?;
        }
    }
    Ok(EdgeSum {
        graph: g.with_labels(labels)?,
        left_map: (0..n1).collect(),
        right_map,
    })
}

pub fn special_edge_sum(g1: &Digraph, a1: Edge, g2: &Digraph, a2: Edge) -> Result<Digraph, Error> {
    special_edge_sum_with_maps(g1, a1, g2, a2).map(|s| s.graph)
}

/// Two pieces sharing an arc; each map sends piece ids to ids of the split digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Split {
    pub arc: Edge,
    pub left: Digraph,
    pub left_map: Vec<Vertex>,
    pub right: Digraph,
    pub right_map: Vec<Vertex>,
}

/// Splits `g` at the arc `(u, v)` whose ends form a cutset of the underlying
/// graph. Components holding an out-neighbour of `u` go left, the rest right;
/// when one side would be empty the first component is peeled off alone.
/// Both pieces must be unbreakable with `(u, v)` special, else `SplitInvalid`.
pub fn split_at(g: &Digraph, arc: Edge) -> Result<Split, Error> {
    let (u, v) = arc;
    if u >= g.vertex_count() || v >= g.vertex_count() || !g.has_arc(u, v) {
        return Err(Error::ArcNotPresent(arc));
    }
    let comps = underlying(g).components_without(&[u, v]);
    if comps.len() < 2 {
        return Err(Error::SplitInvalid(format!(
            "{{{}, {}}} is not a cutset",
            g.label(u),
            g.label(v)
        )));
    }
    let (mut side_a, mut side_b): (Vec<&Vec<Vertex>>, Vec<&Vec<Vertex>>) = comps
        .iter()
        .partition(|c| c.iter().any(|&x| g.has_arc(u, x)));
    if side_a.is_empty() || side_b.is_empty() {
        let all: Vec<&Vec<Vertex>> = comps.iter().collect();
        side_a = vec![all[0]];
        side_b = all[1..].to_vec();
    }
    let piece = |side: &[&Vec<Vertex>]| -> Result<(Digraph, Vec<Vertex>), Error> {
        let mut keep: Vec<Vertex> = side.iter().flat_map(|c| c.iter().copied()).chain([u, v]).collect();
        keep.sort_unstable();
        let (h, map) = g.induced(&keep);
        let local = (map.binary_search(&u).unwrap(), map.binary_search(&v).unwrap());
        if !is_special_in(&h, local)? {
            return Err(Error::SplitInvalid(format!(
                "{}->{} is not special in a piece",
                g.label(u),
                g.label(v)
            )));
        }
        if is_unbreakable(&h).is_err() {
            return Err(Error::SplitInvalid("a piece is not unbreakable".into()));
        }
        Ok((h, map))
    };
    let (left, left_map) = piece(&side_a)?;
    let (right, right_map) = piece(&side_b)?;
    Ok(Split { arc, left, left_map, right, right_map })
}

/// First pair `{u, v}` (lexicographically) whose removal disconnects the
/// underlying graph.
fn first_cutset(g: &Digraph) -> Option<(Vertex, Vertex)> {
    let ug = underlying(g);
    let n = g.vertex_count();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .find(|&(u, v)| ug.components_without(&[u, v]).len() > 1)
}

/// A cycle of length other than three, found by scanning the cycles of `g`.
/// `max_cycles == 0` skips the scan and reports the structural failure.
fn bad_cycle(g: &Digraph, max_cycles: usize, reason: &str) -> Result<Certificate, Error> {
    if max_cycles == 0 {
        return Ok(Certificate::NoValidSplit {
            vertices: g.vertices().collect(),
            reason: reason.to_string(),
        });
    }
    let mut seen = 0usize;
    let mut found = None;
    let mut over = false;
    let _ = visit_cycles(g, |c| {
        seen += 1;
        if seen > max_cycles {
            over = true;
            return ControlFlow::Break(());
        }
        if c.len() != 3 {
            found = Some(c.to_vec());
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    match found {
        Some(c) if c.len() == 2 => Ok(Certificate::TwoCycle { pair: [c[0], c[1]] }),
        Some(c) => Ok(Certificate::LongCycle { cycle: rotate_to_min(c) }),
        None if over => Err(Error::CycleBudgetExceeded(max_cycles)),
        None => Err(Error::Internal(format!("piece rejected ({reason}) but all its cycles are tricycles"))),
    }
}

/// Decomposes an unbreakable digraph, or returns a certificate (in `g`'s ids)
/// that it is not 3-cyclic.
pub(crate) fn decompose_unbreakable(
    g: &Digraph,
    max_cycles: usize,
) -> Result<Result<DecompositionTree, Certificate>, Error> {
    let ring = match compute_lring(g, 3) {
        Ok(r) => r,
        Err(Error::NotRingable { cycle, .. }) => {
            return Ok(Err(if cycle.len() == 2 {
                Certificate::TwoCycle { pair: [cycle[0], cycle[1]] }
            } else {
                Certificate::NotRingable { cycle }
            }))
        }
        Err(e) => return Err(e),
    };
    if is_pinched(&ring) {
        return Ok(Ok(DecompositionTree::Leaf { graph: g.clone(), ring }));
    }
    let Some((a, b)) = first_cutset(g) else {
        return bad_cycle(g, max_cycles, "no 2-cutset").map(Err);
    };
    let arc = if g.has_arc(a, b) {
        (a, b)
    } else if g.has_arc(b, a) {
        (b, a)
    } else {
        return bad_cycle(g, max_cycles, "2-cutset with nonadjacent ends").map(Err);
    };
    let split = match split_at(g, arc) {
        Ok(s) => s,
        Err(Error::SplitInvalid(reason)) => return bad_cycle(g, max_cycles, &reason).map(Err),
        Err(e) => return Err(e),
    };
    let left = match decompose_unbreakable(&split.left, max_cycles)? {
        Ok(t) => t,
        Err(cert) => return Ok(Err(cert.map_vertices(&split.left_map))),
    };
    let right = match decompose_unbreakable(&split.right, max_cycles)? {
        Ok(t) => t,
        Err(cert) => return Ok(Err(cert.map_vertices(&split.right_map))),
    };
    Ok(Ok(DecompositionTree::Sum {
        arc,
        left_map: split.left_map,
        right_map: split.right_map,
        left: Box::new(left),
        right: Box::new(right),
    }))
}

/// Decomposition of an unbreakable 3-cyclic digraph into pinched leaves.
pub fn decompose(g: &Digraph) -> Result<DecompositionTree, Error> {
    decompose_with_budget(g, crate::oracle::DEFAULT_MAX_CYCLES)
}

pub fn decompose_with_budget(g: &Digraph, max_cycles: usize) -> Result<DecompositionTree, Error> {
    if is_unbreakable(g).is_err() {
        return Err(Error::NotUnbreakable);
    }
    decompose_unbreakable(g, max_cycles)?.map_err(|c| Error::NotThreeCyclic(Box::new(c)))
}
