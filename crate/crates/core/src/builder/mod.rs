//! Safe building: scripts that grow a digraph from a tricycle by fans of
//! degree-two vertices, their replay, and their extraction.

mod generate;

use serde::{Deserialize, Serialize};

pub use generate::{random_build_script, random_pinched_sum, random_safely_buildable};

use crate::error::Error;
use crate::graph::{is_unbreakable, underlying, Digraph, Edge, Vertex};
use crate::recognition::{find_diwheel, recognize_three_cyclic, tricycles};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildStep {
    /// Has in-degree and out-degree one when the step runs.
    pub pivot: Vertex,
    pub neighbour: Vertex,
    pub add: Vec<Vertex>,
}

/// A base tricycle `base[0] -> base[1] -> base[2] -> base[0]` followed by
/// steps. Ids are those of the final digraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildScript {
    pub base: [Vertex; 3],
    pub steps: Vec<BuildStep>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl BuildScript {
    pub fn vertex_count(&self) -> usize {
        3 + self.steps.iter().map(|s| s.add.len()).sum::<usize>()
    }
}

/// Runs the script. Each added vertex completes a tricycle through the arc
/// between pivot and neighbour.
pub fn replay(s: &BuildScript) -> Result<Digraph, Error> {
    let n = s.vertex_count();
    let mut present = vec![false; n];
    let mut g = Digraph::empty(n);
    let [a, b, c] = s.base;
    for v in s.base {
        if v >= n || present[v] {
            return Err(Error::InvalidScript(format!("base vertex {v} is out of range or repeated")));
        }
        present[v] = true;
    }
    g.add_arc(a, b)?;
    g.add_arc(b, c)?;
    g.add_arc(c, a)?;
    for (index, step) in s.steps.iter().enumerate() {
        let bad = |reason: String| Error::InvalidStep { index, reason };
        let (v, u) = (step.pivot, step.neighbour);
        if v >= n || u >= n || !present[v] || !present[u] {
            return Err(bad("pivot or neighbour not yet present".into()));
        }
        if g.in_degree(v) != 1 || g.out_degree(v) != 1 {
            return Err(bad(format!("pivot {v} does not have degree two")));
        }
        if step.add.is_empty() {
            return Err(bad("no vertices added".into()));
        }
        // The arc between them, as (tail, head).
        let (tail, head) = if g.has_arc(v, u) {
            (v, u)
        } else if g.has_arc(u, v) {
            (u, v)
        } else {
            return Err(bad(format!("{u} is not a neighbour of the pivot")));
        };
        for &w in &step.add {
            if w >= n || present[w] {
                return Err(bad(format!("vertex {w} is out of range or already present")));
            }
            present[w] = true;
            g.add_arc(head, w)?;
            g.add_arc(w, tail)?;
        }
    }
    match &s.labels {
        Some(labels) => g.with_labels(labels.clone()),
        None => Ok(g),
    }
}

/// An arc whose ends leave at most one non-singleton component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeripheralEdge {
    pub arc: Edge,
    /// Vertices outside `rest` and the arc; each completes a tricycle with it.
    pub fan: Vec<Vertex>,
    /// The non-singleton component, empty when there is none.
    pub rest: Vec<Vertex>,
}

/// Picks a tricycle and a component of the rest with the component as large
/// as possible; the two tricycle vertices touching the component give the arc.
pub fn find_peripheral_edge(g: &Digraph) -> Result<PeripheralEdge, Error> {
    let n = g.vertex_count();
    if n < 4 {
        return Err(Error::TooSmall { need: 4, got: n });
    }
    if is_unbreakable(g).is_err() {
        return Err(Error::HypothesisViolated("digraph is not unbreakable".into()));
    }
    let ug = underlying(g);
    let mut best: Option<([Vertex; 3], Vec<Vertex>)> = None;
    for t in tricycles(g) {
        for comp in ug.components_without(&t) {
            if best.as_ref().is_none_or(|(_, b)| comp.len() > b.len()) {
                best = Some((t, comp));
            }
        }
    }
    let (t, big) = best.ok_or_else(|| Error::HypothesisViolated("no tricycle with a vertex outside".into()))?;
    let touching: Vec<Vertex> = t
        .iter()
        .copied()
        .filter(|&s| big.iter().any(|&b| ug.has_edge(s, b)))
        .collect();
    if touching.len() != 2 {
        return Err(Error::HypothesisViolated(format!(
            "{} tricycle vertices touch the largest component",
            touching.len()
        )));
    }
    let (p, q) = (touching[0], touching[1]);
    let arc = if g.has_arc(p, q) { (p, q) } else { (q, p) };
    let rest = if big.len() > 1 { big } else { Vec::new() };
    let fan: Vec<Vertex> = g
        .vertices()
        .filter(|&x| x != arc.0 && x != arc.1 && rest.binary_search(&x).is_err())
        .collect();
    let singletons_ok = ug
        .components_without(&[arc.0, arc.1])
        .iter()
        .all(|c| c.len() == 1 || *c == rest);
    let fan_ok = fan.iter().all(|&x| g.has_arc(arc.1, x) && g.has_arc(x, arc.0));
    if !singletons_ok || !fan_ok {
        return Err(Error::HypothesisViolated("fan vertices do not all complete tricycles with the arc".into()));
    }
    Ok(PeripheralEdge { arc, fan, rest })
}

/// A script whose replay is exactly `g` (ids and labels included).
pub fn extract_build_script(g: &Digraph) -> Result<BuildScript, Error> {
    if let Err(w) = is_unbreakable(g) {
        return Err(Error::HypothesisViolated(format!("digraph is not unbreakable ({w:?})")));
    }
    if !recognize_three_cyclic(g)?.is_three_cyclic() {
        return Err(Error::HypothesisViolated("digraph is not 3-cyclic".into()));
    }
    if let Some(d) = find_diwheel(g) {
        return Err(Error::HypothesisViolated(format!("digraph contains a diwheel with hub {}", d.hub)));
    }
    let labels = Some(g.labels().to_vec());
    let mut alive: Vec<Vertex> = g.vertices().collect();
    let mut steps = Vec::new();
    loop {
        let (h, map) = g.induced(&alive);
        if h.vertex_count() == 3 {
            let [a, b, c] = tricycles(&h)
                .first()
                .copied()
                .ok_or_else(|| Error::HypothesisViolated("three vertices without a tricycle".into()))?;
            steps.reverse();
            return Ok(BuildScript { base: [map[a], map[b], map[c]], steps, labels });
        }
        let pe = find_peripheral_edge(&h)?;
        let (t1, t2) = pe.arc;
        let mut fan = pe.fan;
        if pe.rest.is_empty() {
            // Keep the least fan vertex as the third base vertex.
            let keep = fan.remove(0);
            steps.push(BuildStep {
                pivot: map[t1],
                neighbour: map[t2],
                add: fan.iter().map(|&x| map[x]).collect(),
            });
            steps.reverse();
            return Ok(BuildScript { base: [map[t1], map[t2], map[keep]], steps, labels });
        }
        let mut gone = vec![false; h.vertex_count()];
        for &x in &fan {
            gone[x] = true;
        }
        let deg2 = |v: Vertex| {
            h.out_neighbors(v).iter().filter(|&&w| !gone[w]).count() == 1
                && h.in_neighbors(v).iter().filter(|&&w| !gone[w]).count() == 1
        };
        let (pivot, neighbour) = if deg2(t1) {
            (t1, t2)
        } else if deg2(t2) {
            (t2, t1)
        } else {
            return Err(Error::HypothesisViolated("neither end of the peripheral arc has degree two".into()));
        };
        steps.push(BuildStep {
            pivot: map[pivot],
            neighbour: map[neighbour],
            add: fan.iter().map(|&x| map[x]).collect(),
        });
        alive = (0..h.vertex_count()).filter(|&x| !gone[x]).map(|x| map[x]).collect();
    }
}
