//! Local structure that every unbreakable 3-cyclic digraph must have. These
//! return violations rather than booleans so failures can be reported.

use serde::Serialize;

use crate::graph::{underlying, Digraph, Edge, UnderlyingGraph, Vertex};

/// Vertex sets of tricycles, each listed from its smallest vertex along the
/// cycle, in ascending order.
pub fn tricycles(g: &Digraph) -> Vec<[Vertex; 3]> {
    let mut out = Vec::new();
    for (u, v) in g.arcs() {
        if v < u {
            continue;
        }
        for &w in g.out_neighbors(v) {
            if w > u && g.has_arc(w, u) {
                out.push([u, v, w]);
            }
        }
    }
    out
}

fn connected_within(ug: &UnderlyingGraph, set: &[Vertex]) -> bool {
    let mut inside = vec![false; ug.vertex_count()];
    for &v in set {
        inside[v] = true;
    }
    let removed: Vec<Vertex> = (0..ug.vertex_count()).filter(|&v| !inside[v]).collect();
    ug.components_without(&removed).len() <= 1
}

/// Vertices whose neighbourhood is not weakly connected.
pub fn nbrs_violations(g: &Digraph) -> Vec<Vertex> {
    let ug = underlying(g);
    g.vertices()
        .filter(|&v| !connected_within(&ug, ug.neighbors(v)))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiamondViolation {
    pub arc: Edge,
    pub u: Vertex,
    pub v: Vertex,
}

/// Pairs of tricycle partners of one arc that stay connected after deleting
/// the arc's ends.
pub fn diamond_violations(g: &Digraph) -> Vec<DiamondViolation> {
    let ug = underlying(g);
    let mut out = Vec::new();
    for (x, y) in g.arcs() {
        let partners: Vec<Vertex> = g
            .out_neighbors(y)
            .iter()
            .copied()
            .filter(|&z| z != x && g.has_arc(z, x))
            .collect();
        if partners.len() < 2 {
            continue;
        }
        let comps = ug.components_without(&[x, y]);
        let comp_of = |z: Vertex| comps.iter().position(|c| c.binary_search(&z).is_ok());
        for (i, &u) in partners.iter().enumerate() {
            for &v in &partners[i + 1..] {
                if comp_of(u) == comp_of(v) {
                    out.push(DiamondViolation { arc: (x, y), u, v });
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OneperViolation {
    pub tricycle: [Vertex; 3],
    pub component: Vec<Vertex>,
    /// Tricycle vertices with a neighbour in the component.
    pub attached: Vec<Vertex>,
    /// Component vertices completing a tricycle with the two attached ones.
    pub completions: Vec<Vertex>,
}

/// Tricycle/component pairs where the component does not attach to exactly
/// two tricycle vertices through exactly one completing vertex.
pub fn oneper_violations(g: &Digraph) -> Vec<OneperViolation> {
    let ug = underlying(g);
    let mut out = Vec::new();
    for t in tricycles(g) {
        for comp in ug.components_without(&t) {
            let attached: Vec<Vertex> = t
                .iter()
                .copied()
                .filter(|&s| comp.iter().any(|&b| ug.has_edge(s, b)))
                .collect();
            let completions: Vec<Vertex> = if attached.len() == 2 {
                let (p, q) = (attached[0], attached[1]);
                comp.iter()
                    .copied()
                    .filter(|&b| {
                        (g.has_arc(p, q) && g.has_arc(q, b) && g.has_arc(b, p))
                            || (g.has_arc(q, p) && g.has_arc(p, b) && g.has_arc(b, q))
                    })
                    .collect()
            } else {
                Vec::new()
            };
            if attached.len() != 2 || completions.len() != 1 {
                out.push(OneperViolation { tricycle: t, component: comp, attached, completions });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn tricycle_listing() {
        assert_eq!(tricycles(&fixtures::t3()), vec![[0, 1, 2]]);
        assert_eq!(tricycles(&fixtures::w4()).len(), 4);
        assert_eq!(tricycles(&fixtures::b1()).len(), 6);
        assert!(tricycles(&fixtures::c6()).is_empty());
    }

    #[test]
    fn lemmas_hold_on_diwheel_free_fixtures() {
        for g in [fixtures::t3(), fixtures::fan2(), fixtures::fan4(), fixtures::b1(), fixtures::b2(), fixtures::glue6()] {
            assert!(nbrs_violations(&g).is_empty());
            assert!(diamond_violations(&g).is_empty());
            assert!(oneper_violations(&g).is_empty());
        }
    }

    #[test]
    fn diwheel_breaks_the_diamond() {
        let w4 = fixtures::w4();
        assert!(nbrs_violations(&w4).is_empty());
        assert!(!diamond_violations(&w4).is_empty());
    }

    #[test]
    fn neighbourhoods_of_a_long_cycle() {
        assert_eq!(nbrs_violations(&fixtures::c6()).len(), 6);
    }
}
