//! Deciding 3-cyclicity with certificates, and the local obstructions:
//! diwheels, branchers and edge activity.

mod brancher;
mod certificate;
mod diwheel;
mod lemmas;

use serde::Serialize;

pub use brancher::{brancher_pattern, find_brancher, find_embedding, BrancherEmbedding};
pub use certificate::{BlockTree, Certificate};
pub use diwheel::{find_diwheel, find_diwheel_at, Diwheel};
pub use lemmas::{
    diamond_violations, nbrs_violations, oneper_violations, tricycles, DiamondViolation,
    OneperViolation,
};

use crate::builder::{extract_build_script, replay};
use crate::decomposition::decompose_unbreakable;
use crate::error::Error;
use crate::graph::{is_unbreakable, strong_components, underlying, Digraph, Edge, Vertex};
use crate::oracle::DEFAULT_MAX_CYCLES;
use crate::rings::compute_lring;

/// Decides whether every directed cycle of `g` is a tricycle.
pub fn recognize_three_cyclic(g: &Digraph) -> Result<Certificate, Error> {
    recognize_three_cyclic_with_budget(g, DEFAULT_MAX_CYCLES)
}

/// As [`recognize_three_cyclic`]; `max_cycles` bounds the cycle scan used to
/// extract a negative witness, and 0 disables that scan.
pub fn recognize_three_cyclic_with_budget(g: &Digraph, max_cycles: usize) -> Result<Certificate, Error> {
    let mut blocks = Vec::new();
    for comp in strong_components(g) {
        if comp.len() < 2 {
            continue;
        }
        let (h, comp_map) = g.induced(&comp);
        if let Some((a, b)) = h.has_antiparallel_pair() {
            return Ok(Certificate::TwoCycle { pair: [comp_map[a], comp_map[b]] });
        }
        for block in underlying(&h).blocks() {
            let (piece, block_map) = h.induced(&block);
            if is_unbreakable(&piece).is_err() {
                return Err(Error::Internal("block of a strong component is not unbreakable".into()));
            }
            let to_g: Vec<Vertex> = block_map.iter().map(|&v| comp_map[v]).collect();
            match decompose_unbreakable(&piece, max_cycles)? {
                Ok(tree) => blocks.push(BlockTree { vertices: to_g, tree }),
                Err(cert) => return Ok(cert.map_vertices(&to_g)),
            }
        }
    }
    Ok(Certificate::ThreeCyclic { blocks })
}

/// Number of components with more than one vertex left in the underlying
/// graph after deleting both ends of `arc`.
pub fn edge_activity(g: &Digraph, arc: Edge) -> Result<usize, Error> {
    let (u, v) = arc;
    if u >= g.vertex_count() || v >= g.vertex_count() || !g.has_arc(u, v) {
        return Err(Error::ArcNotPresent(arc));
    }
    Ok(underlying(g)
        .components_without(&[u, v])
        .iter()
        .filter(|c| c.len() > 1)
        .count())
}

/// The arc of largest activity (first in arc order on ties) and its activity.
pub fn max_activity(g: &Digraph) -> Option<(Edge, usize)> {
    let ug = underlying(g);
    let mut best: Option<(Edge, usize)> = None;
    for (u, v) in g.arcs() {
        let a = ug.components_without(&[u, v]).iter().filter(|c| c.len() > 1).count();
        if best.is_none_or(|(_, b)| a > b) {
            best = Some(((u, v), a));
        }
    }
    best
}

/// The four characterizations of diwheel-freeness for an unbreakable
/// 3-cyclic digraph, each evaluated on its own.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiwheelFreeReport {
    pub no_diwheel: bool,
    pub ring_trees: bool,
    pub degree_two_build: bool,
    pub arc_count: bool,
    pub diwheel: Option<Diwheel>,
    /// First pair of ring parts whose union does not induce a tree.
    pub non_tree_pair: Option<(usize, usize)>,
    pub build_error: Option<String>,
    pub arcs: usize,
    pub expected_arcs: usize,
}

impl DiwheelFreeReport {
    pub fn all_agree(&self) -> bool {
        let v = [self.no_diwheel, self.ring_trees, self.degree_two_build, self.arc_count];
        v.iter().all(|&b| b == v[0])
    }
}

pub fn diwheel_free_report(g: &Digraph) -> Result<DiwheelFreeReport, Error> {
    if is_unbreakable(g).is_err() {
        return Err(Error::HypothesisViolated("digraph is not unbreakable".into()));
    }
    if !recognize_three_cyclic(g)?.is_three_cyclic() {
        return Err(Error::HypothesisViolated("digraph is not 3-cyclic".into()));
    }
    let diwheel = find_diwheel(g);

    let ring = compute_lring(g, 3)?;
    let ug = underlying(g);
    let non_tree_pair = [(0, 1), (1, 2), (2, 0)].into_iter().find(|&(i, j)| {
        let mut set = ring.parts[i].clone();
        set.extend_from_slice(&ring.parts[j]);
        !ug.induces_tree(&set)
    });

    let build_error = match extract_build_script(g).and_then(|s| replay(&s)) {
        Ok(h) if &h == g => None,
        Ok(_) => Some("replayed script differs from the input".to_string()),
        Err(e) => Some(e.to_string()),
    };

    let n = g.vertex_count();
    let expected_arcs = 2 * n - 3;
    Ok(DiwheelFreeReport {
        no_diwheel: diwheel.is_none(),
        ring_trees: non_tree_pair.is_none(),
        degree_two_build: build_error.is_none(),
        arc_count: g.arc_count() == expected_arcs,
        diwheel,
        non_tree_pair,
        build_error,
        arcs: g.arc_count(),
        expected_arcs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::parse_edge_list;

    #[test]
    fn basic_verdicts() {
        let t3 = recognize_three_cyclic(&fixtures::t3()).unwrap();
        assert!(t3.is_three_cyclic() && t3.verify(&fixtures::t3()));
        let c6 = recognize_three_cyclic(&fixtures::c6()).unwrap();
        assert_eq!(c6, Certificate::LongCycle { cycle: (0..6).collect() });
        let w4 = recognize_three_cyclic(&fixtures::w4()).unwrap();
        assert!(w4.is_three_cyclic() && w4.verify(&fixtures::w4()));
        let dc3 = recognize_three_cyclic(&fixtures::dc3()).unwrap();
        assert_eq!(dc3, Certificate::TwoCycle { pair: [0, 1] });
    }

    #[test]
    fn acyclic_and_multi_block_inputs() {
        let path = parse_edge_list("1 2\n2 3").unwrap();
        let cert = recognize_three_cyclic(&path).unwrap();
        assert_eq!(cert, Certificate::ThreeCyclic { blocks: vec![] });
        assert!(cert.verify(&path));

        let bowtie = parse_edge_list("a b\nb s\ns a\ns c\nc d\nd s\nd e").unwrap();
        let cert = recognize_three_cyclic(&bowtie).unwrap();
        let Certificate::ThreeCyclic { blocks } = &cert else { panic!() };
        assert_eq!(blocks.len(), 2);
        assert!(cert.verify(&bowtie));

        let long_in_second_block = parse_edge_list("a b\nb s\ns a\ns c\nc d\nd e\ne f\nf g\ng s").unwrap();
        let cert = recognize_three_cyclic(&long_in_second_block).unwrap();
        assert_eq!(cert.kind(), "long_cycle");
        assert!(cert.verify(&long_in_second_block));
    }

    #[test]
    fn negative_certificates_replay() {
        let five = parse_edge_list("1 2\n2 3\n3 4\n4 5\n5 1").unwrap();
        let c = recognize_three_cyclic(&five).unwrap();
        assert_eq!(c.kind(), "not_ringable");
        assert!(c.verify(&five));
        // A 6-cycle with a chord makes a ring but no pinch.
        let chord = parse_edge_list("1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n1 5\n").unwrap();
        let c = recognize_three_cyclic(&chord).unwrap();
        assert!(!c.is_three_cyclic());
        assert!(c.verify(&chord));
    }

    #[test]
    fn structural_only_mode() {
        let c = recognize_three_cyclic_with_budget(&fixtures::c6(), 0).unwrap();
        assert_eq!(c.kind(), "no_valid_split");
        assert!(c.verify(&fixtures::c6()));
        assert!(!c.verify(&fixtures::t3()));
    }

    #[test]
    fn certificate_json() {
        let c = recognize_three_cyclic(&fixtures::c6()).unwrap();
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(json, r#"{"kind":"long_cycle","cycle":[0,1,2,3,4,5]}"#);
        let d = Certificate::Diwheel(find_diwheel(&fixtures::w4()).unwrap());
        let back: Certificate = serde_json::from_str(&serde_json::to_string(&d).unwrap()).unwrap();
        assert_eq!(back, d);
        let t = recognize_three_cyclic(&fixtures::glue6()).unwrap();
        let back: Certificate = serde_json::from_str(&serde_json::to_string(&t).unwrap()).unwrap();
        assert!(back.verify(&fixtures::glue6()));
    }

    #[test]
    fn forged_certificates_fail() {
        let g = fixtures::t3();
        assert!(!Certificate::LongCycle { cycle: vec![0, 1, 2] }.verify(&g));
        assert!(!Certificate::TwoCycle { pair: [0, 1] }.verify(&g));
        assert!(!Certificate::ThreeCyclic { blocks: vec![] }.verify(&g));
        let c6 = fixtures::c6();
        let t = recognize_three_cyclic(&g).unwrap();
        assert!(!t.verify(&c6));
    }

    #[test]
    fn activities() {
        let b1 = fixtures::b1();
        assert_eq!(edge_activity(&b1, (b1.v("x"), b1.v("y"))).unwrap(), 3);
        let w4 = fixtures::w4();
        assert_eq!(edge_activity(&w4, (w4.v("h"), w4.v("1"))).unwrap(), 1);
        let t3 = fixtures::t3();
        assert_eq!(edge_activity(&t3, (0, 1)).unwrap(), 0);
        assert!(matches!(edge_activity(&t3, (1, 0)), Err(Error::ArcNotPresent(_))));
        assert_eq!(max_activity(&b1).unwrap().1, 3);
    }

    #[test]
    fn reports() {
        let fan = diwheel_free_report(&fixtures::fan2()).unwrap();
        assert!(fan.no_diwheel && fan.ring_trees && fan.degree_two_build && fan.arc_count);
        assert_eq!(fan.arcs, 5);
        let w4 = diwheel_free_report(&fixtures::w4()).unwrap();
        assert!(!w4.no_diwheel && !w4.ring_trees && !w4.degree_two_build && !w4.arc_count);
        assert_eq!((w4.arcs, w4.expected_arcs), (8, 7));
        let b1 = diwheel_free_report(&fixtures::b1()).unwrap();
        assert!(b1.all_agree() && b1.no_diwheel);
        assert_eq!(b1.arcs, 13);
        assert!(matches!(diwheel_free_report(&fixtures::c6()), Err(Error::HypothesisViolated(_))));
    }
}
