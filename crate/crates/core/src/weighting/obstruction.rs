use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::is_feasible;
use crate::error::Error;
use crate::graph::{Digraph, Edge, Vertex};
use crate::oracle::{enumerate_cycles, DEFAULT_MAX_CYCLES};

/// Directed cycles `C_1..C_k` in circular order: consecutive cycles meet in
/// a directed path, the others are disjoint, and no vertex lies in three.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeakDoubleCycle {
    pub k: usize,
    pub cycles: Vec<Vec<Vertex>>,
    /// `shared[i]` is the path `C_i ∩ C_{i+1}` (indices mod k).
    pub shared: Vec<Vec<Vertex>>,
    /// All arcs of the union, sorted.
    pub arcs: Vec<Edge>,
}

fn cycle_arcs(c: &[Vertex]) -> BTreeSet<Edge> {
    (0..c.len()).map(|i| (c[i], c[(i + 1) % c.len()])).collect()
}

/// The intersection of two cycles if it is a non-empty directed path.
fn meet(a: &[Vertex], b: &[Vertex]) -> Option<Vec<Vertex>> {
    let vb: BTreeSet<Vertex> = b.iter().copied().collect();
    let common: BTreeSet<Vertex> = a.iter().copied().filter(|v| vb.contains(v)).collect();
    if common.is_empty() {
        return None;
    }
    let ab = cycle_arcs(b);
    let arcs: Vec<Edge> = cycle_arcs(a).into_iter().filter(|e| ab.contains(e)).collect();
    if arcs.len() + 1 != common.len() {
        return None;
    }
    let heads: BTreeSet<Vertex> = arcs.iter().map(|e| e.1).collect();
    let mut v = *common.iter().find(|v| !heads.contains(v))?;
    let mut path = vec![v];
    while let Some(&(_, w)) = arcs.iter().find(|e| e.0 == v) {
        path.push(w);
        v = w;
    }
    (path.len() == common.len()).then_some(path)
}

fn disjoint(a: &[Vertex], b: &[Vertex]) -> bool {
    a.iter().all(|v| !b.contains(v))
}

impl WeakDoubleCycle {
    /// Checks the pattern from scratch and that every arc lies in `g`.
    pub fn verify(&self, g: &Digraph) -> bool {
        let k = self.cycles.len();
        if k < 3 || self.k != k || self.shared.len() != k {
            return false;
        }
        if !self.cycles.iter().all(|c| g.is_directed_cycle(c)) {
            return false;
        }
        for i in 0..k {
            for j in i + 1..k {
                let adjacent = j == i + 1 || (i == 0 && j == k - 1);
                if !adjacent && !disjoint(&self.cycles[i], &self.cycles[j]) {
                    return false;
                }
            }
            if meet(&self.cycles[i], &self.cycles[(i + 1) % k]).as_ref() != Some(&self.shared[i]) {
                return false;
            }
        }
        let mut seen = vec![0usize; g.vertex_count()];
        for c in &self.cycles {
            for &v in c {
                seen[v] += 1;
            }
        }
        let union: BTreeSet<Edge> = self.cycles.iter().flat_map(|c| cycle_arcs(c)).collect();
        seen.iter().all(|&s| s <= 2) && union.into_iter().eq(self.arcs.iter().copied())
    }
}

/// A weak double-cycle with at least three cycles inside `g`, or `None` when
/// `g` is weightable. Arcs are dropped in ascending order while the rest stays
/// infeasible; what remains is matched against the pattern.
pub fn find_weak_double_cycle(g: &Digraph) -> Result<Option<WeakDoubleCycle>, Error> {
    find_weak_double_cycle_with_budget(g, DEFAULT_MAX_CYCLES)
}

pub fn find_weak_double_cycle_with_budget(g: &Digraph, max_cycles: usize) -> Result<Option<WeakDoubleCycle>, Error> {
    if is_feasible(g, max_cycles)? {
        return Ok(None);
    }
    // Infeasibility passes to supergraphs, so an arc kept once can never
    // become deletable later and a single pass reaches a minimal subgraph.
    let mut removed = Vec::new();
    for arc in g.arc_vec() {
        removed.push(arc);
        if is_feasible(&g.without_arcs(&removed), max_cycles)? {
            removed.pop();
        }
    }
    let h = g.without_arcs(&removed);
    let found = match_pattern(&h, max_cycles)?;
    found.map(Some).ok_or_else(|| {
        Error::PatternMismatch(format!("minimal infeasible subgraph with arcs {:?}", h.arc_vec()))
    })
}

fn match_pattern(h: &Digraph, max_cycles: usize) -> Result<Option<WeakDoubleCycle>, Error> {
    let arcs: BTreeSet<Edge> = h.arcs().collect();
    let Some(&first) = arcs.iter().next() else {
        return Ok(None);
    };
    let mut cycles = enumerate_cycles(h, max_cycles)?;
    cycles.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let starts: Vec<usize> = (0..cycles.len()).filter(|&i| cycle_arcs(&cycles[i]).contains(&first)).collect();
    let mut search = Search { cycles: &cycles, arcs: &arcs, n: h.vertex_count(), chain: Vec::new(), shared: Vec::new() };
    for s in starts {
        search.chain = vec![s];
        if let Some(found) = search.extend() {
            return Ok(Some(found));
        }
    }
    Ok(None)
}

struct Search<'a> {
    cycles: &'a [Vec<Vertex>],
    arcs: &'a BTreeSet<Edge>,
    n: usize,
    chain: Vec<usize>,
    shared: Vec<Vec<Vertex>>,
}

impl Search<'_> {
    fn extend(&mut self) -> Option<WeakDoubleCycle> {
        let last = *self.chain.last().expect("non-empty chain");
        if self.chain.len() >= 3 {
            if let Some(found) = self.close() {
                return Some(found);
            }
        }
        for next in 0..self.cycles.len() {
            if self.chain.contains(&next) {
                continue;
            }
            let c = &self.cycles[next];
            let Some(path) = meet(&self.cycles[last], c) else {
                continue;
            };
            // Only the first and last cycles may meet the new one, and the
            // first only when it will close the ring.
            let len = self.chain.len();
            if len >= 2 && self.chain[1..len - 1].iter().any(|&i| !disjoint(&self.cycles[i], c)) {
                continue;
            }
            if len >= 2 && !disjoint(&self.cycles[self.chain[0]], c) && meet(&self.cycles[self.chain[0]], c).is_none() {
                continue;
            }
            if !self.multiplicity_ok(c) {
                continue;
            }
            self.chain.push(next);
            self.shared.push(path);
            if let Some(found) = self.extend() {
                return Some(found);
            }
            self.chain.pop();
            self.shared.pop();
        }
        None
    }

    fn multiplicity_ok(&self, c: &[Vertex]) -> bool {
        let mut seen = vec![0usize; self.n];
        for v in self.chain.iter().flat_map(|&i| self.cycles[i].iter()).chain(c) {
            seen[*v] += 1;
            if seen[*v] > 2 {
                return false;
            }
        }
        true
    }

    fn close(&self) -> Option<WeakDoubleCycle> {
        let first = &self.cycles[self.chain[0]];
        let last = &self.cycles[*self.chain.last()?];
        let closing = meet(last, first)?;
        let k = self.chain.len();
        if self.chain[2..k - 1].iter().any(|&i| !disjoint(first, &self.cycles[i])) {
            return None;
        }
        let union: BTreeSet<Edge> = self.chain.iter().flat_map(|&i| cycle_arcs(&self.cycles[i])).collect();
        if &union != self.arcs {
            return None;
        }
        let mut shared = self.shared.clone();
        shared.push(closing);
        Some(WeakDoubleCycle {
            k,
            cycles: self.chain.iter().map(|&i| self.cycles[i].clone()).collect(),
            shared,
            arcs: union.into_iter().collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::parse_edge_list;

    #[test]
    fn weightable_graphs_have_none() {
        assert_eq!(find_weak_double_cycle(&fixtures::t3()).unwrap(), None);
        assert_eq!(find_weak_double_cycle(&fixtures::w4()).unwrap(), None);
        assert_eq!(find_weak_double_cycle(&fixtures::double_cycle(2)).unwrap(), None);
    }

    #[test]
    fn double_cycles_are_their_own_obstruction() {
        for k in 3..7 {
            let g = fixtures::double_cycle(k);
            let w = find_weak_double_cycle(&g).unwrap().unwrap();
            assert_eq!(w.k, k);
            assert_eq!(w.arcs, g.arc_vec());
            assert!(w.verify(&g));
            assert!(w.cycles.iter().all(|c| c.len() == 2));
        }
    }

    #[test]
    fn pendant_tricycle_is_stripped() {
        let g = parse_edge_list("0 1\n1 0\n1 2\n2 1\n2 0\n0 2\n0 3\n3 4\n4 0").unwrap();
        let w = find_weak_double_cycle(&g).unwrap().unwrap();
        assert_eq!(w.k, 3);
        assert_eq!(w.arcs, fixtures::dc3().arc_vec());
        assert!(w.verify(&g));
    }

    #[test]
    fn subdivided_obstruction() {
        // DC3 with the arc 0 -> 1 replaced by 0 -> 3 -> 1.
        let g = parse_edge_list("0 3\n3 1\n1 0\n1 2\n2 1\n2 0\n0 2").unwrap();
        let w = find_weak_double_cycle(&g).unwrap().unwrap();
        assert_eq!(w.k, 3);
        assert!(w.verify(&g));
        assert_eq!(w.arcs.len(), g.arc_count());
    }

    #[test]
    fn verify_rejects_broken_patterns() {
        let g = fixtures::dc3();
        let mut w = find_weak_double_cycle(&g).unwrap().unwrap();
        w.cycles.swap(0, 1);
        assert!(!w.verify(&g));
        let good = find_weak_double_cycle(&g).unwrap().unwrap();
        assert!(!good.verify(&fixtures::t3()));
    }
}
