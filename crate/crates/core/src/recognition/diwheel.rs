use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::graph::{Digraph, Vertex};

/// A hub together with an even rim in which every rim edge makes a tricycle
/// with the hub.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Diwheel {
    pub hub: Vertex,
    pub rim: Vec<Vertex>,
}

impl Diwheel {
    pub fn verify(&self, g: &Digraph) -> bool {
        let n = g.vertex_count();
        let k = self.rim.len();
        if k < 4 || !k.is_multiple_of(2) || self.hub >= n || self.rim.iter().any(|&x| x >= n || x == self.hub) {
            return false;
        }
        let mut sorted = self.rim.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != k {
            return false;
        }
        let h = self.hub;
        (0..k).all(|i| {
            let (x, y) = (self.rim[i], self.rim[(i + 1) % k]);
            (g.has_arc(x, y) && g.has_arc(y, h) && g.has_arc(h, x))
                || (g.has_arc(y, x) && g.has_arc(x, h) && g.has_arc(h, y))
        })
    }

    /// Vertex set, hub first.
    pub fn vertices(&self) -> Vec<Vertex> {
        std::iter::once(self.hub).chain(self.rim.iter().copied()).collect()
    }
}

/// Starts at the smallest vertex and heads towards its smaller neighbour.
fn canonical_rim(mut rim: Vec<Vertex>) -> Vec<Vertex> {
    let i = (0..rim.len()).min_by_key(|&i| rim[i]).unwrap_or(0);
    rim.rotate_left(i);
    if rim.len() > 2 && rim[rim.len() - 1] < rim[1] {
        rim[1..].reverse();
    }
    rim
}

/// Partner graph of a hub: node `2i` is the out-copy and `2i + 1` the in-copy
/// of the `i`-th neighbour; an out-copy `a` meets an in-copy `b` when `a -> b`.
struct Partner {
    ids: Vec<Vertex>,
    adj: Vec<Vec<usize>>,
}

fn partner_graph(g: &Digraph, hub: Vertex) -> Partner {
    let ids = g.neighbors(hub);
    let slot = |x: Vertex| ids.binary_search(&x).ok();
    let mut adj = vec![Vec::new(); 2 * ids.len()];
    for &a in g.out_neighbors(hub) {
        let ia = slot(a).unwrap();
        for &b in g.out_neighbors(a) {
            if b != hub && g.has_arc(b, hub) {
                let ib = slot(b).unwrap();
                adj[2 * ia].push(2 * ib + 1);
                adj[2 * ib + 1].push(2 * ia);
            }
        }
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    Partner { ids, adj }
}

/// Shortest cycle of a simple graph, by deleting each edge in turn and
/// searching for a shortest path between its ends.
fn shortest_cycle(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    let m = adj.len();
    let mut best: Option<Vec<usize>> = None;
    for x in 0..m {
        for &y in &adj[x] {
            if y < x {
                continue;
            }
            let mut prev = vec![usize::MAX; m];
            prev[x] = x;
            let mut queue = VecDeque::from([x]);
            'bfs: while let Some(p) = queue.pop_front() {
                for &q in &adj[p] {
                    if (p == x && q == y) || prev[q] != usize::MAX {
                        continue;
                    }
                    prev[q] = p;
                    if q == y {
                        break 'bfs;
                    }
                    queue.push_back(q);
                }
            }
            if prev[y] == usize::MAX {
                continue;
            }
            let mut cycle = vec![y];
            let mut cur = y;
            while cur != x {
                cur = prev[cur];
                cycle.push(cur);
            }
            if best.as_ref().is_none_or(|b| cycle.len() < b.len()) {
                best = Some(cycle);
            }
        }
    }
    best
}

/// Shortest cycle that never uses both copies of one neighbour.
fn shortest_proper_cycle(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    fn extend(adj: &[Vec<usize>], path: &mut Vec<usize>, used: &mut [bool], len: usize) -> bool {
        let p = *path.last().unwrap();
        if path.len() == len {
            return adj[p].contains(&path[0]);
        }
        for &q in &adj[p] {
            if q < path[0] || used[q / 2] {
                continue;
            }
            used[q / 2] = true;
            path.push(q);
            if extend(adj, path, used, len) {
                return true;
            }
            path.pop();
            used[q / 2] = false;
        }
        false
    }
    let m = adj.len();
    for len in (4..=m / 2 * 2).step_by(2) {
        for s in 0..m {
            let mut used = vec![false; m / 2];
            used[s / 2] = true;
            let mut path = vec![s];
            if extend(adj, &mut path, &mut used, len) {
                return Some(path);
            }
        }
    }
    None
}

pub fn find_diwheel_at(g: &Digraph, hub: Vertex) -> Option<Diwheel> {
    let partner = partner_graph(g, hub);
    let dual = partner
        .ids
        .iter()
        .any(|&x| g.has_arc(hub, x) && g.has_arc(x, hub));
    let cycle = if dual {
        shortest_proper_cycle(&partner.adj)?
    } else {
        shortest_cycle(&partner.adj)?
    };
    let rim = cycle.into_iter().map(|node| partner.ids[node / 2]).collect();
    Some(Diwheel { hub, rim: canonical_rim(rim) })
}

/// A diwheel whose hub is as small as possible, with a shortest rim.
pub fn find_diwheel(g: &Digraph) -> Option<Diwheel> {
    g.vertices()
        .filter(|&v| g.out_degree(v) >= 2 && g.in_degree(v) >= 2)
        .find_map(|v| find_diwheel_at(g, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::parse_edge_list;

    #[test]
    fn diwheel_of_w4() {
        let g = fixtures::w4();
        let d = find_diwheel(&g).unwrap();
        assert_eq!(d.hub, g.v("h"));
        let rim: Vec<&str> = d.rim.iter().map(|&v| g.label(v)).collect();
        assert_eq!(rim, vec!["1", "2", "3", "4"]);
        assert!(d.verify(&g));
    }

    #[test]
    fn diwheel_free_fixtures() {
        for g in [fixtures::t3(), fixtures::b1(), fixtures::b2(), fixtures::fan4(), fixtures::glue6()] {
            assert_eq!(find_diwheel(&g), None);
        }
    }

    #[test]
    fn six_rim() {
        // hub h, rim r0..r5 alternating out/in neighbours
        let mut text = String::new();
        for i in 0..6 {
            let (x, y) = (format!("r{i}"), format!("r{}", (i + 1) % 6));
            if i % 2 == 0 {
                text += &format!("h {x}\n{x} {y}\n{y} h\n");
            } else {
                text += &format!("{y} {x}\n");
            }
        }
        let g = parse_edge_list(&text).unwrap();
        let d = find_diwheel(&g).unwrap();
        assert_eq!(d.rim.len(), 6);
        assert!(d.verify(&g));
    }

    #[test]
    fn dual_role_neighbours_are_not_reused() {
        // h <-> a; the only partner cycle would use both copies of a.
        let g = parse_edge_list("h a\na h\na b\nb h\nh c\nc a").unwrap();
        assert_eq!(find_diwheel(&g), None);
        let w = parse_edge_list("h 1\nh 3\n2 h\n4 h\n1 2\n3 2\n3 4\n1 4\nh 2\n").unwrap();
        let d = find_diwheel(&w).unwrap();
        assert!(d.verify(&w));
    }

    #[test]
    fn verify_rejects_broken_rims() {
        let g = fixtures::w4();
        let mut d = find_diwheel(&g).unwrap();
        d.rim.swap(0, 1);
        assert!(!d.verify(&g));
        assert!(!Diwheel { hub: 0, rim: vec![1, 2] }.verify(&g));
    }
}
