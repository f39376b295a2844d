use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::Serialize;

use super::{Digraph, Vertex};
use crate::error::Error;

/// A path of the underlying graph. `toward[i]` says whether the step from
/// `vertices[i]` to `vertices[i + 1]` can use an arc pointing that way.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AwayPath {
    pub vertices: Vec<Vertex>,
    pub toward: Vec<bool>,
    pub away_count: usize,
}

/// Path of `g - x` from `a` to `b` with as few steps against the arc
/// direction as possible, then as few steps overall.
pub fn min_away_path(g: &Digraph, x: &[Vertex], a: &[Vertex], b: &[Vertex]) -> Result<AwayPath, Error> {
    let n = g.vertex_count();
    if a.is_empty() || b.is_empty() {
        return Err(Error::InvalidArgument("endpoint sets must be nonempty".into()));
    }
    // 0 = free, 1 = deleted, 2 = in a, 3 = in b
    let mut role = vec![0u8; n];
    for (set, r) in [(x, 1u8), (a, 2), (b, 3)] {
        for &v in set {
            if v >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            if role[v] != 0 {
                return Err(Error::InvalidArgument("vertex sets must be disjoint".into()));
            }
            role[v] = r;
        }
    }

    let mut cost = vec![(usize::MAX, usize::MAX); n];
    let mut pred = vec![usize::MAX; n];
    let mut heap = BinaryHeap::new();
    for &s in a {
        cost[s] = (0, 0);
        heap.push(Reverse((0usize, 0usize, s)));
    }
    let mut done = vec![false; n];
    while let Some(Reverse((away, hops, p))) = heap.pop() {
        if done[p] || (away, hops) != cost[p] {
            continue;
        }
        done[p] = true;
        if role[p] == 3 {
            continue;
        }
        for q in g.neighbors(p) {
            if role[q] == 1 || role[q] == 2 {
                continue;
            }
            let step = usize::from(!g.has_arc(p, q));
            let next = (away + step, hops + 1);
            if next < cost[q] {
                cost[q] = next;
                pred[q] = p;
                heap.push(Reverse((next.0, next.1, q)));
            }
        }
    }

    let end = b
        .iter()
        .copied()
        .filter(|&t| cost[t].0 != usize::MAX)
        .min_by_key(|&t| (cost[t], t))
        .ok_or(Error::NoPath)?;
    let mut vertices = vec![end];
    let mut cur = end;
    while pred[cur] != usize::MAX {
        cur = pred[cur];
        vertices.push(cur);
    }
    vertices.reverse();
    let toward: Vec<bool> = vertices.windows(2).map(|w| g.has_arc(w[0], w[1])).collect();
    let away_count = toward.iter().filter(|&&t| !t).count();
    Ok(AwayPath { vertices, toward, away_count })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;

    #[test]
    fn directed_path_in_six_cycle() {
        let g = fixtures::c6();
        let p = min_away_path(&g, &[], &[g.v("1")], &[g.v("4")]).unwrap();
        assert_eq!(p.vertices, vec![g.v("1"), g.v("2"), g.v("3"), g.v("4")]);
        assert_eq!(p.away_count, 0);
    }

    #[test]
    fn tricycle_minus_vertex() {
        let g = fixtures::t3();
        let p = min_away_path(&g, &[g.v("3")], &[g.v("1")], &[g.v("2")]).unwrap();
        assert_eq!(p.vertices, vec![g.v("1"), g.v("2")]);
        assert_eq!(p.away_count, 0);
    }

    #[test]
    fn diwheel_rim_needs_one_away_step() {
        let g = fixtures::w4();
        let p = min_away_path(&g, &[g.v("h"), g.v("2")], &[g.v("1")], &[g.v("3")]).unwrap();
        assert_eq!(p.vertices, vec![g.v("1"), g.v("4"), g.v("3")]);
        assert_eq!(p.toward, vec![true, false]);
        assert_eq!(p.away_count, 1);
    }

    #[test]
    fn separated_sets() {
        let g = fixtures::c6();
        let r = min_away_path(&g, &[g.v("2"), g.v("5")], &[g.v("1")], &[g.v("3")]);
        assert!(matches!(r, Err(Error::NoPath)));
    }

    // All simple paths from a vertex of `a` to a vertex of `b` avoiding `x`,
    // scored by (away steps, length).
    fn brute_force(g: &Digraph, x: &[Vertex], a: &[Vertex], b: &[Vertex]) -> Option<(usize, usize)> {
        fn go(
            g: &Digraph,
            path: &mut Vec<Vertex>,
            blocked: &mut Vec<bool>,
            b: &[Vertex],
            away: usize,
            best: &mut Option<(usize, usize)>,
        ) {
            let p = *path.last().unwrap();
            if b.contains(&p) {
                let score = (away, path.len() - 1);
                if best.is_none_or(|s| score < s) {
                    *best = Some(score);
                }
                return;
            }
            for q in g.neighbors(p) {
                if blocked[q] {
                    continue;
                }
                blocked[q] = true;
                path.push(q);
                go(g, path, blocked, b, away + usize::from(!g.has_arc(p, q)), best);
                path.pop();
                blocked[q] = false;
            }
        }
        let mut best = None;
        for &s in a {
            let mut blocked = vec![false; g.vertex_count()];
            for &v in x.iter().chain(a) {
                blocked[v] = true;
            }
            go(g, &mut vec![s], &mut blocked, b, 0, &mut best);
        }
        best
    }

    proptest! {
        #[test]
        fn matches_brute_force(
            n in 3usize..8,
            bits in proptest::collection::vec(any::<bool>(), 56),
            roles in proptest::collection::vec(0u8..4, 8),
        ) {
            let mut arcs = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in 0..n {
                    if u != v {
                        if bits[k] {
                            arcs.push((u, v));
                        }
                        k += 1;
                    }
                }
            }
            let g = Digraph::from_arcs(n, arcs).unwrap();
            let pick = |r: u8| (0..n).filter(|&v| roles[v] == r).collect::<Vec<_>>();
            let (x, a, b) = (pick(1), pick(2), pick(3));
            prop_assume!(!a.is_empty() && !b.is_empty());
            let expected = brute_force(&g, &x, &a, &b);
            match min_away_path(&g, &x, &a, &b) {
                Ok(p) => {
                    prop_assert_eq!(Some((p.away_count, p.vertices.len() - 1)), expected);
                    prop_assert!(a.contains(&p.vertices[0]));
                    prop_assert!(b.contains(p.vertices.last().unwrap()));
                    if p.away_count == 0 {
                        prop_assert!(g.is_directed_path(&p.vertices));
                    }
                }
                Err(Error::NoPath) => prop_assert_eq!(expected, None),
                Err(e) => prop_assert!(false, "unexpected error {e}"),
            }
        }
    }
}
