use serde::Serialize;

use super::{underlying, Digraph, Vertex};
use crate::error::Error;

/// Strong components, each sorted, ordered by smallest member.
pub fn strong_components(g: &Digraph) -> Vec<Vec<Vertex>> {
    let n = g.vertex_count();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<Vertex> = Vec::new();
    let mut comps: Vec<Vec<Vertex>> = Vec::new();
    let mut counter = 0;

    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        let mut call: Vec<(Vertex, usize)> = vec![(root, 0)];
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(top) = call.len().checked_sub(1) {
            let (u, i) = call[top];
            let outs = g.out_neighbors(u);
            if i < outs.len() {
                call[top].1 += 1;
                let w = outs[i];
                if index[w] == usize::MAX {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[u] = low[u].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(p, _)) = call.last() {
                    low[p] = low[p].min(low[u]);
                }
                if low[u] == index[u] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp.push(w);
                        if w == u {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    comps.push(comp);
                }
            }
        }
    }
    comps.sort_by_key(|c| c[0]);
    comps
}

/// Vertices reachable from `s` by directed paths, restricted to `allowed`
/// vertices when given (`s` itself is always included).
pub fn reachable(g: &Digraph, s: Vertex, allowed: Option<&[bool]>) -> Vec<bool> {
    let mut seen = vec![false; g.vertex_count()];
    seen[s] = true;
    let mut stack = vec![s];
    while let Some(u) = stack.pop() {
        for &w in g.out_neighbors(u) {
            if !seen[w] && allowed.is_none_or(|a| a[w]) {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

pub fn is_strongly_connected(g: &Digraph) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return false;
    }
    reachable(g, 0, None).iter().all(|&b| b) && reachable(&g.reversed(), 0, None).iter().all(|&b| b)
}

/// Why a digraph fails to be unbreakable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BreakWitness {
    /// There is no directed path from `from` to `to`.
    NotStronglyConnected { from: Vertex, to: Vertex },
    CutVertex { vertex: Vertex },
    TooSmall,
}

/// Strongly connected, at least three vertices, and the underlying graph has
/// no cut vertex.
pub fn is_unbreakable(g: &Digraph) -> Result<(), BreakWitness> {
    let n = g.vertex_count();
    if n < 3 {
        return Err(BreakWitness::TooSmall);
    }
    let fwd = reachable(g, 0, None);
    if let Some(to) = fwd.iter().position(|&b| !b) {
        return Err(BreakWitness::NotStronglyConnected { from: 0, to });
    }
    let back = reachable(&g.reversed(), 0, None);
    if let Some(from) = back.iter().position(|&b| !b) {
        return Err(BreakWitness::NotStronglyConnected { from, to: 0 });
    }
    match underlying(g).cut_vertices().first() {
        Some(&vertex) => Err(BreakWitness::CutVertex { vertex }),
        None => Ok(()),
    }
}

/// Whether deleting any single vertex leaves a strongly connected digraph.
pub fn is_strongly_2connected(g: &Digraph) -> Result<bool, Error> {
    let n = g.vertex_count();
    if n < 3 {
        return Err(Error::TooSmall { need: 3, got: n });
    }
    Ok(g.vertices().all(|v| is_strongly_connected(&g.without_vertices(&[v]).0)))
}
