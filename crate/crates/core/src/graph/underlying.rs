use super::{Digraph, Vertex};

/// The undirected graph obtained by forgetting arc directions. An
/// antiparallel pair collapses to a single edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnderlyingGraph {
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
}

pub fn underlying(g: &Digraph) -> UnderlyingGraph {
    let adj: Vec<Vec<Vertex>> = g.vertices().map(|v| g.neighbors(v)).collect();
    let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
    UnderlyingGraph { adj, edge_count }
}

impl UnderlyingGraph {
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `{u, v}` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Connected components of the graph with `removed` deleted. Each
    /// component is sorted; components are ordered by their smallest vertex.
    pub fn components_without(&self, removed: &[Vertex]) -> Vec<Vec<Vertex>> {
        let n = self.vertex_count();
        let mut mark = vec![false; n];
        for &v in removed {
            mark[v] = true;
        }
        let mut comps = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if mark[s] {
                continue;
            }
            mark[s] = true;
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !mark[w] {
                        mark[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn components(&self) -> Vec<Vec<Vertex>> {
        self.components_without(&[])
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Whether the subgraph induced on `set` is a tree.
    pub fn induces_tree(&self, set: &[Vertex]) -> bool {
        if set.is_empty() {
            return false;
        }
        let mut inside = vec![false; self.vertex_count()];
        for &v in set {
            inside[v] = true;
        }
        let edges = set
            .iter()
            .map(|&u| self.adj[u].iter().filter(|&&w| inside[w] && w > u).count())
            .sum::<usize>();
        if edges + 1 != set.len() {
            return false;
        }
        let removed: Vec<Vertex> = (0..self.vertex_count()).filter(|&v| !inside[v]).collect();
        self.components_without(&removed).len() == 1
    }

    /// Cut vertices and blocks, via the usual lowpoint DFS.
    ///
    /// Blocks are vertex sets, each sorted, ordered by smallest member and then
    /// lexicographically. Isolated vertices form no block.
    pub fn biconnected(&self) -> (Vec<Vertex>, Vec<Vec<Vertex>>) {
        let n = self.vertex_count();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut is_cut = vec![false; n];
        let mut blocks: Vec<Vec<Vertex>> = Vec::new();
        let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
        let mut time = 0;

        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            let mut root_children = 0;
            // (vertex, parent, next neighbour index)
            let mut stack: Vec<(Vertex, Vertex, usize)> = vec![(root, usize::MAX, 0)];
            while let Some(top) = stack.len().checked_sub(1) {
                let (u, parent, idx) = stack[top];
                if idx < self.adj[u].len() {
                    let w = self.adj[u][idx];
                    stack[top].2 += 1;
                    if disc[w] == usize::MAX {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        edge_stack.push((u, w));
                        if u == root {
                            root_children += 1;
                        }
                        stack.push((w, u, 0));
                    } else if w != parent && disc[w] < disc[u] {
                        edge_stack.push((u, w));
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[u]);
                        if low[u] >= disc[p] {
                            if p != root {
                                is_cut[p] = true;
                            }
                            let mut block = Vec::new();
                            while let Some((a, b)) = edge_stack.pop() {
                                block.push(a);
                                block.push(b);
                                if (a, b) == (p, u) {
                                    break;
                                }
                            }
                            block.sort_unstable();
                            block.dedup();
                            blocks.push(block);
                        }
                    }
                }
            }
            if root_children > 1 {
                is_cut[root] = true;
            }
        }
        blocks.sort();
        let cuts = (0..n).filter(|&v| is_cut[v]).collect();
        (cuts, blocks)
    }

    pub fn cut_vertices(&self) -> Vec<Vertex> {
        self.biconnected().0
    }

    pub fn blocks(&self) -> Vec<Vec<Vertex>> {
        self.biconnected().1
    }

    /// Whether the graph is 2-connected (at least three vertices, connected,
    /// no cut vertex).
    pub fn is_biconnected(&self) -> bool {
        self.vertex_count() >= 3 && self.is_connected() && self.cut_vertices().is_empty()
    }

    /// All pairs `{u, v}` (with `u < v`, ascending) whose removal disconnects
    /// the graph. Naive scan; intended for small graphs.
    pub fn two_cutsets(&self) -> Vec<(Vertex, Vertex)> {
        let n = self.vertex_count();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.components_without(&[u, v]).len() > 1 {
                    out.push((u, v));
                }
            }
        }
        out
    }
}
