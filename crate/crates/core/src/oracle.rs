//! Brute-force ground truth: cycle enumeration and definition-level checks.

use std::ops::ControlFlow;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::Error;
use crate::graph::{Digraph, Vertex};

pub const DEFAULT_MAX_CYCLES: usize = 1_000_000;

/// Calls `visit` on every directed cycle of `g`, each listed from its
/// smallest vertex, until `visit` breaks. Cycles are produced in a fixed
/// order: by smallest vertex, then depth-first with neighbours ascending.
pub fn visit_cycles<F>(g: &Digraph, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[Vertex]) -> ControlFlow<()>,
{
    let n = g.vertex_count();
    let mut blocked = vec![false; n];
    let mut blist: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut stack = Vec::with_capacity(n);
    let mut allowed = vec![false; n];
    let rev = g.reversed();
    for s in 0..n {
        // Restrict to the strong component of s among vertices >= s.
        let above: Vec<bool> = (0..n).map(|v| v >= s).collect();
        let fwd = crate::graph::reachable(g, s, Some(&above));
        let back = crate::graph::reachable(&rev, s, Some(&above));
        let mut size = 0;
        for v in 0..n {
            allowed[v] = v >= s && fwd[v] && back[v];
            size += usize::from(allowed[v]);
            blocked[v] = false;
            blist[v].clear();
        }
        if size < 2 {
            continue;
        }
        let mut search = Search {
            g,
            s,
            allowed: &allowed,
            blocked: &mut blocked,
            blist: &mut blist,
            stack: &mut stack,
            visit: &mut visit,
        };
        search.circuit(s)?;
    }
    ControlFlow::Continue(())
}

struct Search<'a, F> {
    g: &'a Digraph,
    s: Vertex,
    allowed: &'a [bool],
    blocked: &'a mut Vec<bool>,
    blist: &'a mut Vec<Vec<Vertex>>,
    stack: &'a mut Vec<Vertex>,
    visit: &'a mut F,
}

impl<F> Search<'_, F>
where
    F: FnMut(&[Vertex]) -> ControlFlow<()>,
{
    fn circuit(&mut self, v: Vertex) -> ControlFlow<(), bool> {
        let mut found = false;
        self.stack.push(v);
        self.blocked[v] = true;
        for &w in self.g.out_neighbors(v) {
            if !self.allowed[w] {
                continue;
            }
            if w == self.s {
                if (self.visit)(self.stack).is_break() {
                    return ControlFlow::Break(());
                }
                found = true;
            } else if !self.blocked[w] && self.circuit(w)? {
                found = true;
            }
        }
        if found {
            self.unblock(v);
        } else {
            for &w in self.g.out_neighbors(v) {
                if self.allowed[w] && !self.blist[w].contains(&v) {
                    self.blist[w].push(v);
                }
            }
        }
        self.stack.pop();
        ControlFlow::Continue(found)
    }

    fn unblock(&mut self, u: Vertex) {
        let mut work = vec![u];
        while let Some(x) = work.pop() {
            if !self.blocked[x] {
                continue;
            }
            self.blocked[x] = false;
            work.append(&mut self.blist[x]);
        }
    }
}

/// All directed cycles of `g`, or `CycleBudgetExceeded` once more than
/// `max_count` have been found.
pub fn enumerate_cycles(g: &Digraph, max_count: usize) -> Result<Vec<Vec<Vertex>>, Error> {
    let mut out = Vec::new();
    let flow = visit_cycles(g, |c| {
        if out.len() == max_count {
            return ControlFlow::Break(());
        }
        out.push(c.to_vec());
        ControlFlow::Continue(())
    });
    match flow {
        ControlFlow::Break(()) => Err(Error::CycleBudgetExceeded(max_count)),
        ControlFlow::Continue(()) => Ok(out),
    }
}

/// First cycle (in enumeration order) satisfying `pred`.
pub fn find_cycle(g: &Digraph, mut pred: impl FnMut(&[Vertex]) -> bool) -> Option<Vec<Vertex>> {
    let mut found = None;
    let _ = visit_cycles(g, |c| {
        if pred(c) {
            found = Some(c.to_vec());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    found
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclicVerdict {
    pub holds: bool,
    /// A shortest cycle of the wrong length, first in enumeration order.
    pub witness: Option<Vec<Vertex>>,
}

/// Whether every directed cycle has length exactly `l`.
pub fn oracle_is_l_cyclic(g: &Digraph, l: usize, max_count: usize) -> Result<CyclicVerdict, Error> {
    if l < 2 {
        return Err(Error::InvalidArgument(format!("cycle length {l} is below 2")));
    }
    let cycles = enumerate_cycles(g, max_count)?;
    let witness = cycles
        .into_iter()
        .filter(|c| c.len() != l)
        .min_by_key(|c| c.len());
    Ok(CyclicVerdict { holds: witness.is_none(), witness })
}

/// Early-exit variant of the `l`-cyclic check without budget or witness.
pub fn has_only_length(g: &Digraph, l: usize) -> bool {
    visit_cycles(g, |c| {
        if c.len() == l {
            ControlFlow::Continue(())
        } else {
            ControlFlow::Break(())
        }
    })
    .is_continue()
}

/// Whether the cycle/arc incidence system with all-ones right-hand side has a
/// rational solution, decided by fraction-free integer elimination.
pub fn oracle_is_weightable(g: &Digraph, max_count: usize) -> Result<bool, Error> {
    let cycles = enumerate_cycles(g, max_count)?;
    let m = g.arc_count();
    let rows: Vec<Vec<BigInt>> = cycles
        .iter()
        .map(|c| {
            let mut row = vec![BigInt::zero(); m + 1];
            for i in 0..c.len() {
                let e = g.arc_index(c[i], c[(i + 1) % c.len()]).expect("cycle arc");
                row[e] = BigInt::one();
            }
            row[m] = BigInt::one();
            row
        })
        .collect();
    let (rank_a, rank_ab) = integer_ranks(rows, m);
    Ok(rank_a == rank_ab)
}

/// Rank of the first `cols` columns and of the full augmented matrix.
fn integer_ranks(mut rows: Vec<Vec<BigInt>>, cols: usize) -> (usize, usize) {
    let mut rank = 0;
    let width = cols + 1;
    for c in 0..width {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        if c == cols {
            return (rank, rank + 1);
        }
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            let mut g = BigInt::zero();
            for k in c..width {
                row[k] = &row[k] * &pivot[c] - &pivot[k] * &factor;
                g = g.gcd(&row[k]);
            }
            if !g.is_zero() && !g.is_one() {
                for x in &mut row[c..width] {
                    *x = &*x / &g;
                }
            }
        }
        rank += 1;
    }
    (rank, rank)
}
