//! Small named digraphs used in examples and tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{parse_edge_list, Digraph, Edge};

fn load(text: &str) -> Digraph {
    parse_edge_list(text).expect("fixture parses")
}

/// The tricycle 1 -> 2 -> 3 -> 1.
pub fn t3() -> Digraph {
    load(include_str!("../fixtures/T3.txt"))
}

pub fn c2() -> Digraph {
    load(include_str!("../fixtures/C2.txt"))
}

pub fn c6() -> Digraph {
    load(include_str!("../fixtures/C6.txt"))
}

/// Diwheel with hub `h` and rim 1, 2, 3, 4.
pub fn w4() -> Digraph {
    load(include_str!("../fixtures/W4.txt"))
}

pub fn b1() -> Digraph {
    load(include_str!("../fixtures/B1.txt"))
}

pub fn b2() -> Digraph {
    load(include_str!("../fixtures/B2.txt"))
}

pub fn dc3() -> Digraph {
    load(include_str!("../fixtures/DC3.txt"))
}

pub fn dc4() -> Digraph {
    load(include_str!("../fixtures/DC4.txt"))
}

pub fn fan2() -> Digraph {
    load(include_str!("../fixtures/FAN2.txt"))
}

pub fn fan4() -> Digraph {
    load(include_str!("../fixtures/FAN4.txt"))
}

/// Two copies of `fan2` glued along `y -> w1` and `x' -> y'`.
pub fn glue6() -> Digraph {
    load(include_str!("../fixtures/GLUE6.txt"))
}

/// All named fixtures with their file stems.
pub fn all() -> Vec<(&'static str, Digraph)> {
    vec![
        ("T3", t3()),
        ("C2", c2()),
        ("C6", c6()),
        ("W4", w4()),
        ("B1", b1()),
        ("B2", b2()),
        ("DC3", dc3()),
        ("DC4", dc4()),
        ("FAN2", fan2()),
        ("FAN4", fan4()),
        ("GLUE6", glue6()),
    ]
}

/// The k-double-cycle: a directed k-cycle together with its reversal. For
/// `k == 2` this is the 2-cycle.
pub fn double_cycle(k: usize) -> Digraph {
    if k == 2 {
        return cycle(2);
    }
    let mut arcs = Vec::new();
    for i in 0..k {
        arcs.push((i, (i + 1) % k));
        arcs.push(((i + 1) % k, i));
    }
    Digraph::from_arcs(k, arcs).expect("k >= 3")
}

/// `k` tricycles sharing the arc `0 -> 1`.
pub fn fan(k: usize) -> Digraph {
    let mut arcs = vec![(0, 1)];
    for i in 0..k {
        arcs.push((1, 2 + i));
        arcs.push((2 + i, 0));
    }
    Digraph::from_arcs(k + 2, arcs).expect("valid fan")
}

/// The directed cycle on `k` vertices.
pub fn cycle(k: usize) -> Digraph {
    Digraph::from_arcs(k, (0..k).map(|i| (i, (i + 1) % k))).expect("k >= 2")
}

/// The ordered pairs of distinct vertices of `0..n`, in the order used by
/// [`from_mask`].
pub fn vertex_pairs(n: usize) -> Vec<Edge> {
    (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))).collect()
}

/// The digraph on `n` vertices whose arcs are the pairs selected by the bits
/// of `mask`. Every loop-free digraph on `0..n` arises from exactly one
/// mask below `2^(n(n-1))`.
pub fn from_mask(n: usize, mask: u64) -> Digraph {
    let arcs = vertex_pairs(n).into_iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, a)| a);
    Digraph::from_arcs(n, arcs).expect("distinct pairs")
}

/// Each ordered pair becomes an arc with probability `p`.
pub fn random_digraph(seed: u64, n: usize, p: f64) -> Digraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let arcs: Vec<Edge> = vertex_pairs(n).into_iter().filter(|_| rng.random_bool(p)).collect();
    Digraph::from_arcs(n, arcs).expect("distinct pairs")
}
