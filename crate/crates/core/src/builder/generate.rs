use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{replay, BuildScript, BuildStep};
use crate::decomposition::{is_special_edge, special_edge_sum};
use crate::error::Error;
use crate::graph::{Digraph, Edge, Vertex};

/// A random script on `n` vertices. Fan sizes are geometric with mean 1.5
/// and ids are shuffled so they do not follow the build order.
pub fn random_build_script(seed: u64, n: usize) -> Result<BuildScript, Error> {
    if n < 3 {
        return Err(Error::TooSmall { need: 3, got: n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Digraph::empty(n);
    g.add_arc(0, 1)?;
    g.add_arc(1, 2)?;
    g.add_arc(2, 0)?;
    let mut count = 3;
    let mut steps = Vec::new();
    while count < n {
        let pivots: Vec<Vertex> = (0..count)
            .filter(|&v| g.in_degree(v) == 1 && g.out_degree(v) == 1)
            .collect();
        let pivot = pivots[rng.random_range(0..pivots.len())];
        let (tail, head, neighbour) = if rng.random_bool(0.5) {
            let u = g.out_neighbors(pivot)[0];
            (pivot, u, u)
        } else {
            let u = g.in_neighbors(pivot)[0];
            (u, pivot, u)
        };
        let mut k = 1;
        while count + k < n && rng.random_bool(1.0 / 3.0) {
            k += 1;
        }
        let add: Vec<Vertex> = (count..count + k).collect();
        for &w in &add {
            g.add_arc(head, w)?;
            g.add_arc(w, tail)?;
        }
        count += k;
        steps.push(BuildStep { pivot, neighbour, add });
    }
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(&mut rng);
    Ok(BuildScript {
        base: [perm[0], perm[1], perm[2]],
        steps: steps
            .into_iter()
            .map(|s| BuildStep {
                pivot: perm[s.pivot],
                neighbour: perm[s.neighbour],
                add: s.add.iter().map(|&w| perm[w]).collect(),
            })
            .collect(),
        labels: None,
    })
}

pub fn random_safely_buildable(seed: u64, n: usize) -> Result<Digraph, Error> {
    replay(&random_build_script(seed, n)?)
}

/// A pinched piece on `size` vertices: vertex 0 is the pinch, the other two
/// parts are joined by a random spanning tree plus a few extra arcs.
fn pinched_piece(rng: &mut ChaCha8Rng, size: usize) -> Result<Digraph, Error> {
    let a = rng.random_range(1..size - 1);
    let second: Vec<Vertex> = (1..=a).collect();
    let third: Vec<Vertex> = (a + 1..size).collect();
    let mut g = Digraph::empty(size);
    for &x in &second {
        g.add_arc(0, x)?;
    }
    for &y in &third {
        g.add_arc(y, 0)?;
    }
    let mut tree = vec![(second[0], third[0])];
    let mut order: Vec<Vertex> = second[1..].iter().chain(&third[1..]).copied().collect();
    order.shuffle(rng);
    let (mut in_second, mut in_third) = (vec![second[0]], vec![third[0]]);
    for v in order {
        if v <= a {
            tree.push((v, in_third[rng.random_range(0..in_third.len())]));
            in_second.push(v);
        } else {
            tree.push((in_second[rng.random_range(0..in_second.len())], v));
            in_third.push(v);
        }
    }
    for &(x, y) in &tree {
        g.add_arc(x, y)?;
    }
    for &x in &second {
        for &y in &third {
            if !g.has_arc(x, y) && rng.random_bool(0.15) {
                g.add_arc(x, y)?;
            }
        }
    }
    Ok(g)
}

fn special_arcs(g: &Digraph) -> Vec<Edge> {
    g.arcs().filter(|&a| is_special_edge(g, a).unwrap_or(false)).collect()
}

/// Special-edge sum of `pieces` random pinched pieces, each with between 3
/// and `piece_size` vertices, glued at random special arcs. Ids are shuffled.
pub fn random_pinched_sum(seed: u64, pieces: usize, piece_size: usize) -> Result<Digraph, Error> {
    if pieces == 0 {
        return Err(Error::InvalidArgument("need at least one piece".into()));
    }
    if piece_size < 3 {
        return Err(Error::TooSmall { need: 3, got: piece_size });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let size = rng.random_range(3..=piece_size);
    let mut g = pinched_piece(&mut rng, size)?;
    for _ in 1..pieces {
        let size = rng.random_range(3..=piece_size);
        let p = pinched_piece(&mut rng, size)?;
        let ours = special_arcs(&g);
        let theirs = special_arcs(&p);
        if ours.is_empty() || theirs.is_empty() {
            return Err(Error::Internal("no special arc to glue along".into()));
        }
        let a1 = ours[rng.random_range(0..ours.len())];
        let a2 = theirs[rng.random_range(0..theirs.len())];
        g = special_edge_sum(&g, a1, &p, a2)?;
    }
    let mut perm: Vec<Vertex> = g.vertices().collect();
    perm.shuffle(&mut rng);
    Ok(g.permuted(&perm).with_index_labels())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builder::extract_build_script;
    use crate::graph::is_unbreakable;
    use crate::oracle::oracle_is_l_cyclic;
    use crate::recognition::{find_diwheel, recognize_three_cyclic};

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(random_safely_buildable(7, 20).unwrap(), random_safely_buildable(7, 20).unwrap());
        assert_eq!(random_pinched_sum(7, 4, 6).unwrap(), random_pinched_sum(7, 4, 6).unwrap());
        assert_ne!(random_safely_buildable(7, 20).unwrap(), random_safely_buildable(8, 20).unwrap());
    }

    #[test]
    fn safe_builds_are_diwheel_free_and_round_trip() {
        for seed in 0..30 {
            let g = random_safely_buildable(seed, 4 + (seed as usize % 12)).unwrap();
            assert_eq!(g.arc_count(), 2 * g.vertex_count() - 3);
            assert!(is_unbreakable(&g).is_ok());
            assert!(find_diwheel(&g).is_none());
            let s = extract_build_script(&g).unwrap();
            assert_eq!(replay(&s).unwrap(), g);
        }
    }

    #[test]
    fn pinched_sums_are_three_cyclic() {
        for seed in 0..30 {
            let g = random_pinched_sum(seed, 1 + seed as usize % 4, 6).unwrap();
            assert!(is_unbreakable(&g).is_ok());
            assert!(oracle_is_l_cyclic(&g, 3, 100_000).unwrap().holds);
            assert!(recognize_three_cyclic(&g).unwrap().is_three_cyclic());
        }
    }

    #[test]
    fn argument_checks() {
        assert!(random_safely_buildable(0, 2).is_err());
        assert!(random_pinched_sum(0, 0, 5).is_err());
        assert!(random_pinched_sum(0, 2, 2).is_err());
        assert_eq!(random_safely_buildable(0, 3).unwrap().arc_count(), 3);
    }
}
