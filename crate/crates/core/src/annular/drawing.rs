use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::builder::find_peripheral_edge;
use crate::error::Error;
use crate::exact::{self, JsonInt};
use crate::graph::{is_unbreakable, underlying, Digraph, Edge, Vertex};
use crate::rings::{compute_lring, LRing};

/// Position of one vertex: ray 1, 2 or 3 (ring part `ray - 1`) and a
/// positive distance from the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Placement {
    pub ray: u8,
    pub radius: BigRational,
}

impl Serialize for Placement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let (num, den) = exact::split(&self.radius);
        (self.ray, num, den).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Placement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let (ray, num, den) = <(u8, JsonInt, JsonInt)>::deserialize(d)?;
        Ok(Placement { ray, radius: exact::join(num, den)? })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnularDrawing {
    pub ring: LRing,
    pub placement: BTreeMap<Vertex, Placement>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DrawingViolation {
    Coverage { vertex: Vertex },
    RingMismatch,
    WrongRay { vertex: Vertex },
    NonPositiveRadius { vertex: Vertex },
    SharedRadius { first: Vertex, second: Vertex },
    SkipsSector { arc: Edge },
    Crossing { first: Edge, second: Edge },
}

impl fmt::Display for DrawingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DrawingViolation::Coverage { vertex } => write!(f, "vertex {vertex} is missing or unknown"),
            DrawingViolation::RingMismatch => f.write_str("ring is not a 3-ring of the digraph"),
            DrawingViolation::WrongRay { vertex } => write!(f, "vertex {vertex} is not on the ray of its part"),
            DrawingViolation::NonPositiveRadius { vertex } => write!(f, "vertex {vertex} has radius <= 0"),
            DrawingViolation::SharedRadius { first, second } => {
                write!(f, "vertices {first} and {second} share a ray and a radius")
            }
            DrawingViolation::SkipsSector { arc } => write!(f, "arc {}->{} does not join consecutive rays", arc.0, arc.1),
            DrawingViolation::Crossing { first, second } => write!(
                f,
                "arcs {}->{} and {}->{} cross",
                first.0, first.1, second.0, second.1
            ),
        }
    }
}

/// Checks placement, ring, radii and sectors, then that no two arcs in one
/// sector with four distinct ends have tails and heads in opposite orders.
pub fn validate_drawing(g: &Digraph, d: &AnnularDrawing) -> Result<(), DrawingViolation> {
    let n = g.vertex_count();
    if let Some(&v) = d.placement.keys().find(|&&v| v >= n) {
        return Err(DrawingViolation::Coverage { vertex: v });
    }
    if let Some(v) = g.vertices().find(|v| !d.placement.contains_key(v)) {
        return Err(DrawingViolation::Coverage { vertex: v });
    }
    if d.ring.l != 3 || !d.ring.is_ring_of(g) {
        return Err(DrawingViolation::RingMismatch);
    }
    let part = d.ring.labels(n);
    let p = |v: Vertex| &d.placement[&v];
    for v in g.vertices() {
        if usize::from(p(v).ray) != part[v] + 1 {
            return Err(DrawingViolation::WrongRay { vertex: v });
        }
        if !p(v).radius.is_positive() {
            return Err(DrawingViolation::NonPositiveRadius { vertex: v });
        }
    }
    for u in g.vertices() {
        for v in u + 1..n {
            if p(u).ray == p(v).ray && p(u).radius == p(v).radius {
                return Err(DrawingViolation::SharedRadius { first: u, second: v });
            }
        }
    }
    let mut sectors: [Vec<Edge>; 3] = Default::default();
    for (u, v) in g.arcs() {
        if p(v).ray != p(u).ray % 3 + 1 {
            return Err(DrawingViolation::SkipsSector { arc: (u, v) });
        }
        sectors[usize::from(p(u).ray) - 1].push((u, v));
    }
    for arcs in &sectors {
        for (i, &(a, b)) in arcs.iter().enumerate() {
            for &(c, e) in &arcs[i + 1..] {
                if a == c || b == e {
                    continue;
                }
                if (p(a).radius < p(c).radius) != (p(b).radius < p(e).radius) {
                    return Err(DrawingViolation::Crossing { first: (a, b), second: (c, e) });
                }
            }
        }
    }
    Ok(())
}

fn stuck(msg: impl Into<String>) -> Error {
    Error::HypothesisViolated(msg.into())
}

/// Builds a drawing by repeatedly peeling the fan on an arc whose ends are to
/// stay outermost, without consulting the activity or brancher tests. Fails
/// when the peeling gets stuck or the result does not validate.
pub fn draw_by_peeling(g: &Digraph) -> Result<AnnularDrawing, Error> {
    if is_unbreakable(g).is_err() {
        return Err(Error::NotUnbreakable);
    }
    let ring = compute_lring(g, 3)?;
    let n = g.vertex_count();
    let part = ring.labels(n);
    let mut rays: [Vec<Vertex>; 3] = Default::default();
    if n == 3 {
        for v in g.vertices() {
            rays[part[v]].push(v);
        }
    } else {
        let ug = underlying(g);
        let (mut p, mut q) = find_peripheral_edge(g)?.arc;
        let mut dead = vec![false; n];
        // Each level pushes its vertex outermost, then its fan beyond that.
        let mut levels: Vec<(Vertex, Vec<Vertex>)> = Vec::new();
        let fan_of = |p: Vertex, q: Vertex, single: &[Vertex]| -> Result<Vec<Vertex>, Error> {
            if single.iter().all(|&x| g.has_arc(q, x) && g.has_arc(x, p)) {
                Ok(single.to_vec())
            } else {
                Err(stuck(format!("a singleton beside {p}->{q} is not on a tricycle with it")))
            }
        };
        let base = loop {
            let mut removed: Vec<Vertex> = (0..n).filter(|&v| dead[v]).collect();
            removed.extend([p, q]);
            let comps = ug.components_without(&removed);
            let single: Vec<Vertex> = comps.iter().filter(|c| c.len() == 1).map(|c| c[0]).collect();
            let big: Vec<&Vec<Vertex>> = comps.iter().filter(|c| c.len() > 1).collect();
            let fan = fan_of(p, q, &single)?;
            match big.as_slice() {
                [] => break (p, q, fan),
                [comp] => {
                    let apex: Vec<Vertex> = comp.iter().copied().filter(|&c| g.has_arc(q, c) && g.has_arc(c, p)).collect();
                    let [c] = apex[..] else {
                        return Err(stuck(format!("{} vertices close a tricycle on {p}->{q}", apex.len())));
                    };
                    for &x in &fan {
                        dead[x] = true;
                    }
                    let deg2 = |v: Vertex| {
                        g.out_neighbors(v).iter().filter(|&&w| !dead[w]).count() == 1
                            && g.in_neighbors(v).iter().filter(|&&w| !dead[w]).count() == 1
                    };
                    if deg2(p) {
                        levels.push((p, fan));
                        dead[p] = true;
                        (p, q) = (q, c);
                    } else if deg2(q) {
                        levels.push((q, fan));
                        dead[q] = true;
                        (p, q) = (c, p);
                    } else {
                        return Err(stuck(format!("neither {p} nor {q} has degree two")));
                    }
                }
                _ => return Err(stuck(format!("arc {p}->{q} has two large components beside it"))),
            }
        };
        let (p, q, fan) = base;
        for v in [p, q].into_iter().chain(fan) {
            rays[part[v]].push(v);
        }
        for (v, fan) in levels.into_iter().rev() {
            for x in std::iter::once(v).chain(fan) {
                rays[part[x]].push(x);
            }
        }
    }
    let mut placement = BTreeMap::new();
    for (i, ray) in rays.iter().enumerate() {
        for (k, &v) in ray.iter().enumerate() {
            placement.insert(v, Placement { ray: i as u8 + 1, radius: exact::int(k as i64 + 1) });
        }
    }
    let d = AnnularDrawing { ring, placement };
    validate_drawing(g, &d).map_err(|v| stuck(format!("peeling produced an invalid drawing: {v}")))?;
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn swap_radii(d: &mut AnnularDrawing, a: Vertex, b: Vertex) {
        let ra = d.placement[&a].radius.clone();
        let rb = std::mem::replace(&mut d.placement.get_mut(&b).unwrap().radius, ra);
        d.placement.get_mut(&a).unwrap().radius = rb;
    }

    #[test]
    fn fan_with_shared_head() {
        let fan = fixtures::fan2();
        let mut d = draw_by_peeling(&fan).unwrap();
        assert!(validate_drawing(&fan, &d).is_ok());
        // Both tails of the arcs into x lie on one ray; their order is free.
        swap_radii(&mut d, fan.v("w1"), fan.v("w2"));
        assert!(validate_drawing(&fan, &d).is_ok());
    }

    #[test]
    fn interleaving_is_reported() {
        let g = fixtures::glue6();
        let mut d = draw_by_peeling(&g).unwrap();
        assert!(validate_drawing(&g, &d).is_ok());
        let mut found = false;
        for ray in 1..=3u8 {
            let on: Vec<Vertex> = g.vertices().filter(|v| d.placement[v].ray == ray).collect();
            for (i, &a) in on.iter().enumerate() {
                for &b in &on[i + 1..] {
                    let mut e = d.clone();
                    swap_radii(&mut e, a, b);
                    if let Err(DrawingViolation::Crossing { .. }) = validate_drawing(&g, &e) {
                        found = true;
                    }
                }
            }
        }
        assert!(found);
        d.placement.remove(&0);
        assert_eq!(validate_drawing(&g, &d), Err(DrawingViolation::Coverage { vertex: 0 }));
    }

    #[test]
    fn other_violations() {
        let t3 = fixtures::t3();
        let good = draw_by_peeling(&t3).unwrap();
        let mut d = good.clone();
        d.placement.get_mut(&0).unwrap().radius = exact::int(0);
        assert_eq!(validate_drawing(&t3, &d), Err(DrawingViolation::NonPositiveRadius { vertex: 0 }));
        let mut d = good.clone();
        d.placement.get_mut(&0).unwrap().ray = 2;
        assert!(validate_drawing(&t3, &d).is_err());
        let mut d = good;
        d.ring.parts.swap(0, 1);
        assert_eq!(validate_drawing(&t3, &d), Err(DrawingViolation::RingMismatch));
    }

    #[test]
    fn json_shape() {
        let d = draw_by_peeling(&fixtures::t3()).unwrap();
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(
            json,
            r#"{"ring":{"l":3,"parts":[[0],[1],[2]]},"placement":{"0":[1,1,1],"1":[2,1,1],"2":[3,1,1]}}"#
        );
        let back: AnnularDrawing = serde_json::from_str(&json).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn non_annular_inputs_fail() {
        assert!(draw_by_peeling(&fixtures::w4()).is_err());
        assert!(draw_by_peeling(&fixtures::b1()).is_err());
        assert!(draw_by_peeling(&fixtures::c6()).is_err());
    }
}
