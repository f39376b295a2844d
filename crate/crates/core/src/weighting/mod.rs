//! Weightings: arc values summing to one around every directed cycle. All
//! arithmetic is exact.

mod basis;
mod linear;
mod obstruction;

use std::collections::{BTreeMap, VecDeque};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use basis::{cycle_basis, BasisCycle, CycleBasis};
pub use obstruction::{find_weak_double_cycle, find_weak_double_cycle_with_budget, WeakDoubleCycle};

use crate::error::Error;
use crate::exact::{self, JsonInt};
use crate::graph::{ear_decomposition, strong_components, Digraph, Edge, Vertex};
use crate::oracle::{enumerate_cycles, visit_cycles, DEFAULT_MAX_CYCLES};
use linear::System;

/// A value for each arc.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Weighting {
    values: BTreeMap<Edge, BigRational>,
}

#[derive(Serialize, Deserialize)]
struct Entry {
    arc: [Vertex; 2],
    num: JsonInt,
    den: JsonInt,
}

impl Serialize for Weighting {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let entries: Vec<Entry> = self
            .values
            .iter()
            .map(|(&(u, v), q)| {
                let (num, den) = exact::split(q);
                Entry { arc: [u, v], num, den }
            })
            .collect();
        entries.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Weighting {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let mut values = BTreeMap::new();
        for e in Vec::<Entry>::deserialize(d)? {
            let q = exact::join(e.num, e.den)?;
            if values.insert((e.arc[0], e.arc[1]), q).is_some() {
                return Err(serde::de::Error::custom(format!("arc {:?} listed twice", e.arc)));
            }
        }
        Ok(Weighting { values })
    }
}

impl Weighting {
    /// The same value on every arc of `g`.
    pub fn constant(g: &Digraph, q: BigRational) -> Self {
        Weighting { values: g.arcs().map(|a| (a, q.clone())).collect() }
    }

    pub fn from_values(values: impl IntoIterator<Item = (Edge, BigRational)>) -> Self {
        Weighting { values: values.into_iter().collect() }
    }

    pub fn get(&self, arc: Edge) -> Option<&BigRational> {
        self.values.get(&arc)
    }

    pub fn set(&mut self, arc: Edge, q: BigRational) {
        self.values.insert(arc, q);
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, &BigRational)> {
        self.values.iter().map(|(&a, q)| (a, q))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.values.values().all(|q| q.is_integer())
    }

    pub fn is_zero_one(&self) -> bool {
        self.values.values().all(|q| q.is_zero() || q.is_one())
    }

    /// Sum over the arcs of a closed walk listed without its repeated end.
    pub fn cycle_sum(&self, cycle: &[Vertex]) -> Option<BigRational> {
        let k = cycle.len();
        (0..k).try_fold(BigRational::zero(), |acc, i| {
            self.get((cycle[i], cycle[(i + 1) % k])).map(|q| acc + q)
        })
    }

    /// Whether the arcs are exactly those of `g`.
    fn matches(&self, g: &Digraph) -> Result<(), Error> {
        if let Some(arc) = g.arcs().find(|a| !self.values.contains_key(a)) {
            return Err(Error::InvalidArgument(format!("no weight for arc {}->{}", arc.0, arc.1)));
        }
        if let Some(&arc) = self.values.keys().find(|&&(u, v)| u >= g.vertex_count() || v >= g.vertex_count() || !g.has_arc(u, v)) {
            return Err(Error::ArcNotPresent(arc));
        }
        Ok(())
    }
}

/// Adds `delta` on arcs leaving `v` and subtracts it on arcs entering `v`.
/// Every directed cycle through `v` uses one of each, so cycle sums stay put.
pub fn shift_potential(w: &Weighting, v: Vertex, delta: &BigRational) -> Weighting {
    let mut out = w.clone();
    for (&(a, b), q) in out.values.iter_mut() {
        if a == v && b != v {
            *q += delta;
        } else if b == v && a != v {
            *q -= delta;
        }
    }
    out
}

/// A directed cycle whose weights do not sum to one, if any.
pub fn find_violated_cycle(g: &Digraph, w: &Weighting, max_cycles: usize) -> Result<Option<Vec<Vertex>>, Error> {
    w.matches(g)?;
    let one = BigRational::one();
    let mut count = 0;
    let mut bad = None;
    let flow = visit_cycles(g, |c| {
        count += 1;
        if count > max_cycles {
            return std::ops::ControlFlow::Break(());
        }
        if w.cycle_sum(c).as_ref() != Some(&one) {
            bad = Some(c.to_vec());
            return std::ops::ControlFlow::Break(());
        }
        std::ops::ControlFlow::Continue(())
    });
    if flow.is_break() && bad.is_none() {
        return Err(Error::CycleBudgetExceeded(max_cycles));
    }
    Ok(bad)
}

pub fn verify_weighting(g: &Digraph, w: &Weighting) -> Result<bool, Error> {
    Ok(find_violated_cycle(g, w, DEFAULT_MAX_CYCLES)?.is_none())
}

fn incidence_system(g: &Digraph, max_cycles: usize) -> Result<Option<System>, Error> {
    let m = g.arc_count();
    let mut system = System::new(m);
    for c in enumerate_cycles(g, max_cycles)? {
        let mut row = vec![BigRational::zero(); m];
        for i in 0..c.len() {
            let e = g.arc_index(c[i], c[(i + 1) % c.len()]).expect("cycle arc");
            row[e] = BigRational::one();
        }
        if !system.push(row, BigRational::one()) {
            return Ok(None);
        }
    }
    Ok(Some(system))
}

/// Solves the full cycle/arc system exactly; `None` when no weighting exists.
pub fn solve_weighting(g: &Digraph) -> Result<Option<Weighting>, Error> {
    solve_weighting_with_budget(g, DEFAULT_MAX_CYCLES)
}

pub fn solve_weighting_with_budget(g: &Digraph, max_cycles: usize) -> Result<Option<Weighting>, Error> {
    Ok(incidence_system(g, max_cycles)?.map(|s| {
        let x = s.solution();
        Weighting { values: g.arcs().zip(x).collect() }
    }))
}

pub(crate) fn is_feasible(g: &Digraph, max_cycles: usize) -> Result<bool, Error> {
    Ok(incidence_system(g, max_cycles)?.is_some())
}

fn fractional_part(q: &BigRational) -> BigRational {
    q - q.floor()
}

/// An integer-valued weighting obtained from `w` by potential shifts along
/// an ear decomposition of each strong component. Arcs in no directed cycle
/// are rounded down.
pub fn integerize(g: &Digraph, w: &Weighting) -> Result<Weighting, Error> {
    if !verify_weighting(g, w)? {
        return Err(Error::NotAWeighting);
    }
    let mut w = w.clone();
    for comp in strong_components(g) {
        if comp.len() < 2 {
            continue;
        }
        let (h, map) = g.induced(&comp);
        let dec = ear_decomposition(&h)?;
        // Make each arc integral by shifting at its head, except the arc
        // that closes the cycle or ear, which follows from the unit sum.
        let mut walks = vec![{
            let mut c = dec.initial.clone();
            c.push(dec.initial[0]);
            c
        }];
        walks.extend(dec.ears.into_iter().map(|e| e.path));
        for walk in walks {
            for i in 0..walk.len().saturating_sub(2) {
                let (a, b) = (map[walk[i]], map[walk[i + 1]]);
                let delta = fractional_part(w.get((a, b)).expect("weighted arc"));
                if !delta.is_zero() {
                    w = shift_potential(&w, b, &delta);
                }
            }
        }
    }
    let comp_of = component_index(g);
    for (&(u, v), q) in w.values.iter_mut() {
        if comp_of[u] != comp_of[v] {
            *q = q.floor();
        }
    }
    if !w.is_integral() {
        return Err(Error::Internal("potential shifts left a fractional arc".into()));
    }
    Ok(w)
}

fn component_index(g: &Digraph) -> Vec<usize> {
    let mut comp_of = vec![0; g.vertex_count()];
    for (i, comp) in strong_components(g).iter().enumerate() {
        for &v in comp {
            comp_of[v] = i;
        }
    }
    comp_of
}

/// Arcs joining different strong components.
pub fn non_cycle_arcs(g: &Digraph) -> Vec<Edge> {
    let comp_of = component_index(g);
    g.arcs().filter(|&(u, v)| comp_of[u] != comp_of[v]).collect()
}

/// Turns an integer weighting into a {0,1} one by shifting across cuts:
/// while an arc `uv` is negative, the set reachable from `v` along
/// non-positive arcs loses one on arcs leaving it and gains one on arcs
/// entering it.
pub fn to_zero_one(g: &Digraph, w: &Weighting) -> Result<Weighting, Error> {
    let stray = non_cycle_arcs(g);
    if !stray.is_empty() {
        return Err(Error::NonCycleArcs(stray));
    }
    if !w.is_integral() || !verify_weighting(g, w)? {
        return Err(Error::NotAWeighting);
    }
    let n = g.vertex_count();
    let mut w = w.clone();
    while let Some((u, v)) = w.values.iter().find(|(_, q)| q.is_negative()).map(|(&a, _)| a) {
        let mut inside = vec![false; n];
        inside[v] = true;
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            for &y in g.out_neighbors(x) {
                if !inside[y] && !w.values[&(x, y)].is_positive() {
                    inside[y] = true;
                    queue.push_back(y);
                }
            }
        }
        if inside[u] {
            return Err(Error::NotAWeighting);
        }
        for (&(a, b), q) in w.values.iter_mut() {
            if inside[a] && !inside[b] {
                *q -= BigRational::one();
            } else if !inside[a] && inside[b] {
                *q += BigRational::one();
            }
        }
    }
    if !w.is_zero_one() {
        return Err(Error::Internal("cut shifts left a value above one".into()));
    }
    Ok(w)
}

/// As [`to_zero_one`], except that arcs in no directed cycle are set aside
/// and given weight zero.
pub fn normalize_zero_one(g: &Digraph, w: &Weighting) -> Result<Weighting, Error> {
    let stray = non_cycle_arcs(g);
    let h = g.without_arcs(&stray);
    let inner = Weighting::from_values(w.iter().filter(|(a, _)| h.has_arc(a.0, a.1)).map(|(a, q)| (a, q.clone())));
    let mut out = to_zero_one(&h, &inner)?;
    for a in stray {
        out.set(a, BigRational::zero());
    }
    Ok(out)
}

/// Solve, integerize and normalize to {0,1}. `None` when `g` has no
/// weighting.
pub fn zero_one_weighting(g: &Digraph) -> Result<Option<Weighting>, Error> {
    match integer_weighting(g)? {
        Some(w) => normalize_zero_one(g, &w).map(Some),
        None => Ok(None),
    }
}

/// Solve then integerize; `None` when `g` has no weighting.
pub fn integer_weighting(g: &Digraph) -> Result<Option<Weighting>, Error> {
    match solve_weighting(g)? {
        Some(w) => integerize(g, &w).map(Some),
        None => Ok(None),
    }
}
