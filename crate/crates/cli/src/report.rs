use std::path::{Path, PathBuf};
use std::thread;

use serde::Serialize;

use tricyclic::annular::{is_three_annular, NotAnnularReason};
use tricyclic::graph::{is_strongly_2connected, is_strongly_connected, is_unbreakable, BreakWitness};
use tricyclic::recognition::{
    find_brancher, find_diwheel, max_activity, recognize_three_cyclic_with_budget, BrancherEmbedding, Diwheel,
};
use tricyclic::rings::compute_lring;
use tricyclic::{Certificate, Digraph, Edge, Error, LRing, Vertex};

use crate::{read_graph, Failure};

#[derive(Serialize)]
pub struct Activity {
    arc: Edge,
    activity: usize,
}

#[derive(Serialize)]
pub struct ArcCount {
    arcs: usize,
    expected: usize,
    holds: bool,
}

#[derive(Serialize)]
pub struct Report {
    file: String,
    vertices: usize,
    labels: Vec<String>,
    strongly_connected: bool,
    unbreakable: bool,
    unbreakable_witness: Option<BreakWitness>,
    ring: Option<LRing>,
    /// A cycle of length not divisible by `l` when there is no ring.
    ring_witness: Option<Vec<Vertex>>,
    pinched: Option<bool>,
    three_cyclic: bool,
    certificate: Certificate,
    diwheel: Option<Diwheel>,
    branchers: Option<BrancherEmbedding>,
    max_activity: Option<Activity>,
    /// Only decided for unbreakable digraphs.
    annular: Option<bool>,
    annular_reason: Option<NotAnnularReason>,
    arc_count_identity: ArcCount,
    strongly_2connected: Option<bool>,
}

pub fn check(g: &Digraph, file: String, l: usize, max_cycles: usize) -> Result<Report, Error> {
    let n = g.vertex_count();
    let unbreakable_witness = is_unbreakable(g).err();
    let (ring, ring_witness) = match compute_lring(g, l) {
        Ok(r) => (Some(r), None),
        Err(Error::NotRingable { cycle, .. }) => (None, Some(cycle)),
        Err(Error::NotStronglyConnected(_) | Error::TooSmall { .. }) => (None, None),
        Err(e) => return Err(e),
    };
    let certificate = recognize_three_cyclic_with_budget(g, max_cycles)?;
    let (annular, annular_reason) = if unbreakable_witness.is_none() {
        let v = is_three_annular(g)?;
        (Some(v.annular), v.reason)
    } else {
        (None, None)
    };
    let expected = (2 * n).saturating_sub(3);
    Ok(Report {
        file,
        vertices: n,
        labels: g.labels().to_vec(),
        strongly_connected: is_strongly_connected(g),
        unbreakable: unbreakable_witness.is_none(),
        unbreakable_witness,
        pinched: ring.as_ref().map(LRing::is_pinched),
        ring,
        ring_witness,
        three_cyclic: certificate.is_three_cyclic(),
        certificate,
        diwheel: find_diwheel(g),
        branchers: find_brancher(g),
        max_activity: max_activity(g).map(|(arc, activity)| Activity { arc, activity }),
        annular,
        annular_reason,
        arc_count_identity: ArcCount { arcs: g.arc_count(), expected, holds: g.arc_count() == expected },
        strongly_2connected: is_strongly_2connected(g).ok(),
    })
}

fn check_file(path: &Path, l: usize, max_cycles: usize) -> Result<Report, Failure> {
    let g = read_graph(path)?;
    Ok(check(&g, path.display().to_string(), l, max_cycles)?)
}

/// Reports in input order; files are shared out round-robin over `jobs`
/// threads.
pub fn check_all(files: &[PathBuf], l: usize, max_cycles: usize, jobs: usize) -> Result<Vec<Report>, Failure> {
    let jobs = jobs.clamp(1, files.len().max(1));
    let mut slots: Vec<Option<Result<Report, Failure>>> = (0..files.len()).map(|_| None).collect();
    thread::scope(|s| {
        let handles: Vec<_> = (0..jobs)
            .map(|j| {
                s.spawn(move || {
                    (j..files.len())
                        .step_by(jobs)
                        .map(|i| (i, check_file(&files[i], l, max_cycles)))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for h in handles {
            for (i, r) in h.join().expect("worker panicked") {
                slots[i] = Some(r);
            }
        }
    });
    slots.into_iter().map(|r| r.expect("every file checked")).collect()
}
