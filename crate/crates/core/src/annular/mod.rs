//! Drawings with the three ring parts on three rays from the origin, and the
//! tests that decide when such a drawing exists.

mod drawing;
mod parent;
mod svg;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use drawing::{draw_by_peeling, validate_drawing, AnnularDrawing, DrawingViolation, Placement};
pub use parent::{parent_tree, ParentTree};
pub use svg::{export_svg, render_svg};

use crate::error::Error;
use crate::graph::{is_unbreakable, Digraph, Edge};
use crate::recognition::{
    find_brancher, find_diwheel, max_activity, recognize_three_cyclic, BrancherEmbedding, Certificate, Diwheel,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NotAnnularReason {
    NotThreeCyclic { certificate: Certificate },
    Diwheel { diwheel: Diwheel },
    /// An arc of activity three or more, and the brancher it forces.
    Activity { arc: Edge, activity: usize, brancher: BrancherEmbedding },
}

impl fmt::Display for NotAnnularReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotAnnularReason::NotThreeCyclic { certificate } => {
                write!(f, "not 3-cyclic ({})", certificate.kind())
            }
            NotAnnularReason::Diwheel { diwheel } => write!(f, "contains a diwheel with hub {}", diwheel.hub),
            NotAnnularReason::Activity { arc, activity, brancher } => write!(
                f,
                "arc {}->{} has activity {activity}; brancher {} found",
                arc.0, arc.1, brancher.variant
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnnularVerdict {
    pub annular: bool,
    pub reason: Option<NotAnnularReason>,
}

/// Decides 3-annularity of an unbreakable digraph. The activity bound and
/// the brancher search are run separately and must agree.
pub fn is_three_annular(g: &Digraph) -> Result<AnnularVerdict, Error> {
    if is_unbreakable(g).is_err() {
        return Err(Error::NotUnbreakable);
    }
    let no = |reason| Ok(AnnularVerdict { annular: false, reason: Some(reason) });
    let certificate = recognize_three_cyclic(g)?;
    if !certificate.is_three_cyclic() {
        return no(NotAnnularReason::NotThreeCyclic { certificate });
    }
    if let Some(diwheel) = find_diwheel(g) {
        return no(NotAnnularReason::Diwheel { diwheel });
    }
    let busy = max_activity(g).filter(|&(_, a)| a > 2);
    match (busy, find_brancher(g)) {
        (None, None) => Ok(AnnularVerdict { annular: true, reason: None }),
        (Some((arc, activity)), Some(brancher)) => no(NotAnnularReason::Activity { arc, activity, brancher }),
        (busy, brancher) => Err(Error::Internal(format!(
            "activity and brancher tests disagree: {busy:?} vs {brancher:?}"
        ))),
    }
}

/// A drawing of `g`, or the reason none exists.
pub fn synthesize_drawing(g: &Digraph) -> Result<AnnularDrawing, Error> {
    let verdict = is_three_annular(g)?;
    if let Some(reason) = verdict.reason {
        return Err(Error::NotAnnular(Box::new(reason)));
    }
    draw_by_peeling(g).map_err(|e| Error::Internal(format!("no drawing for an annular digraph: {e}")))
}
