//! Properties of generated unbreakable 3-cyclic digraphs.

use tricyclic::annular::{draw_by_peeling, is_three_annular, parent_tree, validate_drawing};
use tricyclic::builder::{extract_build_script, random_pinched_sum, random_safely_buildable, replay};
use tricyclic::decomposition::{decompose, recompose};
use tricyclic::graph::{is_strongly_2connected, is_unbreakable};
use tricyclic::recognition::{
    diamond_violations, diwheel_free_report, find_brancher, find_diwheel, max_activity, nbrs_violations,
    oneper_violations, recognize_three_cyclic,
};
use tricyclic::{to_edge_list, DecompositionTree, Digraph};

fn corpus() -> Vec<Digraph> {
    let mut out = Vec::new();
    for seed in 0..60 {
        out.push(random_safely_buildable(seed, 4 + (seed as usize % 20)).unwrap());
        out.push(random_pinched_sum(seed, 1 + (seed as usize % 4), 3 + (seed as usize % 6)).unwrap());
    }
    out
}

fn identified_arcs_are_special(t: &DecompositionTree) -> bool {
    match t {
        DecompositionTree::Leaf { .. } => true,
        DecompositionTree::Sum { arc, left_map, right_map, left, right } => {
            let side = |map: &[usize], child: &DecompositionTree| {
                let g = recompose(child).unwrap();
                let u = map.iter().position(|&x| x == arc.0).unwrap();
                let v = map.iter().position(|&x| x == arc.1).unwrap();
                g.has_arc(u, v) && (g.out_degree(u) == 1 || g.in_degree(v) == 1)
            };
            side(left_map, left)
                && side(right_map, right)
                && identified_arcs_are_special(left)
                && identified_arcs_are_special(right)
        }
    }
}

#[test]
fn generated_digraphs_are_unbreakable_and_three_cyclic() {
    for g in corpus() {
        assert!(is_unbreakable(&g).is_ok());
        assert!(recognize_three_cyclic(&g).unwrap().is_three_cyclic());
        assert!(!is_strongly_2connected(&g).unwrap());
    }
}

#[test]
fn decomposition_round_trips() {
    for g in corpus() {
        let t = decompose(&g).unwrap();
        assert_eq!(to_edge_list(&recompose(&t).unwrap()), to_edge_list(&g));
        assert!(t.leaves().iter().all(|(_, ring)| ring.is_pinched()));
        assert!(identified_arcs_are_special(&t));
    }
}

#[test]
fn diwheel_free_characterizations_agree() {
    for g in corpus() {
        let report = diwheel_free_report(&g).unwrap();
        assert!(report.all_agree(), "{report:?}");
        if report.no_diwheel {
            assert_eq!(g.arc_count(), 2 * g.vertex_count() - 3);
            assert_eq!(replay(&extract_build_script(&g).unwrap()).unwrap(), g);
        }
    }
}

#[test]
fn structural_lemmas_hold() {
    for g in corpus() {
        assert!(nbrs_violations(&g).is_empty());
        if find_diwheel(&g).is_none() {
            assert!(diamond_violations(&g).is_empty());
            assert!(oneper_violations(&g).is_empty());
        }
    }
}

#[test]
fn annularity_tests_agree() {
    let mut seen = [0usize; 2];
    for g in corpus() {
        if find_diwheel(&g).is_some() {
            continue;
        }
        let by_activity = max_activity(&g).is_none_or(|(_, a)| a <= 2);
        let by_brancher = find_brancher(&g).is_none();
        let drawing = draw_by_peeling(&g).ok().filter(|d| validate_drawing(&g, d).is_ok());
        let caterpillar = parent_tree(&extract_build_script(&g).unwrap()).unwrap().is_caterpillar();
        assert_eq!(by_activity, by_brancher);
        assert_eq!(by_activity, drawing.is_some());
        assert_eq!(by_activity, caterpillar);
        assert_eq!(by_activity, is_three_annular(&g).unwrap().annular);
        seen[by_activity as usize] += 1;
    }
    assert!(seen[0] > 0 && seen[1] > 0, "{seen:?}");
}
