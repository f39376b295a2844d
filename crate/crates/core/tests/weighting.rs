use num_rational::BigRational;
use proptest::prelude::*;

use tricyclic::builder::{random_pinched_sum, random_safely_buildable};
use tricyclic::fixtures::{self, from_mask, random_digraph};
use tricyclic::graph::strong_components;
use tricyclic::oracle::oracle_is_weightable;
use tricyclic::weighting::{
    cycle_basis, find_weak_double_cycle, integer_weighting, shift_potential, solve_weighting, verify_weighting,
    zero_one_weighting, Weighting,
};
use tricyclic::Digraph;

const BUDGET: usize = 100_000;

fn check_instance(g: &Digraph) {
    let w = solve_weighting(g).unwrap();
    let oracle = oracle_is_weightable(g, BUDGET).unwrap();
    assert_eq!(w.is_some(), oracle, "solver and oracle disagree on {:?}", g.arc_vec());
    let obstruction = find_weak_double_cycle(g).unwrap();
    assert_eq!(obstruction.is_none(), oracle);
    match (w, obstruction) {
        (Some(w), _) => {
            assert!(verify_weighting(g, &w).unwrap());
            let z = zero_one_weighting(g).unwrap().unwrap();
            assert!(z.is_zero_one());
            assert!(verify_weighting(g, &z).unwrap());
        }
        (None, Some(o)) => assert!(o.verify(g)),
        (None, None) => unreachable!(),
    }
}

#[test]
fn all_digraphs_on_four_vertices() {
    for n in 1..=4 {
        for mask in 0..1u64 << (n * (n - 1)) {
            check_instance(&from_mask(n, mask));
        }
    }
}

#[test]
fn random_digraphs_up_to_eight_vertices() {
    for seed in 0..150 {
        let n = 5 + (seed as usize % 4);
        check_instance(&random_digraph(seed, n, 0.25));
    }
}

#[test]
fn three_cyclic_corpus_takes_one_third() {
    let third = BigRational::new(1.into(), 3.into());
    for seed in 0..40 {
        for g in [random_safely_buildable(seed, 12).unwrap(), random_pinched_sum(seed, 3, 6).unwrap()] {
            assert!(verify_weighting(&g, &Weighting::constant(&g, third.clone())).unwrap());
            let w = integer_weighting(&g).unwrap().unwrap();
            assert!(w.is_integral() && verify_weighting(&g, &w).unwrap());
        }
    }
}

#[test]
fn double_cycles() {
    assert!(solve_weighting(&fixtures::double_cycle(2)).unwrap().is_some());
    for k in 3..=6 {
        let g = fixtures::double_cycle(k);
        assert!(solve_weighting(&g).unwrap().is_none());
        let o = find_weak_double_cycle(&g).unwrap().unwrap();
        assert_eq!((o.k, o.arcs), (k, g.arc_vec()));
    }
}

#[test]
fn basis_sizes_per_strong_component() {
    for seed in 0..60 {
        let g = random_digraph(seed, 7, 0.3);
        for comp in strong_components(&g).into_iter().filter(|c| c.len() > 1) {
            let (h, _) = g.induced(&comp);
            let b = cycle_basis(&h, &[]).unwrap();
            assert_eq!(b.len(), h.arc_count() - h.vertex_count() + 1);
            assert!(b.cycles.iter().all(|c| h.is_directed_cycle(&c.cycle)));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn shifts_keep_the_verdict(seed in 0u64..1 << 32, n in 3usize..7, v in 0usize..7, num in -5i64..6, den in 1i64..5) {
        let g = random_digraph(seed, n, 0.4);
        let v = v % n;
        let delta = BigRational::new(num.into(), den.into());
        let w = match solve_weighting(&g).unwrap() {
            Some(w) if seed % 2 == 0 => w,
            _ => Weighting::constant(&g, BigRational::new(1.into(), 3.into())),
        };
        let before = verify_weighting(&g, &w).unwrap();
        prop_assert_eq!(verify_weighting(&g, &shift_potential(&w, v, &delta)).unwrap(), before);
    }
}
