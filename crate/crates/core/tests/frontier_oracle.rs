//! Oracles for the linear distance: cost coefficients, curve crossings,
//! merge behavior, the full frontier, and the derived distances.
//!
//! The Pa_2 / Pa_3 pair is small enough to enumerate completely by hand:
//! spectra (-2, 0) and (-3, -1, 0), six injective matchings.

mod common;

use common::{assert_close, complete, cycle, path, spectrum_of};
use graphdiff_core::assignment::WorkCounter;
use graphdiff_core::distance::{Variant, ALPHA_WINDOW};
use graphdiff_core::linear::{
    cost_coeffs, crossing_alpha, lap_solve_linear, linear_frontier, merge_solutions,
    CostCoeffs, MergeOutcome,
};
use graphdiff_core::spectra::Spectrum;
use graphdiff_core::{fixed_alpha_linear_distance, linear_distance, tsgdd};
use itertools::Itertools;

/// Brute-force optimal cost over all injective matchings at a given alpha.
fn brute_force_cost(s1: &Spectrum, s2: &Spectrum, alpha: f64) -> f64 {
    let v1 = s1.values();
    let v2 = s2.values();
    (0..v2.len())
        .permutations(v1.len())
        .map(|rows| {
            rows.iter()
                .enumerate()
                .map(|(j, &i)| {
                    let d = v1[j] / alpha - alpha * v2[i];
                    d * d
                })
                .sum::<f64>()
        })
        .fold(f64::INFINITY, f64::min)
}

fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let (a, b) = (lo.ln(), hi.ln());
    (0..n)
        .map(|k| (a + (b - a) * k as f64 / (n - 1) as f64).exp())
        .collect()
}

#[test]
fn lap_solve_linear_pa2_pa3_at_alpha_1() {
    let s1 = spectrum_of(&path(2));
    let s2 = spectrum_of(&path(3));
    let mut w = WorkCounter::default();
    let a = lap_solve_linear(&s1, &s2, 1.0, &mut w);
    assert_close(a.total_cost, 1.0, 1e-9, "optimal cost");
    assert!(
        a.assign == vec![0, 2] || a.assign == vec![1, 2],
        "either optimal matching is acceptable, got {:?}",
        a.assign
    );
    assert_close(
        a.total_cost,
        brute_force_cost(&s1, &s2, 1.0),
        1e-12,
        "matches enumeration",
    );
}

#[test]
fn lap_solve_linear_identical_spectra() {
    let s = spectrum_of(&cycle(6));
    let mut w = WorkCounter::default();
    let a = lap_solve_linear(&s, &s, 1.0, &mut w);
    assert_eq!(a.assign, vec![0, 1, 2, 3, 4, 5]);
    assert!(a.total_cost <= 1e-12);
}

#[test]
fn lap_solve_linear_pa2_pa3_at_crossing_alpha() {
    let s1 = spectrum_of(&path(2));
    let s2 = spectrum_of(&path(3));
    let alpha = (8.0f64 / 9.0).sqrt();
    let mut w = WorkCounter::default();
    let a = lap_solve_linear(&s1, &s2, alpha, &mut w);
    assert_eq!(a.assign, vec![0, 2], "{{-2 -> -3, 0 -> 0}}");
    assert_close(a.total_cost, 0.5, 1e-9, "f(sqrt(8/9))");
}

#[test]
fn cost_coeffs_hand_sums() {
    let s1 = spectrum_of(&path(2));
    let s2 = spectrum_of(&path(3));
    // {-2 -> -3, 0 -> -1}
    let c = cost_coeffs(&[0, 1], &s1, &s2);
    assert_close(c.a, 10.0, 1e-9, "A");
    assert_close(c.b, 4.0, 1e-9, "B");
    assert_close(c.c, 12.0, 1e-9, "C");
    // {-2 -> -1, 0 -> 0}
    let c = cost_coeffs(&[1, 2], &s1, &s2);
    assert_close(c.a, 1.0, 1e-9, "A");
    assert_close(c.b, 4.0, 1e-9, "B");
    assert_close(c.c, 4.0, 1e-9, "C");
}

#[test]
fn cost_coeffs_edgeless_smaller_graph() {
    let s1 = spectrum_of(&graphdiff_core::graph::Graph::new(3));
    let s2 = spectrum_of(&path(5));
    let c = cost_coeffs(&[0, 1, 2], &s1, &s2);
    assert_eq!(c.b, 0.0);
    assert_eq!(c.c, 0.0);
}

#[test]
fn crossing_alpha_bisection_oracle() {
    let c1 = CostCoeffs { a: 10.0, b: 4.0, c: 12.0 };
    let c2 = CostCoeffs { a: 1.0, b: 4.0, c: 4.0 };
    let x = crossing_alpha(&c1, &c2).expect("curves cross");
    assert_close(x, (8.0f64 / 9.0).sqrt(), 1e-12, "crossing");
    // verify against a sign-change scan of f1 - f2
    let g = |alpha: f64| c1.eval(alpha) - c2.eval(alpha);
    assert!(g(x - 1e-6) * g(x + 1e-6) < 0.0, "sign change at the root");
    // identical curves never cross
    assert!(crossing_alpha(&c1, &c1).is_none());
    // parallel curves (equal A) never cross
    let c3 = CostCoeffs { a: 10.0, b: 4.0, c: 13.0 };
    assert!(crossing_alpha(&c1, &c3).is_none());
}

#[test]
fn merge_discovers_the_middle_matching() {
    let s1 = spectrum_of(&path(2));
    let s2 = spectrum_of(&path(3));
    let mut w = WorkCounter::default();
    match merge_solutions(&[0, 1], &[1, 2], &s1, &s2, ALPHA_WINDOW, &mut w) {
        MergeOutcome::New { crossing, matching } => {
            assert_close(crossing, (8.0f64 / 9.0).sqrt(), 1e-9, "crossing");
            assert_eq!(matching, vec![0, 2]);
        }
        other => panic!("expected a new matching, got {other:?}"),
    }
}

#[test]
fn merge_of_identical_matchings_closes() {
    let s1 = spectrum_of(&path(2));
    let s2 = spectrum_of(&path(3));
    let mut w = WorkCounter::default();
    match merge_solutions(&[0, 2], &[0, 2], &s1, &s2, ALPHA_WINDOW, &mut w) {
        MergeOutcome::Closed { .. } => {}
        other => panic!("expected closed, got {other:?}"),
    }
}

#[test]
fn merge_with_crossing_outside_interval_closes() {
    let s1 = spectrum_of(&path(2));
    let s2 = spectrum_of(&path(3));
    // {-2 -> -3, 0 -> 0} and {-2 -> -1, 0 -> 0} cross at alpha = 1
    let mut w = WorkCounter::default();
    match merge_solutions(&[0, 2], &[1, 2], &s1, &s2, (2.0, 5.0), &mut w) {
        MergeOutcome::Closed { .. } => {}
        other => panic!("expected closed, got {other:?}"),
    }
}

#[test]
fn frontier_of_pa2_pa3_has_exactly_three_matchings() {
    let s1 = spectrum_of(&path(2));
    let s2 = spectrum_of(&path(3));
    let f = linear_frontier(&s1, &s2, ALPHA_WINDOW);
    let mut matchings: Vec<Vec<usize>> = f.entries.iter().map(|e| e.matching.clone()).collect();
    matchings.sort();
    assert_eq!(
        matchings,
        vec![vec![0, 1], vec![0, 2], vec![1, 2]],
        "seeds plus the merged matching"
    );
    // coverage of the search window
    let mut segs = f.segments.clone();
    segs.sort_by(|a, b| a.lo.partial_cmp(&b.lo).unwrap());
    assert!((segs.first().unwrap().lo - ALPHA_WINDOW.0).abs() < 1e-12);
    assert!((segs.last().unwrap().hi - ALPHA_WINDOW.1).abs() < 1e-12);
    for pair in segs.windows(2) {
        assert!((pair[0].hi - pair[1].lo).abs() < 1e-9, "contiguous");
    }
}

#[test]
fn frontier_of_identical_graphs_contains_zero_cost_identity() {
    let s = spectrum_of(&cycle(7));
    let f = linear_frontier(&s, &s, ALPHA_WINDOW);
    let identity: Vec<usize> = (0..7).collect();
    let e = f
        .entries
        .iter()
        .find(|e| e.matching == identity)
        .expect("identity on the frontier");
    assert!(e.coeffs.eval(1.0).abs() <= 1e-9, "f(1) = 0");
}

#[test]
fn frontier_minimum_matches_cold_solves_on_a_grid() {
    let s1 = spectrum_of(&path(3));
    let s2 = spectrum_of(&path(3));
    let f = linear_frontier(&s1, &s2, ALPHA_WINDOW);
    let mut w = WorkCounter::default();
    for alpha in log_grid(ALPHA_WINDOW.0, ALPHA_WINDOW.1, 200) {
        let hull = f.hull_value(alpha);
        let cold = lap_solve_linear(&s1, &s2, alpha, &mut w).total_cost;
        assert_close(hull, cold, 1e-9, &format!("alpha {alpha}"));
    }
}

#[test]
fn frontier_grid_equivalence_on_mixed_pairs() {
    let pairs: Vec<(Spectrum, Spectrum)> = vec![
        (spectrum_of(&path(6)), spectrum_of(&path(9))),
        (spectrum_of(&path(5)), spectrum_of(&cycle(11))),
        (spectrum_of(&cycle(4)), spectrum_of(&common::square_grid(4))),
        (
            spectrum_of(&graphdiff_core::graph::random_bernoulli_graph(8, 0.5, 3)),
            spectrum_of(&graphdiff_core::graph::random_bernoulli_graph(19, 0.4, 4)),
        ),
        (
            spectrum_of(&graphdiff_core::graph::random_bernoulli_graph(10, 0.25, 5)),
            spectrum_of(&graphdiff_core::graph::random_bernoulli_graph(27, 0.75, 6)),
        ),
    ];
    for (k, (s1, s2)) in pairs.iter().enumerate() {
        let f = linear_frontier(s1, s2, ALPHA_WINDOW);
        let mut w = WorkCounter::default();
        for alpha in log_grid(ALPHA_WINDOW.0, ALPHA_WINDOW.1, 120) {
            let hull = f.hull_value(alpha);
            let cold = lap_solve_linear(s1, s2, alpha, &mut w).total_cost;
            assert_close(hull, cold, 1e-9, &format!("pair {k} alpha {alpha}"));
        }
    }
}

#[test]
fn frontier_matchings_are_strictly_monotone_and_ordered() {
    let s1 = spectrum_of(&graphdiff_core::graph::random_bernoulli_graph(9, 0.5, 17));
    let s2 = spectrum_of(&graphdiff_core::graph::random_bernoulli_graph(21, 0.5, 18));
    let f = linear_frontier(&s1, &s2, ALPHA_WINDOW);
    for e in &f.entries {
        assert!(
            e.matching.windows(2).all(|w| w[0] < w[1]),
            "strictly increasing rows: {:?}",
            e.matching
        );
    }
    // segment owners in alpha order agree monotonically
    let mut segs = f.segments.clone();
    segs.sort_by(|a, b| a.lo.partial_cmp(&b.lo).unwrap());
    for pair in segs.windows(2) {
        let m1 = &f.entries[pair[0].entry].matching;
        let m2 = &f.entries[pair[1].entry].matching;
        for (a, b) in m1.iter().zip(m2) {
            assert!(a <= b, "agreement ordering between {m1:?} and {m2:?}");
        }
    }
}

#[test]
fn local_minima_of_pa2_pa3_hull() {
    let s1 = spectrum_of(&path(2));
    let s2 = spectrum_of(&path(3));
    let f = linear_frontier(&s1, &s2, ALPHA_WINDOW);
    let minima = f.local_minima();
    let mut alphas: Vec<f64> = minima.iter().map(|&(_, a)| a).collect();
    alphas.sort_by(|x, y| x.partial_cmp(y).unwrap());
    assert_eq!(alphas.len(), 2, "two interior hull minima");
    assert_close(alphas[0], (4.0f64 / 9.0).powf(0.25), 1e-9, "first");
    assert_close(alphas[1], 4.0f64.powf(0.25), 1e-9, "second");
}

#[test]
fn linear_distance_pa2_pa3_is_exactly_zero() {
    let r = linear_distance(&path(2), &path(3));
    assert_eq!(r.value, 0.0);
    assert_eq!(r.value_squared, 0.0);
    assert_eq!(r.variant, Variant::LinearFree);
    assert!(r.t_star.is_none());
    assert!(r.alpha_star.is_some());
}

#[test]
fn linear_distance_identical_graphs_is_zero() {
    let g = common::square_grid(3);
    let r = linear_distance(&g, &g);
    assert_eq!(r.value, 0.0);
}

#[test]
fn linear_distance_proportional_spectra_is_zero() {
    // Cy_3: (-3,-3,0); K_4: (-4,-4,-4,0); scaling alpha absorbs the ratio
    let r = linear_distance(&cycle(3), &complete(4));
    assert_eq!(r.value, 0.0);
}

#[test]
fn fixed_alpha_values() {
    let r = fixed_alpha_linear_distance(&path(2), &path(3), 1.0);
    assert_close(r.value_squared, 1.0, 1e-9, "alpha 1");
    assert_eq!(r.variant, Variant::LinearFixedAlpha);
    let r = fixed_alpha_linear_distance(&path(2), &path(3), (8.0f64 / 9.0).sqrt());
    assert_close(r.value_squared, 0.5, 1e-9, "alpha sqrt(8/9)");
    let g = cycle(9);
    let r = fixed_alpha_linear_distance(&g, &g, 1.0);
    assert_eq!(r.value_squared, 0.0);
}

#[test]
fn free_distance_lower_bounds_fixed_alpha() {
    let g1 = graphdiff_core::graph::random_bernoulli_graph(7, 0.5, 31);
    let g2 = graphdiff_core::graph::random_bernoulli_graph(15, 0.5, 32);
    let free = linear_distance(&g1, &g2).value_squared;
    for alpha in log_grid(0.2, 5.0, 25) {
        let fixed = fixed_alpha_linear_distance(&g1, &g2, alpha).value_squared;
        assert!(
            free <= fixed + 1e-9,
            "free {free} vs fixed {fixed} at alpha {alpha}"
        );
    }
}

#[test]
fn tsgdd_r_zero_collapses_to_fixed_alpha_one() {
    let g1 = path(4);
    let g2 = cycle(9);
    let a = tsgdd(&g1, &g2, 0.0);
    let b = fixed_alpha_linear_distance(&g1, &g2, 1.0);
    assert_eq!(a.value_squared, b.value_squared);
    assert_eq!(a.variant, Variant::Tsgdd);
}

#[test]
fn tsgdd_r_one_matches_brute_force() {
    let s1 = spectrum_of(&path(2));
    let s2 = spectrum_of(&path(3));
    let expected = brute_force_cost(&s1, &s2, 2.0 / 3.0) / 36.0;
    let r = tsgdd(&path(2), &path(3), 1.0);
    assert_close(r.value_squared, expected, 1e-12, "scaled LAP cost");
}

#[test]
fn tsgdd_identical_graphs_zero() {
    let g = path(11);
    assert_eq!(tsgdd(&g, &g, 0.5).value, 0.0);
}

#[test]
fn distances_are_bitwise_symmetric() {
    let g1 = graphdiff_core::graph::random_bernoulli_graph(9, 0.4, 51);
    let g2 = graphdiff_core::graph::random_bernoulli_graph(14, 0.6, 52);
    let a = linear_distance(&g1, &g2);
    let b = linear_distance(&g2, &g1);
    assert_eq!(a.value, b.value);
    assert_eq!(a.matching, b.matching);
    let a = fixed_alpha_linear_distance(&g1, &g2, 0.7);
    let b = fixed_alpha_linear_distance(&g2, &g1, 0.7);
    assert_eq!(a.value, b.value);
    // equal sizes too
    let h1 = graphdiff_core::graph::random_bernoulli_graph(12, 0.5, 53);
    let h2 = graphdiff_core::graph::random_bernoulli_graph(12, 0.5, 54);
    let a = linear_distance(&h1, &h2);
    let b = linear_distance(&h2, &h1);
    assert_eq!(a.value, b.value);
}
