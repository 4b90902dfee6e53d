//! Cheap bounds and companion objectives: the collision-tolerant spectral
//! lower bound, upper bounds for box products built from factor distances,
//! and the regularized objective that penalizes scale drift.

use crate::assignment::WorkCounter;
use crate::expdist::{exp_cost, lap_solve_exponential};
use crate::graph::{laplacian, Graph};
use crate::spectra::{decompose, kernel_frobenius_norm, Spectrum};

/// Lower bound on the linear objective at one scale: every column picks its
/// cheapest row independently, collisions allowed.
pub fn spectral_lower_bound(s1: &Spectrum, s2: &Spectrum, alpha: f64) -> f64 {
    let v2 = s2.values();
    s1.values()
        .iter()
        .map(|&l1| {
            v2.iter()
                .map(|&l2| {
                    let d = l1 / alpha - alpha * l2;
                    d * d
                })
                .fold(f64::INFINITY, f64::min)
        })
        .sum()
}

/// Inputs for the box-product upper bound: two factor pairs, the comparison
/// point `(t_c, alpha_c)`, the mixing weight, and one witness matching per
/// factor pair.
pub struct ProductBoundInputs<'a> {
    pub g1a: &'a Graph,
    pub g1b: &'a Graph,
    pub g2a: &'a Graph,
    pub g2b: &'a Graph,
    pub t_c: f64,
    pub alpha_c: f64,
    pub lambda: f64,
    pub p1: Vec<usize>,
    pub p2: Vec<usize>,
}

/// Upper bound on the kernel gap of `g1a box g1b` versus `g2a box g2b` at one
/// comparison point, mixing the two ways of splitting the product gap into a
/// factor gap scaled by the other factor's kernel norms.
pub fn product_upper_bound(inp: &ProductBoundInputs) -> f64 {
    let s1a = decompose(&laplacian(inp.g1a)).spectrum;
    let s1b = decompose(&laplacian(inp.g1b)).spectrum;
    let s2a = decompose(&laplacian(inp.g2a)).spectrum;
    let s2b = decompose(&laplacian(inp.g2b)).spectrum;
    let (t, alpha) = (inp.t_c, inp.alpha_c);
    let d1 = exp_cost(&inp.p1, &s1a, &s2a, t, alpha).sqrt();
    let d2 = exp_cost(&inp.p2, &s1b, &s2b, t, alpha).sqrt();
    let term1 = (kernel_frobenius_norm(&s1b, t / alpha) + kernel_frobenius_norm(&s2b, t * alpha)) * d1;
    let term2 = (kernel_frobenius_norm(&s1a, t / alpha) + kernel_frobenius_norm(&s2a, t * alpha)) * d2;
    inp.lambda * term1 + (1.0 - inp.lambda) * term2
}

/// Min-norm combination for the special case of squared factors, `g1 box g1`
/// versus `g2 box g2`: the smaller factor kernel norm times the factor gap
/// at the comparison point. Not a certified bound — the sound combination
/// adds the two kernel norms (see [`product_upper_bound`]); this aggressive
/// variant can undershoot the product distance and is kept for comparison.
pub fn product_special_case_bound(g1: &Graph, g2: &Graph, t_c: f64, alpha_c: f64) -> f64 {
    let s1 = decompose(&laplacian(g1)).spectrum;
    let s2 = decompose(&laplacian(g2)).spectrum;
    let mut work = WorkCounter::default();
    let a = lap_solve_exponential(&s1, &s2, t_c, alpha_c, &mut work);
    let k1 = kernel_frobenius_norm(&s1, t_c / alpha_c);
    let k2 = kernel_frobenius_norm(&s2, t_c * alpha_c);
    k1.min(k2) * a.total_cost.sqrt()
}

/// Kernel gap of one matching plus penalties for how far the scaled kernels
/// drift from their unscaled versions; collapses to the plain gap at scale 1.
pub fn regularized_objective(
    s1: &Spectrum,
    s2: &Spectrum,
    matching: &[usize],
    alpha: f64,
    t: f64,
) -> f64 {
    let v1 = s1.values();
    let v2 = s2.values();
    let main = exp_cost(matching, s1, s2, t, alpha);
    let mut drift1 = 0.0;
    for &l in v1 {
        let d = (t / alpha * l).exp() - (t * l).exp();
        drift1 += d * d;
    }
    let mut drift2 = 0.0;
    for &i in matching {
        let d = (t * v2[i]).exp() - (t * alpha * v2[i]).exp();
        drift2 += d * d;
    }
    main.sqrt() + drift1.sqrt() + drift2.sqrt()
}
