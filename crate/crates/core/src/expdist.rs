//! Exponential (heat-kernel) distance: per-matching costs at a given time and
//! scale, the inner scale minimization, and the continuation scheme that
//! tracks the matching frontier while sweeping time toward the supremum.

use crate::assignment::{solve_rlap, Assignment, CostMatrix, WorkCounter};
use crate::distance::ExpOptions;
use crate::graph::{laplacian, Graph};
use crate::linear::{canonicalize, linear_frontier, same_curve};
use crate::optim::{bisect_sign_change, brent_min, golden_section_max};
use crate::spectra::{decompose, Spectrum};

/// Squared kernel gap of one matching at time `t` and scale `alpha`:
/// `sum_j (exp((t/alpha) lam1[j]) - exp(alpha t lam2[m(j)]))^2`.
pub fn exp_cost(matching: &[usize], s1: &Spectrum, s2: &Spectrum, t: f64, alpha: f64) -> f64 {
    let v1 = s1.values();
    let v2 = s2.values();
    let mut total = 0.0;
    for (j, &i) in matching.iter().enumerate() {
        let d = (t / alpha * v1[j]).exp() - (t * alpha * v2[i]).exp();
        total += d * d;
    }
    total
}

/// Optimal matching of the kernel gap at one `(t, alpha)`, in canonical
/// (sorted-rows) form.
pub fn lap_solve_exponential(
    s1: &Spectrum,
    s2: &Spectrum,
    t: f64,
    alpha: f64,
    work: &mut WorkCounter,
) -> Assignment {
    let v1 = s1.values();
    let v2 = s2.values();
    let (n1, n2) = (v1.len(), v2.len());
    let cost = |i: usize, j: usize| {
        let d = (t / alpha * v1[j]).exp() - (t * alpha * v2[i]).exp();
        d * d
    };
    let mut data = Vec::with_capacity(n1 * n2);
    for i in 0..n2 {
        for j in 0..n1 {
            data.push(cost(i, j));
        }
    }
    let mut a = solve_rlap(&CostMatrix::new(n2, n1, data), work);
    canonicalize(&mut a, cost);
    a
}

/// Minimizes one matching's cost over the scale at a fixed time.
///
/// A warm start searches the bracket `[warm/2, 2*warm]` first and widens it
/// geometrically while the minimizer pins an interior bracket edge, so the
/// search tracks the branch the caller was already following. Without a warm
/// start the whole window is searched.
pub fn minimize_alpha_for_matching(
    matching: &[usize],
    s1: &Spectrum,
    s2: &Spectrum,
    t: f64,
    window: (f64, f64),
    warm: Option<f64>,
) -> (f64, f64) {
    let mut f = |alpha: f64| exp_cost(matching, s1, s2, t, alpha);
    if let Some(a0) = warm {
        if a0.is_finite() && a0 > 0.0 {
            let mut lo = (a0 * 0.5).max(window.0);
            let mut hi = (a0 * 2.0).min(window.1);
            while lo < hi {
                let (x, v) = brent_min(&mut f, lo, hi, 1e-12, 200);
                let edge = 1e-3 * (hi - lo);
                let pinned_lo = x - lo <= edge && lo > window.0;
                let pinned_hi = hi - x <= edge && hi < window.1;
                if !pinned_lo && !pinned_hi {
                    return (x, v);
                }
                if pinned_lo {
                    lo = (lo * 0.125).max(window.0);
                }
                if pinned_hi {
                    hi = (hi * 8.0).min(window.1);
                }
            }
        }
    }
    brent_min(&mut f, window.0, window.1, 1e-12, 200)
}

/// One matching retained by the continuation, with its current scale
/// minimizer and minimized cost.
#[derive(Clone, Debug)]
pub struct ExpEntry {
    pub matching: Vec<usize>,
    pub alpha: f64,
    pub value: f64,
}

/// The set of matchings tracked at the current time.
#[derive(Clone, Debug)]
pub struct ExpFrontier {
    pub t: f64,
    pub entries: Vec<ExpEntry>,
}

fn sort_entries(f: &mut ExpFrontier) {
    f.entries.sort_by(|a, b| {
        a.alpha
            .partial_cmp(&b.alpha)
            .unwrap()
            .then_with(|| a.matching.cmp(&b.matching))
    });
}

fn frontier_min(f: &ExpFrontier) -> f64 {
    f.entries
        .iter()
        .map(|e| e.value)
        .fold(f64::INFINITY, f64::min)
}

/// Remembers crossings whose assignment probe found nothing new, so a slowly
/// drifting crossing is not re-solved at every time step.
#[derive(Default)]
struct ProbeMemo {
    sterile: Vec<(Vec<usize>, Vec<usize>, f64)>,
}

impl ProbeMemo {
    fn is_sterile(&self, m1: &[usize], m2: &[usize], x: f64) -> bool {
        self.sterile.iter().any(|(a, b, seen)| {
            a == m1 && b == m2 && (seen - x).abs() <= 1e-3 * seen.max(x)
        })
    }

    fn mark(&mut self, m1: &[usize], m2: &[usize], x: f64) {
        if let Some(slot) = self
            .sterile
            .iter_mut()
            .find(|(a, b, _)| a == m1 && b == m2)
        {
            slot.2 = x;
        } else {
            self.sterile.push((m1.to_vec(), m2.to_vec(), x));
        }
    }
}

/// Probes crossings between scale-adjacent retained curves and inserts any
/// new matching the assignment finds there, repeating until stable. One
/// assignment solve per discovered crossing, skipping crossings the memo
/// knows were sterile at nearly the same scale.
fn expand(
    f: &mut ExpFrontier,
    s1: &Spectrum,
    s2: &Spectrum,
    window: (f64, f64),
    work: &mut WorkCounter,
    memo: &mut ProbeMemo,
) {
    let t = f.t;
    loop {
        let mut inserted = false;
        for k in 0..f.entries.len().saturating_sub(1) {
            let (a1, a2) = (f.entries[k].alpha, f.entries[k + 1].alpha);
            if a2 - a1 <= 1e-9 * a2.max(1.0) {
                continue;
            }
            let m1 = f.entries[k].matching.clone();
            let m2 = f.entries[k + 1].matching.clone();
            let mut g =
                |alpha: f64| exp_cost(&m1, s1, s2, t, alpha) - exp_cost(&m2, s1, s2, t, alpha);
            let Some(x) = bisect_sign_change(&mut g, a1, a2, 1e-10, 200) else {
                continue;
            };
            if memo.is_sterile(&m1, &m2, x) {
                continue;
            }
            let probe = lap_solve_exponential(s1, s2, t, x, work);
            if f
                .entries
                .iter()
                .any(|e| same_curve(&e.matching, &probe.assign, s2))
            {
                memo.mark(&m1, &m2, x);
                continue;
            }
            let (alpha, value) =
                minimize_alpha_for_matching(&probe.assign, s1, s2, t, window, Some(x));
            f.entries.push(ExpEntry {
                matching: probe.assign,
                alpha,
                value,
            });
            sort_entries(f);
            // the envelope changed shape; forget sterile marks
            memo.sterile.clear();
            inserted = true;
            break;
        }
        if !inserted {
            return;
        }
    }
}

/// Seeds the continuation at `t_init` from the linear frontier's matchings:
/// at small times the kernel gap is the linear objective to leading order, so
/// those matchings are exactly the ones that can own a scale interval.
pub fn init_exp_frontier(
    s1: &Spectrum,
    s2: &Spectrum,
    t_init: f64,
    window: (f64, f64),
    work: &mut WorkCounter,
) -> ExpFrontier {
    let lf = linear_frontier(s1, s2, window);
    work.absorb(&lf.work);
    let mut f = ExpFrontier {
        t: t_init,
        entries: Vec::new(),
    };
    for e in &lf.entries {
        let warm = e.coeffs.alpha_opt().clamp(window.0, window.1);
        let (alpha, value) =
            minimize_alpha_for_matching(&e.matching, s1, s2, t_init, window, Some(warm));
        f.entries.push(ExpEntry {
            matching: e.matching.clone(),
            alpha,
            value,
        });
    }
    sort_entries(&mut f);
    expand(&mut f, s1, s2, window, work, &mut ProbeMemo::default());
    f
}

/// Advances the frontier to `t_new`: re-minimizes every retained matching's
/// scale from its previous minimizer, then probes adjacent crossings for
/// matchings that became optimal. Retained matchings are never dropped.
pub fn t_step(
    f: &mut ExpFrontier,
    s1: &Spectrum,
    s2: &Spectrum,
    t_new: f64,
    window: (f64, f64),
    work: &mut WorkCounter,
) {
    t_step_memo(f, s1, s2, t_new, window, work, &mut ProbeMemo::default());
}

fn t_step_memo(
    f: &mut ExpFrontier,
    s1: &Spectrum,
    s2: &Spectrum,
    t_new: f64,
    window: (f64, f64),
    work: &mut WorkCounter,
    memo: &mut ProbeMemo,
) {
    f.t = t_new;
    for e in f.entries.iter_mut() {
        let (alpha, value) =
            minimize_alpha_for_matching(&e.matching, s1, s2, t_new, window, Some(e.alpha));
        e.alpha = alpha;
        e.value = value;
    }
    sort_entries(f);
    expand(f, s1, s2, window, work, memo);
}

/// Outcome of a time scan: the extremal squared value and its witness.
pub(crate) struct ScanResult {
    pub value_squared: f64,
    pub t_star: f64,
    pub alpha_star: f64,
    pub matching: Vec<usize>,
    pub work: WorkCounter,
}

fn argmin_entry(entries: &[ExpEntry]) -> usize {
    let mut best = 0;
    for (k, e) in entries.iter().enumerate() {
        if e.value < entries[best].value {
            best = k;
        }
    }
    best
}

/// Sweeps time upward, tracking the frontier, and returns the supremum of the
/// scale-minimized cost. Stops at the first non-increase unless `full_sweep`
/// forces the scan to the cap, then refines the peak between its bracketing
/// steps and verifies the winner with assignment solves until fixed point.
pub(crate) fn exp_sup_scan(s1: &Spectrum, s2: &Spectrum, opts: &ExpOptions) -> ScanResult {
    let window = opts.alpha_window;
    let mut work = WorkCounter::default();
    let mut f = init_exp_frontier(s1, s2, opts.t_init, window, &mut work);
    let mut best_d2 = frontier_min(&f);
    let mut t_before_best = opts.t_init;
    let mut t_after_best = f64::NAN;
    let mut prev_t = f.t;
    let mut dt = opts.dt;
    let mut quiet_steps = 0usize;
    let mut memo = ProbeMemo::default();
    while f.t < opts.t_cap {
        let t_next = (f.t + dt).min(opts.t_cap);
        let n_before = f.entries.len();
        t_step_memo(&mut f, s1, s2, t_next, window, &mut work, &mut memo);
        if f.entries.len() == n_before {
            quiet_steps += 1;
        } else {
            quiet_steps = 0;
        }
        let d2 = frontier_min(&f);
        if d2 > best_d2 * (1.0 + 1e-9) {
            t_before_best = prev_t;
            best_d2 = d2;
            t_after_best = f64::NAN;
        } else {
            if t_after_best.is_nan() {
                t_after_best = t_next;
            }
            if !opts.full_sweep {
                break;
            }
        }
        prev_t = t_next;
        // slow tails: no matching has entered for a while, lengthen the step
        if t_next > 2.0 && quiet_steps >= 10 {
            dt = (dt * 1.25).min(2.0);
        }
    }

    let lo = t_before_best.max(opts.t_init);
    let mut hi = if t_after_best.is_nan() { f.t } else { t_after_best };
    hi = hi.min(opts.t_cap);
    if hi <= lo {
        hi = (lo + opts.dt).min(opts.t_cap).max(lo * (1.0 + 1e-9));
    }
    let mut state = f.entries.clone();
    let eval = |t: f64, state: &mut Vec<ExpEntry>| -> f64 {
        let mut best = f64::INFINITY;
        for e in state.iter_mut() {
            let (alpha, value) =
                minimize_alpha_for_matching(&e.matching, s1, s2, t, window, Some(e.alpha));
            e.alpha = alpha;
            e.value = value;
            best = best.min(value);
        }
        best
    };
    let (t_star, _) = golden_section_max(|t| eval(t, &mut state), lo, hi, 1e-8);
    eval(t_star, &mut state);
    // verification at the peak: the winner's scale must be an assignment
    // fixed point, otherwise the cheaper matching joins and takes over
    loop {
        let wi = argmin_entry(&state);
        let probe = lap_solve_exponential(s1, s2, t_star, state[wi].alpha, &mut work);
        if state
            .iter()
            .any(|e| same_curve(&e.matching, &probe.assign, s2))
        {
            break;
        }
        let (alpha, value) =
            minimize_alpha_for_matching(&probe.assign, s1, s2, t_star, window, Some(state[wi].alpha));
        state.push(ExpEntry {
            matching: probe.assign,
            alpha,
            value,
        });
    }
    let wi = argmin_entry(&state);
    ScanResult {
        value_squared: state[wi].value,
        t_star,
        alpha_star: state[wi].alpha,
        matching: state[wi].matching.clone(),
        work,
    }
}

/// Time scan of the assignment cost at one fixed scale: no inner
/// minimization, one solve per step, peak refined the same way.
pub(crate) fn exp_fixed_scan(
    s1: &Spectrum,
    s2: &Spectrum,
    alpha: f64,
    opts: &ExpOptions,
) -> ScanResult {
    let mut work = WorkCounter::default();
    let mut t = opts.t_init;
    let first = lap_solve_exponential(s1, s2, t, alpha, &mut work);
    let mut best_d2 = first.total_cost;
    let mut cur_matching = first.assign;
    let mut t_before_best = t;
    let mut t_after_best = f64::NAN;
    let mut prev_t = t;
    let mut dt = opts.dt;
    let mut quiet_steps = 0usize;
    while t < opts.t_cap {
        let t_next = (t + dt).min(opts.t_cap);
        let a = lap_solve_exponential(s1, s2, t_next, alpha, &mut work);
        if a.assign == cur_matching {
            quiet_steps += 1;
        } else {
            quiet_steps = 0;
            cur_matching = a.assign;
        }
        if a.total_cost > best_d2 * (1.0 + 1e-9) {
            t_before_best = prev_t;
            best_d2 = a.total_cost;
            t_after_best = f64::NAN;
        } else {
            if t_after_best.is_nan() {
                t_after_best = t_next;
            }
            if !opts.full_sweep {
                t = t_next;
                break;
            }
        }
        prev_t = t_next;
        t = t_next;
        if t_next > 2.0 && quiet_steps >= 10 {
            dt = (dt * 1.25).min(2.0);
        }
    }
    let lo = t_before_best.max(opts.t_init);
    let mut hi = if t_after_best.is_nan() { t } else { t_after_best };
    hi = hi.min(opts.t_cap);
    if hi <= lo {
        hi = (lo + opts.dt).min(opts.t_cap).max(lo * (1.0 + 1e-9));
    }
    let (t_star, _) = golden_section_max(
        |tt| lap_solve_exponential(s1, s2, tt, alpha, &mut work).total_cost,
        lo,
        hi,
        1e-8,
    );
    let witness = lap_solve_exponential(s1, s2, t_star, alpha, &mut work);
    ScanResult {
        value_squared: witness.total_cost,
        t_star,
        alpha_star: alpha,
        matching: witness.assign,
        work,
    }
}

/// Fixed-basis kernel comparison for equal-size graphs: the squared gap
/// `sum e^{2t lam1} + sum e^{2t lam2} - 2 sum_ij w_ij e^{t(lam1_i + lam2_j)}`
/// with `w_ij` the squared eigenvector overlaps, maximized over `t` in
/// `[0, 10]`. Returns the squared peak and its location.
pub(crate) fn hammond_scan(g1: &Graph, g2: &Graph) -> Result<(f64, f64), crate::Error> {
    if g1.n() != g2.n() {
        return Err(crate::Error::SizeMismatch {
            n1: g1.n(),
            n2: g2.n(),
        });
    }
    let d1 = decompose(&laplacian(g1));
    let d2 = decompose(&laplacian(g2));
    let n = g1.n();
    let v1 = d1.spectrum.values().to_vec();
    let v2 = d2.spectrum.values().to_vec();
    let mut overlap = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            let mut dot = 0.0;
            for v in 0..n {
                dot += d1.vectors.get(v, i) * d2.vectors.get(v, j);
            }
            overlap[i * n + j] = dot * dot;
        }
    }
    let g = |t: f64| {
        let mut s = 0.0;
        for &l in &v1 {
            s += (2.0 * t * l).exp();
        }
        for &l in &v2 {
            s += (2.0 * t * l).exp();
        }
        for i in 0..n {
            for j in 0..n {
                s -= 2.0 * overlap[i * n + j] * (t * (v1[i] + v2[j])).exp();
            }
        }
        s
    };
    let (t_star, peak) = golden_section_max(g, 0.0, 10.0, 1e-12);
    Ok((peak.max(0.0), t_star))
}
