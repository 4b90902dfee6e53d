//! Seeded, parallelizable experiment runs emitting versioned CSV.
//!
//! Every experiment is deterministic for a fixed configuration: rows derive
//! from per-row RNG streams (never from a shared sequential stream), results
//! are collected in index order, and reductions fold in that order, so
//! serial and parallel runs produce byte-identical files.

use graphdiff_core::assignment::WorkCounter;
use graphdiff_core::bounds::{
    product_special_case_bound, product_upper_bound, ProductBoundInputs,
};
use graphdiff_core::expdist::lap_solve_exponential;
use graphdiff_core::graph::{lineage_member, random_bernoulli_graph, LineageFamily};
use graphdiff_core::linear::{lap_solve_linear, linear_frontier};
use graphdiff_core::optim::golden_section_min;
use graphdiff_core::{
    exp_distance, exp_distance_with, exp_fixed_alpha_distance, fixed_alpha_linear_distance,
    linear_distance, ordered_spectra, tsgdd, ExpOptions, Graph, ALPHA_WINDOW,
};
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::csv::{fmt_float, Csv};
use crate::CliError;

/// Runs `f` on a dedicated rayon pool with the requested thread count
/// (0 = rayon's default). Output never depends on scheduling, so any count
/// yields the same bytes.
pub fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("building a thread pool cannot fail for sane thread counts");
    pool.install(f)
}

/// Per-row seed stream: decorrelates rows of one run while keeping every
/// row reproducible in isolation.
fn row_seed(seed: u64, i: usize) -> u64 {
    seed.wrapping_mul(1_000_003).wrapping_add(i as u64)
}

/// Distance variant used inside an experiment run.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RunVariant {
    Linear,
    LinearFixed { alpha: f64 },
    Tsgdd { r: f64 },
    Exp,
    ExpFixed { alpha: f64 },
}

impl RunVariant {
    pub fn name(&self) -> &'static str {
        match self {
            RunVariant::Linear => "linear",
            RunVariant::LinearFixed { .. } => "linear-fixed",
            RunVariant::Tsgdd { .. } => "tsgdd",
            RunVariant::Exp => "exp",
            RunVariant::ExpFixed { .. } => "exp-fixed",
        }
    }

    /// Distance value (square root of the optimized squared objective).
    pub fn distance(&self, g1: &Graph, g2: &Graph) -> f64 {
        match *self {
            RunVariant::Linear => linear_distance(g1, g2).value,
            RunVariant::LinearFixed { alpha } => {
                fixed_alpha_linear_distance(g1, g2, alpha).value
            }
            RunVariant::Tsgdd { r } => tsgdd(g1, g2, r).value,
            RunVariant::Exp => exp_distance(g1, g2).value,
            RunVariant::ExpFixed { alpha } => exp_fixed_alpha_distance(g1, g2, alpha).value,
        }
    }
}

/// Which graph of a sampled triplet sits in the middle of the discrepancy
/// ratio: order `abc` reads as endpoints `a`, `c` with `b` between them,
/// giving `d(a, c) / (d(a, b) + d(b, c))`. Distances are symmetric, so 321
/// coincides with 123; it is kept so histogram configurations can name all
/// three rotations explicitly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TripletOrder {
    O123,
    O213,
    O321,
}

impl TripletOrder {
    pub fn name(&self) -> &'static str {
        match self {
            TripletOrder::O123 => "123",
            TripletOrder::O213 => "213",
            TripletOrder::O321 => "321",
        }
    }
}

/// Configuration of the triplet census.
#[derive(Clone, Debug)]
pub struct TripletConfig {
    pub count: usize,
    pub seed: u64,
    pub p_list: Vec<f64>,
    pub variant: RunVariant,
    pub order: TripletOrder,
    pub jobs: usize,
}

/// One census row: the sampled triplet, its three pairwise distances, and
/// the triangle-inequality discrepancy ratio. `disc` is NaN (and
/// `degenerate` true) when the denominator is zero.
#[derive(Clone, Debug)]
pub struct TripletRow {
    pub index: usize,
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
    pub p: f64,
    pub seed: u64,
    pub d12: f64,
    pub d23: f64,
    pub d13: f64,
    pub disc: f64,
    pub degenerate: bool,
}

fn census_row(cfg: &TripletConfig, i: usize) -> TripletRow {
    let seed = row_seed(cfg.seed, i);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n1 = rng.gen_range(5..=30usize);
    let n2 = rng.gen_range(n1..=n1 + 30);
    let n3 = rng.gen_range(n2..=n2 + 30);
    let p = cfg.p_list[i % cfg.p_list.len()];
    let g1 = random_bernoulli_graph(n1, p, rng.next_u64());
    let g2 = random_bernoulli_graph(n2, p, rng.next_u64());
    let g3 = random_bernoulli_graph(n3, p, rng.next_u64());
    let d12 = cfg.variant.distance(&g1, &g2);
    let d23 = cfg.variant.distance(&g2, &g3);
    let d13 = cfg.variant.distance(&g1, &g3);
    let (num, den) = match cfg.order {
        TripletOrder::O123 => (d13, d12 + d23),
        TripletOrder::O213 => (d23, d12 + d13),
        TripletOrder::O321 => (d13, d23 + d12),
    };
    let degenerate = den == 0.0;
    let disc = if degenerate { f64::NAN } else { num / den };
    TripletRow {
        index: i,
        n1,
        n2,
        n3,
        p,
        seed,
        d12,
        d23,
        d13,
        disc,
        degenerate,
    }
}

/// Seeded census of triangle-inequality discrepancies over random
/// graph triplets with sizes n1 in [5,30], n2 in [n1, n1+30],
/// n3 in [n2, n2+30].
pub fn triplet_census(cfg: &TripletConfig) -> Vec<TripletRow> {
    with_pool(cfg.jobs, || {
        (0..cfg.count)
            .into_par_iter()
            .map(|i| census_row(cfg, i))
            .collect()
    })
}

/// Aggregate statistics over the non-degenerate census rows.
#[derive(Clone, Copy, Debug)]
pub struct CensusStats {
    pub total: usize,
    pub valid: usize,
    /// Fraction of valid rows with disc <= 1 + 1e-9.
    pub frac_within_triangle: f64,
    /// Largest discrepancy over valid rows (NaN when none are valid).
    pub max_disc: f64,
}

pub fn census_stats(rows: &[TripletRow]) -> CensusStats {
    let valid: Vec<f64> = rows
        .iter()
        .filter(|r| !r.degenerate)
        .map(|r| r.disc)
        .collect();
    let within = valid.iter().filter(|&&d| d <= 1.0 + 1e-9).count();
    CensusStats {
        total: rows.len(),
        valid: valid.len(),
        frac_within_triangle: if valid.is_empty() {
            f64::NAN
        } else {
            within as f64 / valid.len() as f64
        },
        max_disc: valid.iter().copied().fold(f64::NAN, f64::max),
    }
}

pub fn census_csv(cfg: &TripletConfig, rows: &[TripletRow]) -> String {
    let mut csv = Csv::new(&[
        "i",
        "n1",
        "n2",
        "n3",
        "p",
        "seed",
        "d12",
        "d23",
        "d13",
        "disc",
        "degenerate",
    ]);
    for r in rows {
        csv.push_row(vec![
            r.index.to_string(),
            r.n1.to_string(),
            r.n2.to_string(),
            r.n3.to_string(),
            r.p.to_string(),
            r.seed.to_string(),
            fmt_float(r.d12),
            fmt_float(r.d23),
            fmt_float(r.d13),
            fmt_float(r.disc),
            (r.degenerate as u8).to_string(),
        ]);
    }
    let st = census_stats(rows);
    csv.push_summary(format!(
        "variant={} order={} seed={} rows={} valid={}",
        cfg.variant.name(),
        cfg.order.name(),
        cfg.seed,
        st.total,
        st.valid
    ));
    csv.push_summary(format!(
        "frac_disc_le_1={} max_disc={}",
        fmt_float(st.frac_within_triangle),
        fmt_float(st.max_disc)
    ));
    csv.render()
}

/// Row/column order of the lineage table.
pub const LINEAGE_FAMILIES: [LineageFamily; 4] = [
    LineageFamily::SquareGrid,
    LineageFamily::Path,
    LineageFamily::Cycle,
    LineageFamily::MultiBarbell,
];

/// The `i`-th table member of a family, sized so all four families have
/// matched vertex counts at each index: grids and multi-barbells take their
/// natural index (i^2 vertices), paths and cycles take index i^2. Returns
/// None where the family has no such member (cycles need i^2 >= 3,
/// multi-barbells i >= 3).
pub fn table_member(family: LineageFamily, i: usize) -> Option<Graph> {
    let n = match family {
        LineageFamily::SquareGrid | LineageFamily::MultiBarbell => i,
        LineageFamily::Path | LineageFamily::Cycle => i * i,
    };
    lineage_member(family, n).ok()
}

/// One cell of the lineage table: means over valid indices `i` of the
/// distance between member `i` of family A and member `i+1` of family B.
#[derive(Clone, Debug)]
pub struct LineageCell {
    pub family_a: LineageFamily,
    pub family_b: LineageFamily,
    pub pairs: usize,
    pub mean_d: f64,
    pub mean_d2: f64,
}

/// Computes all 16 cells of the lineage table over indices 1..=max_index.
pub fn lineage_table(max_index: usize, jobs: usize) -> Vec<LineageCell> {
    let mut tasks: Vec<(usize, Graph, Graph)> = Vec::new();
    for (ai, &fa) in LINEAGE_FAMILIES.iter().enumerate() {
        for (bi, &fb) in LINEAGE_FAMILIES.iter().enumerate() {
            for i in 1..=max_index {
                if let (Some(a), Some(b)) = (table_member(fa, i), table_member(fb, i + 1)) {
                    tasks.push((ai * LINEAGE_FAMILIES.len() + bi, a, b));
                }
            }
        }
    }
    let results: Vec<(usize, f64, f64)> = with_pool(jobs, || {
        tasks
            .into_par_iter()
            .map(|(cell, a, b)| {
                let r = exp_distance(&a, &b);
                (cell, r.value, r.value_squared)
            })
            .collect()
    });
    let mut cells: Vec<LineageCell> = LINEAGE_FAMILIES
        .iter()
        .flat_map(|&fa| {
            LINEAGE_FAMILIES.iter().map(move |&fb| LineageCell {
                family_a: fa,
                family_b: fb,
                pairs: 0,
                mean_d: 0.0,
                mean_d2: 0.0,
            })
        })
        .collect();
    for (cell, d, d2) in results {
        cells[cell].pairs += 1;
        cells[cell].mean_d += d;
        cells[cell].mean_d2 += d2;
    }
    for c in &mut cells {
        if c.pairs > 0 {
            c.mean_d /= c.pairs as f64;
            c.mean_d2 /= c.pairs as f64;
        } else {
            c.mean_d = f64::NAN;
            c.mean_d2 = f64::NAN;
        }
    }
    cells
}

pub fn lineage_csv(max_index: usize, cells: &[LineageCell]) -> String {
    let mut csv = Csv::new(&["family_a", "family_b", "pairs", "mean_d", "mean_d2"]);
    for c in cells {
        csv.push_row(vec![
            c.family_a.as_str().to_string(),
            c.family_b.as_str().to_string(),
            c.pairs.to_string(),
            fmt_float(c.mean_d),
            fmt_float(c.mean_d2),
        ]);
    }
    csv.push_summary(format!("max_index={max_index} distance=exp"));
    csv.render()
}

/// One row of the convergence sweep: the distance between member `n` of
/// family A and member `n+1` of family B, with its optimizing scale and
/// diffusion time.
#[derive(Clone, Debug)]
pub struct ConvergeRow {
    pub n: usize,
    pub value: f64,
    pub value_squared: f64,
    pub alpha_star: f64,
    pub t_star: f64,
}

/// Sweeps `n` over `n_lo..=n_hi`, comparing member `n` of `family_a` with
/// member `n+1` of `family_b` under the exponential distance.
pub fn convergence_sweep(
    family_a: LineageFamily,
    family_b: LineageFamily,
    n_lo: usize,
    n_hi: usize,
    opts: &ExpOptions,
    jobs: usize,
) -> Result<Vec<ConvergeRow>, CliError> {
    if n_lo > n_hi {
        return Err(CliError::Invalid(format!(
            "empty sweep range: n-lo {n_lo} exceeds n-hi {n_hi}"
        )));
    }
    lineage_member(family_a, n_lo).map_err(|e| CliError::Invalid(e.to_string()))?;
    lineage_member(family_b, n_lo + 1).map_err(|e| CliError::Invalid(e.to_string()))?;
    Ok(with_pool(jobs, || {
        (n_lo..=n_hi)
            .into_par_iter()
            .map(|n| {
                let a = lineage_member(family_a, n).expect("validated at the range start");
                let b = lineage_member(family_b, n + 1).expect("validated at the range start");
                let r = exp_distance_with(&a, &b, opts);
                ConvergeRow {
                    n,
                    value: r.value,
                    value_squared: r.value_squared,
                    alpha_star: r.alpha_star.unwrap_or(f64::NAN),
                    t_star: r.t_star.unwrap_or(f64::NAN),
                }
            })
            .collect()
    }))
}

pub fn converge_csv(
    family_a: LineageFamily,
    family_b: LineageFamily,
    rows: &[ConvergeRow],
) -> String {
    let mut csv = Csv::new(&["n", "value", "value_squared", "alpha_star", "t_star"]);
    for r in rows {
        csv.push_row(vec![
            r.n.to_string(),
            fmt_float(r.value),
            fmt_float(r.value_squared),
            fmt_float(r.alpha_star),
            fmt_float(r.t_star),
        ]);
    }
    csv.push_summary(format!(
        "family_a={} family_b={} distance=exp",
        family_a.as_str(),
        family_b.as_str()
    ));
    if let (Some(first), Some(last)) = (rows.first(), rows.last()) {
        csv.push_summary(format!(
            "first_value={} last_value={} decline_ratio={}",
            fmt_float(first.value),
            fmt_float(last.value),
            fmt_float(last.value / first.value)
        ));
    }
    csv.render()
}

/// One row of the product-bound sweep over square grids.
///
/// `direct` is the exponential distance between the n- and (n+1)-grids, with
/// `t_star`/`alpha_star` its maximizing point. The companion columns bound
/// or approximate it from the path factors alone:
/// - `bound`: sum-of-norms combination anchored at (`t_star`, `alpha_star`),
///   the certified upper bound on `direct`;
/// - `bound_factor_opt`: the same combination anchored at the factor pair's
///   own optimum — cheaper to anchor but no longer certified against the
///   product's maximizing point;
/// - `special_case_min`: the aggressive min-norm combination at the factor
///   optimum, which can undershoot `direct` (kept for comparison).
#[derive(Clone, Debug)]
pub struct ProductBoundRow {
    pub n: usize,
    pub direct: f64,
    pub bound: f64,
    pub bound_factor_opt: f64,
    pub special_case_min: f64,
    pub t_star: f64,
    pub alpha_star: f64,
}

fn product_bound_row(n: usize) -> ProductBoundRow {
    let pa_a = lineage_member(LineageFamily::Path, n).expect("paths exist for n >= 1");
    let pa_b = lineage_member(LineageFamily::Path, n + 1).expect("paths exist for n >= 1");
    let sq_a = lineage_member(LineageFamily::SquareGrid, n).expect("grids exist for n >= 1");
    let sq_b = lineage_member(LineageFamily::SquareGrid, n + 1).expect("grids exist for n >= 1");

    let direct = exp_distance(&sq_a, &sq_b);
    let t_c = direct.t_star.expect("exponential distance always reports t");
    let alpha_c = direct
        .alpha_star
        .expect("exponential distance always reports alpha");

    // Certified anchoring: evaluate the factor witness at the product pair's
    // own maximizing point, where the restricted product distance equals the
    // supremum being bounded.
    let (s1, s2) = ordered_spectra(&pa_a, &pa_b);
    let mut work = WorkCounter::default();
    let p = lap_solve_exponential(&s1, &s2, t_c, alpha_c, &mut work).assign;
    let bound = product_upper_bound(&ProductBoundInputs {
        g1a: &pa_a,
        g1b: &pa_a,
        g2a: &pa_b,
        g2b: &pa_b,
        t_c,
        alpha_c,
        lambda: 0.5,
        p1: p.clone(),
        p2: p,
    });

    // Factor-optimum anchoring: reuse the factor pair's own maximizer.
    let fopt = exp_distance(&pa_a, &pa_b);
    let t_f = fopt.t_star.expect("exponential distance always reports t");
    let a_f = fopt
        .alpha_star
        .expect("exponential distance always reports alpha");
    let bound_factor_opt = product_upper_bound(&ProductBoundInputs {
        g1a: &pa_a,
        g1b: &pa_a,
        g2a: &pa_b,
        g2b: &pa_b,
        t_c: t_f,
        alpha_c: a_f,
        lambda: 0.5,
        p1: fopt.matching.clone(),
        p2: fopt.matching.clone(),
    });
    let special_case_min = product_special_case_bound(&pa_a, &pa_b, t_f, a_f);

    ProductBoundRow {
        n,
        direct: direct.value,
        bound,
        bound_factor_opt,
        special_case_min,
        t_star: t_c,
        alpha_star: alpha_c,
    }
}

/// Sweeps grid size `n` over `n_lo..=n_hi`, reporting the direct grid
/// distance next to its factor-based bound columns.
pub fn product_bound_sweep(
    n_lo: usize,
    n_hi: usize,
    jobs: usize,
) -> Result<Vec<ProductBoundRow>, CliError> {
    if n_lo < 1 {
        return Err(CliError::Invalid("n-lo must be at least 1".into()));
    }
    if n_lo > n_hi {
        return Err(CliError::Invalid(format!(
            "empty sweep range: n-lo {n_lo} exceeds n-hi {n_hi}"
        )));
    }
    Ok(with_pool(jobs, || {
        (n_lo..=n_hi)
            .into_par_iter()
            .map(product_bound_row)
            .collect()
    }))
}

pub fn product_bound_csv(rows: &[ProductBoundRow]) -> String {
    let mut csv = Csv::new(&[
        "n",
        "direct",
        "bound",
        "bound_factor_opt",
        "special_case_min",
        "t_star",
        "alpha_star",
    ]);
    for r in rows {
        csv.push_row(vec![
            r.n.to_string(),
            fmt_float(r.direct),
            fmt_float(r.bound),
            fmt_float(r.bound_factor_opt),
            fmt_float(r.special_case_min),
            fmt_float(r.t_star),
            fmt_float(r.alpha_star),
        ]);
    }
    let dominated = rows.iter().filter(|r| r.bound + 1e-9 >= r.direct).count();
    csv.push_summary(format!(
        "rows={} bound_dominates_direct={}",
        rows.len(),
        dominated
    ));
    csv.render()
}

/// Work comparison between the exact envelope construction and a
/// derivative-free baseline on the same pair.
#[derive(Clone, Debug)]
pub struct BaselineOutcome {
    pub frontier_value: f64,
    pub baseline_value: f64,
    pub frontier_work: WorkCounter,
    pub baseline_work: WorkCounter,
}

/// Runs the exact envelope construction, then replays the optimization the
/// way a derivative-free baseline would: one golden-section scale search per
/// envelope local minimum (bracket 0.618..1.618 times the minimizer), paying
/// a cold assignment solve per evaluation. Falls back to a single search
/// over the whole window when the envelope has no interior stationary
/// minimum.
pub fn golden_section_baseline(g1: &Graph, g2: &Graph) -> BaselineOutcome {
    let (s1, s2) = ordered_spectra(g1, g2);
    let frontier = linear_frontier(&s1, &s2, ALPHA_WINDOW);
    let frontier_value = frontier
        .entries
        .iter()
        .map(|e| e.coeffs.min_value())
        .fold(f64::INFINITY, f64::min)
        .max(0.0)
        .sqrt();

    let mut baseline_work = WorkCounter::default();
    let minima = frontier.local_minima();
    let (w_lo, w_hi) = ALPHA_WINDOW;
    let mut best = f64::INFINITY;
    if minima.is_empty() {
        let (_, v) = golden_section_min(
            |alpha| lap_solve_linear(&s1, &s2, alpha, &mut baseline_work).total_cost,
            w_lo,
            w_hi,
            1e-6 * (w_hi - w_lo),
        );
        best = v;
    } else {
        for (_, alpha_opt) in minima {
            let lo = (0.618 * alpha_opt).max(w_lo);
            let hi = (1.618 * alpha_opt).min(w_hi);
            let (_, v) = golden_section_min(
                |alpha| lap_solve_linear(&s1, &s2, alpha, &mut baseline_work).total_cost,
                lo,
                hi,
                1e-6 * alpha_opt,
            );
            best = best.min(v);
        }
    }
    BaselineOutcome {
        frontier_value,
        baseline_value: best.max(0.0).sqrt(),
        frontier_work: frontier.work,
        baseline_work,
    }
}

/// Configuration of the baseline work comparison over random pairs.
#[derive(Clone, Debug)]
pub struct BaselineConfig {
    pub count: usize,
    pub seed: u64,
    pub p_list: Vec<f64>,
    pub jobs: usize,
}

/// One row of the baseline experiment: the sampled pair, both optima, and
/// both work counters (in the elementary-operation scale of
/// [`graphdiff_core::assignment::WorkCounter`]).
#[derive(Clone, Debug)]
pub struct BaselineRow {
    pub index: usize,
    pub n1: usize,
    pub n2: usize,
    pub p: f64,
    pub seed: u64,
    pub frontier_value: f64,
    pub baseline_value: f64,
    pub frontier_units: u64,
    pub baseline_units: u64,
    pub speedup: f64,
}

/// Seeded baseline comparison over random pairs with n1 in [5,120] and
/// n2 in [n1, n1+60].
pub fn baseline_experiment(cfg: &BaselineConfig) -> Vec<BaselineRow> {
    with_pool(cfg.jobs, || {
        (0..cfg.count)
            .into_par_iter()
            .map(|i| {
                let seed = row_seed(cfg.seed, i);
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let n1 = rng.gen_range(5..=120usize);
                let n2 = rng.gen_range(n1..=n1 + 60);
                let p = cfg.p_list[i % cfg.p_list.len()];
                let g1 = random_bernoulli_graph(n1, p, rng.next_u64());
                let g2 = random_bernoulli_graph(n2, p, rng.next_u64());
                let out = golden_section_baseline(&g1, &g2);
                let speedup =
                    out.baseline_work.units as f64 / out.frontier_work.units.max(1) as f64;
                BaselineRow {
                    index: i,
                    n1,
                    n2,
                    p,
                    seed,
                    frontier_value: out.frontier_value,
                    baseline_value: out.baseline_value,
                    frontier_units: out.frontier_work.units,
                    baseline_units: out.baseline_work.units,
                    speedup,
                }
            })
            .collect()
    })
}

/// (every pair had frontier work <= baseline work, median speedup).
pub fn baseline_stats(rows: &[BaselineRow]) -> (bool, f64) {
    let all_le = rows.iter().all(|r| r.frontier_units <= r.baseline_units);
    let mut speedups: Vec<f64> = rows.iter().map(|r| r.speedup).collect();
    speedups.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let median = if speedups.is_empty() {
        f64::NAN
    } else if speedups.len() % 2 == 1 {
        speedups[speedups.len() / 2]
    } else {
        0.5 * (speedups[speedups.len() / 2 - 1] + speedups[speedups.len() / 2])
    };
    (all_le, median)
}

pub fn baseline_csv(cfg: &BaselineConfig, rows: &[BaselineRow]) -> String {
    let mut csv = Csv::new(&[
        "i",
        "n1",
        "n2",
        "p",
        "seed",
        "frontier_value",
        "baseline_value",
        "frontier_units",
        "baseline_units",
        "speedup",
    ]);
    for r in rows {
        csv.push_row(vec![
            r.index.to_string(),
            r.n1.to_string(),
            r.n2.to_string(),
            r.p.to_string(),
            r.seed.to_string(),
            fmt_float(r.frontier_value),
            fmt_float(r.baseline_value),
            r.frontier_units.to_string(),
            r.baseline_units.to_string(),
            fmt_float(r.speedup),
        ]);
    }
    let (all_le, median) = baseline_stats(rows);
    csv.push_summary(format!(
        "seed={} rows={} all_frontier_le_baseline={} median_speedup={}",
        cfg.seed,
        rows.len(),
        all_le as u8,
        fmt_float(median)
    ));
    csv.render()
}
