//! Linear distance: per-matching cost curves in the scale parameter, exact
//! assignment solves at a fixed scale, and the lower-envelope (frontier)
//! construction that tracks every optimal matching across a scale window.
//!
//! For a fixed matching m the squared objective is
//!
//! ```text
//! f(alpha) = b / alpha^2 + a * alpha^2 - c
//! a = sum_j lam2[m(j)]^2,  b = sum_j lam1[j]^2,  c = 2 sum_j lam1[j] lam2[m(j)]
//! ```
//!
//! All matchings of one graph pair share `b`, so two curves cross at most once
//! on alpha > 0. The frontier exploits that: starting from the two matchings
//! that are optimal in the small- and large-alpha limits, it recursively
//! solves a constrained assignment at each curve crossing and either closes
//! the interval or splits it at a newly discovered matching.

use std::collections::BTreeSet;

use crate::assignment::{solve_rlap, Assignment, CostMatrix, WorkCounter};
use crate::spectra::Spectrum;

/// Coefficients of one matching's cost curve `f(alpha) = b/alpha^2 + a*alpha^2 - c`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CostCoeffs {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl CostCoeffs {
    pub fn eval(&self, alpha: f64) -> f64 {
        self.b / (alpha * alpha) + self.a * alpha * alpha - self.c
    }

    /// Unconstrained argmin `(b/a)^(1/4)`. Degenerate curves keep their
    /// limiting conventions: infinity when only `b` drives the cost (the
    /// curve keeps falling), zero when only `a` does, one when the curve is
    /// constant.
    pub fn alpha_opt(&self) -> f64 {
        if self.a == 0.0 && self.b == 0.0 {
            1.0
        } else {
            (self.b / self.a).powf(0.25)
        }
    }

    /// Unconstrained minimum `2 sqrt(a b) - c`.
    pub fn min_value(&self) -> f64 {
        2.0 * (self.a * self.b).sqrt() - self.c
    }
}

/// Curve coefficients of `matching` for the spectra pair (smaller first).
pub fn cost_coeffs(matching: &[usize], s1: &Spectrum, s2: &Spectrum) -> CostCoeffs {
    let v1 = s1.values();
    let v2 = s2.values();
    let mut a = 0.0;
    let mut b = 0.0;
    let mut c = 0.0;
    for (j, &i) in matching.iter().enumerate() {
        let l1 = v1[j];
        let l2 = v2[i];
        a += l2 * l2;
        b += l1 * l1;
        c += 2.0 * l1 * l2;
    }
    CostCoeffs { a, b, c }
}

/// Positive crossing of two curves from the same pair, if one exists.
///
/// Curves of one pair share `b`, so the difference is `(a1 - a2) alpha^2 -
/// (c1 - c2)` and the crossing satisfies `alpha^2 = (c1 - c2) / (a1 - a2)`.
/// Near-parallel curves and non-positive squared roots yield `None`.
pub fn crossing_alpha(c1: &CostCoeffs, c2: &CostCoeffs) -> Option<f64> {
    let da = c1.a - c2.a;
    if da.abs() <= 1e-12 * c1.a.abs().max(c2.a.abs()).max(1.0) {
        return None;
    }
    let u = (c1.c - c2.c) / da;
    if u.is_finite() && u > 0.0 {
        Some(u.sqrt())
    } else {
        None
    }
}

/// Sorts the assigned rows ascending and recomputes the total.
///
/// For costs of the form `(x_j - y_i)^2` with both coordinate lists sorted
/// ascending, any optimal assignment stays optimal after sorting its rows
/// (an adjacent swap toward sorted order never increases the cost), so the
/// sorted form is a canonical representative the frontier can deduplicate on.
pub(crate) fn canonicalize<F: Fn(usize, usize) -> f64>(a: &mut Assignment, cost: F) {
    a.assign.sort_unstable();
    a.total_cost = a.assign.iter().enumerate().map(|(j, &i)| cost(i, j)).sum();
}

/// Optimal matching at one fixed scale, in canonical (sorted-rows) form.
pub fn lap_solve_linear(
    s1: &Spectrum,
    s2: &Spectrum,
    alpha: f64,
    work: &mut WorkCounter,
) -> Assignment {
    let v1 = s1.values();
    let v2 = s2.values();
    let (n1, n2) = (v1.len(), v2.len());
    let cost = |i: usize, j: usize| {
        let d = v1[j] / alpha - alpha * v2[i];
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

/// Result of probing the crossing of two frontier curves.
#[derive(Clone, Debug)]
pub enum MergeOutcome {
    /// No third matching separates the pair on this interval. `crossing`
    /// carries the curves' crossing point when it lies inside the interval.
    Closed { crossing: Option<f64> },
    /// The constrained assignment at the crossing found a cheaper matching.
    New { crossing: f64, matching: Vec<usize> },
}

/// Probes the crossing of `m1` and `m2` inside `interval`.
///
/// Assignments the two matchings agree on are kept fixed, and every other
/// column is restricted to the rows lying between its two endpoint
/// assignments; the reduced problem is re-solved at the crossing point. Both
/// reductions are lossless. The costs are Monge on the sorted spectra (for
/// rows `i < i'` and columns `j < j'` the cross difference factors as
/// `-2 (u_j - u_j')(v_i - v_i') <= 0` with `u_j = l1_j / x`,
/// `v_i = x l2_i`, both nondecreasing), so canonical optima move
/// monotonically with the scale: an optimum at an interior scale preserves
/// the endpoints' common pairs and lies elementwise between them. The row
/// restriction is what keeps probe sizes shrinking as the recursion
/// descends, instead of paying for every unmatched row of the larger
/// spectrum on every probe.
pub fn merge_solutions(
    m1: &[usize],
    m2: &[usize],
    s1: &Spectrum,
    s2: &Spectrum,
    interval: (f64, f64),
    work: &mut WorkCounter,
) -> MergeOutcome {
    let c1 = cost_coeffs(m1, s1, s2);
    let c2 = cost_coeffs(m2, s1, s2);
    let x = match crossing_alpha(&c1, &c2) {
        Some(x) if x > interval.0 && x < interval.1 => x,
        _ => return MergeOutcome::Closed { crossing: None },
    };
    let v1 = s1.values();
    let v2 = s2.values();
    let (n1, n2) = (v1.len(), v2.len());
    let agreed: Vec<bool> = (0..n1).map(|j| m1[j] == m2[j]).collect();
    let pinned: BTreeSet<usize> = (0..n1).filter(|&j| agreed[j]).map(|j| m1[j]).collect();
    let cols: Vec<usize> = (0..n1).filter(|&j| !agreed[j]).collect();
    let cost = |i: usize, j: usize| {
        let d = v1[j] / x - x * v2[i];
        d * d
    };
    // Candidate band per disagreeing column. The worklist hands the
    // lower-scale optimum first, so the bands are ordered by construction;
    // if a tie artifact ever breaks that orientation, fall back to the full
    // row range, which stays correct and merely costs more.
    let ordered = cols.iter().all(|&j| m1[j] <= m2[j]);
    let band = |j: usize| if ordered { (m1[j], m2[j]) } else { (0, n2 - 1) };
    let mut merged = m1.to_vec();
    // The reduced problem is an assignment with staircase structure: band
    // endpoints are nondecreasing across columns, and the costs are Monge,
    // so some optimal assignment takes strictly increasing rows. That makes
    // exhaustive search unnecessary — a prefix-minimum dynamic program over
    // (column, row) finds an exact optimum in one pass, touching each of the
    // cols × rows cells once. Work is charged at that true cost; see
    // [`WorkCounter`](crate::WorkCounter).
    if !cols.is_empty() {
        let blo = band(cols[0]).0;
        let bhi = cols.iter().map(|&j| band(j).1).max().unwrap();
        let rows: Vec<usize> = (blo..=bhi).filter(|i| !pinned.contains(i)).collect();
        let (d, r) = (cols.len(), rows.len());
        // dp[k*r + i]: best cost assigning cols[..=k] with cols[k] -> rows[i].
        let mut dp = vec![f64::INFINITY; d * r];
        // Running argmin over the previous layer's strict prefix, recorded
        // per cell for backtracking.
        let mut from = vec![usize::MAX; d * r];
        for k in 0..d {
            let j = cols[k];
            let (lo, hi) = band(j);
            let mut best = f64::INFINITY;
            let mut best_i = usize::MAX;
            for i in 0..r {
                if k > 0 && i > 0 {
                    let cand = dp[(k - 1) * r + (i - 1)];
                    if cand < best {
                        best = cand;
                        best_i = i - 1;
                    }
                }
                let row = rows[i];
                if row < lo || row > hi {
                    continue;
                }
                if k == 0 {
                    dp[i] = cost(row, j);
                } else if best.is_finite() {
                    dp[k * r + i] = best + cost(row, j);
                    from[k * r + i] = best_i;
                }
            }
        }
        let last = &dp[(d - 1) * r..];
        let mut i = (0..r)
            .min_by(|&a, &b| last[a].total_cmp(&last[b]))
            .expect("assigning every column to its low-end row is feasible");
        debug_assert!(last[i].is_finite());
        for k in (0..d).rev() {
            merged[cols[k]] = rows[i];
            i = from[k * r + i];
        }
        work.units += (d as u64) * (r as u64);
        work.calls += 1;
    }
    merged.sort_unstable();
    if merged == m1 || merged == m2 {
        MergeOutcome::Closed { crossing: Some(x) }
    } else {
        MergeOutcome::New {
            crossing: x,
            matching: merged,
        }
    }
}

/// One matching retained by the frontier, with its curve coefficients.
#[derive(Clone, Debug)]
pub struct FrontierEntry {
    pub matching: Vec<usize>,
    pub coeffs: CostCoeffs,
}

/// One maximal interval of the window owned by a single entry.
#[derive(Clone, Copy, Debug)]
pub struct Segment {
    pub lo: f64,
    pub hi: f64,
    pub entry: usize,
}

/// Lower envelope of the matching cost curves over a scale window.
#[derive(Clone, Debug)]
pub struct Frontier {
    pub entries: Vec<FrontierEntry>,
    pub segments: Vec<Segment>,
    pub window: (f64, f64),
    pub work: WorkCounter,
}

impl Frontier {
    /// Envelope value at one scale: the minimum over every retained curve.
    pub fn hull_value(&self, alpha: f64) -> f64 {
        self.entries
            .iter()
            .map(|e| e.coeffs.eval(alpha))
            .fold(f64::INFINITY, f64::min)
    }

    /// Interior stationary minima of the envelope: segment owners whose
    /// unconstrained argmin falls inside the segment they own.
    pub fn local_minima(&self) -> Vec<(usize, f64)> {
        let mut out: Vec<(usize, f64)> = Vec::new();
        for seg in &self.segments {
            let opt = self.entries[seg.entry].coeffs.alpha_opt();
            if opt.is_finite()
                && opt >= seg.lo
                && opt <= seg.hi
                && !out
                    .iter()
                    .any(|&(k, a)| k == seg.entry && (a - opt).abs() <= 1e-12 * opt.max(1.0))
            {
                out.push((seg.entry, opt));
            }
        }
        out
    }
}

/// Whether two canonical matchings select the same matched-value sequence.
///
/// A matching's cost curve is determined entirely by the values it matches,
/// so assignments that differ only in which of several (near-)equal rows of
/// the larger spectrum they pick are the same curve. Spectra of structured
/// graphs carry heavy multiplicities, and deduplicating by raw index vector
/// would retain thousands of such twins; comparing matched values collapses
/// them to one representative without moving any curve by more than the
/// comparison tolerance.
pub(crate) fn same_curve(m1: &[usize], m2: &[usize], s2: &Spectrum) -> bool {
    let v = s2.values();
    m1.len() == m2.len()
        && m1.iter().zip(m2).all(|(&i, &j)| {
            let (x, y) = (v[i], v[j]);
            (x - y).abs() <= 1e-9 * x.abs().max(y.abs()).max(1.0)
        })
}

fn add_entry(
    entries: &mut Vec<FrontierEntry>,
    matching: Vec<usize>,
    s1: &Spectrum,
    s2: &Spectrum,
) -> usize {
    if let Some(k) = entries
        .iter()
        .position(|e| same_curve(&e.matching, &matching, s2))
    {
        return k;
    }
    let coeffs = cost_coeffs(&matching, s1, s2);
    entries.push(FrontierEntry { matching, coeffs });
    entries.len() - 1
}

/// Splits `[lo, hi]` at `x` and assigns each side to whichever of the two
/// curves is lower at the side's geometric midpoint.
fn push_split(
    segments: &mut Vec<Segment>,
    entries: &[FrontierEntry],
    e1: usize,
    e2: usize,
    lo: f64,
    x: f64,
    hi: f64,
) {
    for (a, b) in [(lo, x), (x, hi)] {
        let mid = (a * b).sqrt();
        let owner = if entries[e1].coeffs.eval(mid) <= entries[e2].coeffs.eval(mid) {
            e1
        } else {
            e2
        };
        segments.push(Segment {
            lo: a,
            hi: b,
            entry: owner,
        });
    }
}

fn drain_worklist(
    worklist: &mut Vec<(usize, usize, (f64, f64))>,
    entries: &mut Vec<FrontierEntry>,
    segments: &mut Vec<Segment>,
    s1: &Spectrum,
    s2: &Spectrum,
    work: &mut WorkCounter,
) {
    let n2 = s2.values().len();
    // crossings are drawn from a finite set and intervals shrink strictly, so
    // the recursion terminates; the cap only guards against degenerate float
    // ping-pong and keeps the segments a covering if it ever trips
    let mut budget = 1000 + 40 * n2 * n2;
    while let Some((e1, e2, (lo, hi))) = worklist.pop() {
        if budget == 0 {
            push_split(segments, entries, e1, e2, lo, (lo * hi).sqrt(), hi);
            continue;
        }
        budget -= 1;
        let m1 = entries[e1].matching.clone();
        let m2 = entries[e2].matching.clone();
        match merge_solutions(&m1, &m2, s1, s2, (lo, hi), work) {
            MergeOutcome::Closed { crossing: None } => {
                let mid = (lo * hi).sqrt();
                let owner = if entries[e1].coeffs.eval(mid) <= entries[e2].coeffs.eval(mid) {
                    e1
                } else {
                    e2
                };
                segments.push(Segment {
                    lo,
                    hi,
                    entry: owner,
                });
            }
            MergeOutcome::Closed { crossing: Some(x) } => {
                push_split(segments, entries, e1, e2, lo, x, hi);
            }
            MergeOutcome::New {
                crossing: x,
                matching,
            } => {
                let k = add_entry(entries, matching, s1, s2);
                if k == e1 || k == e2 {
                    // numerically indistinct rediscovery; treat as closed
                    push_split(segments, entries, e1, e2, lo, x, hi);
                } else {
                    worklist.push((e1, k, (lo, x)));
                    worklist.push((k, e2, (x, hi)));
                }
            }
        }
    }
}

/// Builds the exact lower envelope over `window` for the pair `(s1, s2)`
/// with `s1` no longer than `s2`.
///
/// Seeds are the two limit optima, which need no assignment solve: as the
/// scale vanishes the objective is dominated by the smaller spectrum's terms
/// and any alignment of the most negative rows is optimal, so `[0..n1)` is
/// used; as the scale grows the larger spectrum dominates and the least
/// negative rows `[n2-n1..n2)` win. Every other retained matching is
/// discovered by a constrained solve at a curve crossing.
pub fn linear_frontier(s1: &Spectrum, s2: &Spectrum, window: (f64, f64)) -> Frontier {
    let n1 = s1.values().len();
    let n2 = s2.values().len();
    assert!(n1 >= 1 && n1 <= n2, "spectra must be ordered by size");
    assert!(
        window.0 > 0.0 && window.0 < window.1,
        "scale window must be positive and nonempty"
    );
    let mut work = WorkCounter::default();
    let mut entries: Vec<FrontierEntry> = Vec::new();
    let mut segments: Vec<Segment> = Vec::new();
    let e_low = add_entry(&mut entries, (0..n1).collect(), s1, s2);
    let e_high = add_entry(&mut entries, (n2 - n1..n2).collect(), s1, s2);
    if e_low == e_high {
        segments.push(Segment {
            lo: window.0,
            hi: window.1,
            entry: e_low,
        });
    } else {
        let mut worklist = vec![(e_low, e_high, window)];
        drain_worklist(&mut worklist, &mut entries, &mut segments, s1, s2, &mut work);
    }
    segments.sort_by(|x, y| x.lo.partial_cmp(&y.lo).unwrap());
    Frontier {
        entries,
        segments,
        window,
        work,
    }
}
