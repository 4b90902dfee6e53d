//! Rectangular linear assignment: choose one distinct row for every column of
//! an `n_rows x n_cols` cost matrix (`n_cols <= n_rows`) minimizing total
//! cost. Solved by shortest augmenting paths with dual potentials; after k
//! augmentations the matching is a minimum-cost matching of size k, so
//! leaving the virtual zero-cost padding columns unassigned is exact.

/// Dense row-major cost matrix with `n_cols <= n_rows`. Entries must be
/// finite and nonnegative.
#[derive(Clone, Debug)]
pub struct CostMatrix {
    n_rows: usize,
    n_cols: usize,
    data: Vec<f64>,
}

impl CostMatrix {
    pub fn new(n_rows: usize, n_cols: usize, data: Vec<f64>) -> Self {
        assert!(n_cols <= n_rows, "cost matrix needs n_cols <= n_rows");
        assert_eq!(data.len(), n_rows * n_cols, "cost data has wrong length");
        assert!(
            data.iter().all(|v| v.is_finite()),
            "cost entries must be finite"
        );
        CostMatrix {
            n_rows,
            n_cols,
            data,
        }
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.n_cols + col]
    }
}

/// Accounting for assignment effort in a single elementary-operation scale.
///
/// Every dense [`solve_rlap`] call grows `units` by `n_rows^3` — the cubic
/// cost of the zero-padded square problem — and the banded
/// increasing-assignment pass inside frontier probes grows it by
/// `cols * rows`, the number of cells its single dynamic-programming sweep
/// touches. `calls` counts solved subproblems of either kind. Comparing two
/// counters therefore compares actual arithmetic performed, not numbers of
/// invocations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct WorkCounter {
    pub units: u64,
    pub calls: u64,
}

impl WorkCounter {
    pub fn absorb(&mut self, other: &WorkCounter) {
        self.units += other.units;
        self.calls += other.calls;
    }
}

/// `assign[j]` is the row chosen for column `j`; rows are distinct.
#[derive(Clone, Debug, PartialEq)]
pub struct Assignment {
    pub assign: Vec<usize>,
    pub total_cost: f64,
}

/// Minimum-cost injective assignment of columns to rows. Deterministic:
/// ties are broken by scan order, never by anything address- or hash-based.
pub fn solve_rlap(c: &CostMatrix, work: &mut WorkCounter) -> Assignment {
    let nr = c.n_rows();
    let nc = c.n_cols();
    work.units += (nr as u64).pow(3);
    work.calls += 1;

    // Augmenting-path assignment with potentials, 1-based with column 0 as
    // the virtual start. "Items" are the (small side) columns, "slots" the
    // rows. p[s] = column currently matched to row s, 0 = free.
    const FREE: usize = 0;
    let mut u = vec![0.0f64; nc + 1];
    let mut v = vec![0.0f64; nr + 1];
    let mut p = vec![FREE; nr + 1];
    let mut way = vec![0usize; nr + 1];

    for col in 1..=nc {
        p[0] = col;
        let mut s0 = 0usize; // current row in the alternating tree (0 = virtual)
        let mut minv = vec![f64::INFINITY; nr + 1];
        let mut used = vec![false; nr + 1];
        loop {
            used[s0] = true;
            let c0 = p[s0];
            let mut delta = f64::INFINITY;
            let mut s1 = 0usize;
            for s in 1..=nr {
                if used[s] {
                    continue;
                }
                let cur = c.get(s - 1, c0 - 1) - u[c0] - v[s];
                if cur < minv[s] {
                    minv[s] = cur;
                    way[s] = s0;
                }
                if minv[s] < delta {
                    delta = minv[s];
                    s1 = s;
                }
            }
            debug_assert!(s1 != 0, "augmenting path search exhausted all rows");
            for s in 0..=nr {
                if used[s] {
                    u[p[s]] += delta;
                    v[s] -= delta;
                } else {
                    minv[s] -= delta;
                }
            }
            s0 = s1;
            if p[s0] == FREE {
                break;
            }
        }
        // Flip the alternating path back to the virtual start.
        loop {
            let s1 = way[s0];
            p[s0] = p[s1];
            s0 = s1;
            if s0 == 0 {
                break;
            }
        }
    }

    let mut assign = vec![usize::MAX; nc];
    for s in 1..=nr {
        if p[s] != FREE {
            assign[p[s] - 1] = s - 1;
        }
    }
    debug_assert!(assign.iter().all(|&r| r != usize::MAX));
    let total_cost = assign
        .iter()
        .enumerate()
        .map(|(j, &r)| c.get(r, j))
        .sum();
    Assignment { assign, total_cost }
}
