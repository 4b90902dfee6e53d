//! Shared helpers for the integration test suites.
#![allow(dead_code)]

use graphdiff_core::graph::{lineage_member, Graph, LineageFamily};
use graphdiff_core::spectra::{decompose, Spectrum};

pub fn path(n: usize) -> Graph {
    lineage_member(LineageFamily::Path, n).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    lineage_member(LineageFamily::Cycle, n).unwrap()
}

pub fn square_grid(n: usize) -> Graph {
    lineage_member(LineageFamily::SquareGrid, n).unwrap()
}

pub fn multi_barbell(n: usize) -> Graph {
    lineage_member(LineageFamily::MultiBarbell, n).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for i in 0..n {
        for j in (i + 1)..n {
            g.add_edge(i, j);
        }
    }
    g
}

pub fn spectrum_of(g: &Graph) -> Spectrum {
    decompose(&graphdiff_core::graph::laplacian(g)).spectrum
}

/// |a - b| <= tol * max(1, |a|, |b|)
pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * 1f64.max(a.abs()).max(b.abs())
}

pub fn assert_close(a: f64, b: f64, tol: f64, what: &str) {
    assert!(
        close(a, b, tol),
        "{what}: {a} vs {b} (diff {})",
        (a - b).abs()
    );
}
