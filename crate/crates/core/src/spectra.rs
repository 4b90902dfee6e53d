//! Laplacian spectra: eigendecomposition, closed forms for paths and cycles,
//! and the heat kernel `e^{tL}` derived from a decomposition.

use nalgebra::DMatrix;

use crate::graph::LineageFamily;
use crate::matrix::{Matrix, SymMatrix};

/// Eigenvalues sorted ascending. For a Laplacian all values are <= 0 with the
/// largest exactly 0 in theory (up to round-off here).
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    /// Wraps raw eigenvalues; sorts ascending, rejects non-finite entries.
    pub fn from_values(mut values: Vec<f64>) -> Self {
        assert!(
            values.iter().all(|v| v.is_finite()),
            "spectrum entries must be finite"
        );
        values.sort_by(|a, b| a.partial_cmp(b).unwrap());
        Spectrum { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Full symmetric eigendecomposition; `vectors` holds orthonormal
/// eigenvector columns aligned with `spectrum` (ascending eigenvalue order).
#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    pub spectrum: Spectrum,
    pub vectors: Matrix,
}

/// Dense symmetric eigendecomposition, eigenvalues ascending. Panics on
/// non-finite input entries.
pub fn decompose(m: &SymMatrix) -> EigenDecomposition {
    assert!(
        m.iter().all(|v| v.is_finite()),
        "matrix entries must be finite"
    );
    let n = m.n();
    let dm = DMatrix::from_fn(n, n, |i, j| m.get(i, j));
    let eig = dm.symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].partial_cmp(&eig.eigenvalues[b]).unwrap());
    let mut vectors = Matrix::zeros(n, n);
    let mut values = Vec::with_capacity(n);
    for (col, &k) in order.iter().enumerate() {
        values.push(eig.eigenvalues[k]);
        for row in 0..n {
            vectors.set(row, col, eig.eigenvectors[(row, k)]);
        }
    }
    EigenDecomposition {
        spectrum: Spectrum { values },
        vectors,
    }
}

/// Exact Laplacian spectra for the two families that admit a closed form:
/// paths (`-2 + 2 cos(k pi / n)`) and cycles (`-2 + 2 cos(2 pi k / n)`),
/// `k = 0..n-1`, returned sorted ascending.
pub fn closed_form_spectrum(family: LineageFamily, n: usize) -> Spectrum {
    let values: Vec<f64> = match family {
        LineageFamily::Path => (0..n)
            .map(|k| -2.0 + 2.0 * (k as f64 * std::f64::consts::PI / n as f64).cos())
            .collect(),
        LineageFamily::Cycle => (0..n)
            .map(|k| -2.0 + 2.0 * (2.0 * std::f64::consts::PI * k as f64 / n as f64).cos())
            .collect(),
        other => panic!("no closed-form spectrum for {:?}", other),
    };
    Spectrum::from_values(values)
}

/// Heat kernel `e^{tL} = U e^{t Lambda} U^T` from a decomposition of `L`.
pub fn heat_kernel(d: &EigenDecomposition, t: f64) -> SymMatrix {
    let n = d.spectrum.len();
    let u = &d.vectors;
    let mut k = SymMatrix::zeros(n);
    for (idx, &lam) in d.spectrum.values().iter().enumerate() {
        let w = (t * lam).exp();
        for i in 0..n {
            let ui = u.get(i, idx) * w;
            for j in 0..=i {
                k.set(i, j, k.get(i, j) + ui * u.get(j, idx));
            }
        }
    }
    k
}

/// `||e^{tL}||_F` straight from the spectrum: `sqrt(sum_k e^{2 t lambda_k})`.
pub fn kernel_frobenius_norm(s: &Spectrum, t: f64) -> f64 {
    s.values().iter().map(|&l| (2.0 * t * l).exp()).sum::<f64>().sqrt()
}
