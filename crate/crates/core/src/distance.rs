//! Shared result types for the distance variants.

/// Alpha search window used throughout: wide enough that every optimum seen
/// in practice is interior, while keeping `1/alpha` finite.
pub const ALPHA_WINDOW: (f64, f64) = (1e-6, 10.0);

/// Which distance was computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// Linear objective, alpha free.
    LinearFree,
    /// Linear objective at a caller-fixed alpha.
    LinearFixedAlpha,
    /// Size-normalized linear distance with alpha pinned to `(n1/n2)^r`.
    Tsgdd,
    /// Heat-kernel objective, sup over t of the alpha/matching minimum.
    Exponential,
    /// Heat-kernel objective at a caller-fixed alpha.
    ExponentialFixedAlpha,
    /// Heat-kernel comparison without vertex matching (equal sizes only).
    Hammond,
}

impl Variant {
    pub fn as_str(&self) -> &'static str {
        match self {
            Variant::LinearFree => "linear",
            Variant::LinearFixedAlpha => "linear-fixed",
            Variant::Tsgdd => "tsgdd",
            Variant::Exponential => "exp",
            Variant::ExponentialFixedAlpha => "exp-fixed",
            Variant::Hammond => "hammond",
        }
    }
}

/// A computed distance plus the witness at which it was attained.
/// `matching[j]` is the larger-graph index matched to smaller-graph index
/// `j` (empty for variants without a matching). Squared objectives below
/// 1e-12 are snapped to exactly zero.
#[derive(Clone, Debug)]
pub struct DistanceResult {
    pub value: f64,
    pub value_squared: f64,
    pub alpha_star: Option<f64>,
    pub t_star: Option<f64>,
    pub matching: Vec<usize>,
    pub variant: Variant,
    pub work: u64,
}

/// Controls for the diffusion-time continuation.
#[derive(Clone, Copy, Debug)]
pub struct ExpOptions {
    /// First diffusion time probed.
    pub t_init: f64,
    /// Base continuation step in t.
    pub dt: f64,
    /// Window for the inner alpha minimizations.
    pub alpha_window: (f64, f64),
    /// Hard ceiling on t; curves still rising here report the cap as the sup
    /// location.
    pub t_cap: f64,
    /// Scan all the way to `t_cap` and keep the global maximum instead of
    /// stopping at the first non-increase (multimodality guard).
    pub full_sweep: bool,
}

impl Default for ExpOptions {
    fn default() -> Self {
        ExpOptions {
            t_init: 1e-3,
            dt: 0.01,
            alpha_window: ALPHA_WINDOW,
            t_cap: 50.0,
            full_sweep: false,
        }
    }
}

/// Squared objectives indistinguishable from zero collapse to exact zero so
/// identical inputs compare with `==`.
pub(crate) fn snap_squared(v2: f64) -> f64 {
    if v2.abs() < 1e-12 {
        0.0
    } else {
        v2
    }
}
