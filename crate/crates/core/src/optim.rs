//! Scalar minimization on a bounded interval: golden-section (robust, fixed
//! shrink rate) and a Brent-style method (golden + parabolic steps) for the
//! inner alpha searches where evaluations are expensive.

const INVPHI: f64 = 0.618_033_988_749_894_9; // (sqrt(5) - 1) / 2
const GOLDEN_FRAC: f64 = 0.381_966_011_250_105_1; // 2 - phi

/// Golden-section minimization of `f` on `[a, b]` until the interval is
/// narrower than `tol`. Returns the best evaluated point. Never evaluates
/// the exact endpoints, so boundary minima come back within `tol` of the
/// boundary rather than on it.
pub fn golden_section_min<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, tol: f64) -> (f64, f64) {
    assert!(a < b && tol > 0.0);
    let (mut lo, mut hi) = (a, b);
    let mut c = hi - INVPHI * (hi - lo);
    let mut d = lo + INVPHI * (hi - lo);
    let mut fc = f(c);
    let mut fd = f(d);
    let (mut best_x, mut best_f) = if fc <= fd { (c, fc) } else { (d, fd) };
    while hi - lo > tol {
        if fc <= fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - INVPHI * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + INVPHI * (hi - lo);
            fd = f(d);
        }
        let (x, fx) = if fc <= fd { (c, fc) } else { (d, fd) };
        if fx < best_f {
            best_x = x;
            best_f = fx;
        }
    }
    (best_x, best_f)
}

/// Golden-section maximization; same contract as `golden_section_min`.
pub fn golden_section_max<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, tol: f64) -> (f64, f64) {
    let (x, neg) = golden_section_min(|x| -f(x), a, b, tol);
    (x, -neg)
}

/// Bounded Brent minimization (parabolic interpolation falling back to
/// golden-section) of `f` on `[a, b]` to absolute x-tolerance `xatol`.
pub fn brent_min<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    xatol: f64,
    max_iter: usize,
) -> (f64, f64) {
    assert!(a < b && xatol > 0.0);
    let sqrt_eps = f64::EPSILON.sqrt();
    let (mut lo, mut hi) = (a, b);
    let mut x = lo + GOLDEN_FRAC * (hi - lo);
    let (mut w, mut v) = (x, x);
    let mut fx = f(x);
    let (mut fw, mut fv) = (fx, fx);
    let mut deltax: f64 = 0.0;
    let mut rat: f64 = 0.0;

    for _ in 0..max_iter {
        let mid = 0.5 * (lo + hi);
        let tol1 = sqrt_eps * x.abs() + xatol / 3.0;
        let tol2 = 2.0 * tol1;
        if (x - mid).abs() <= tol2 - 0.5 * (hi - lo) {
            break;
        }
        let mut use_golden = true;
        if deltax.abs() > tol1 {
            // Try a parabolic fit through (x, w, v).
            let tmp1 = (x - w) * (fx - fv);
            let mut tmp2 = (x - v) * (fx - fw);
            let mut p = (x - v) * tmp2 - (x - w) * tmp1;
            tmp2 = 2.0 * (tmp2 - tmp1);
            if tmp2 > 0.0 {
                p = -p;
            }
            tmp2 = tmp2.abs();
            let deltax_prev = deltax;
            deltax = rat;
            if p > tmp2 * (lo - x)
                && p < tmp2 * (hi - x)
                && p.abs() < (0.5 * tmp2 * deltax_prev).abs()
            {
                rat = p / tmp2;
                let u = x + rat;
                if (u - lo) < tol2 || (hi - u) < tol2 {
                    rat = if mid >= x { tol1 } else { -tol1 };
                }
                use_golden = false;
            }
        }
        if use_golden {
            deltax = if x >= mid { lo - x } else { hi - x };
            rat = GOLDEN_FRAC * deltax;
        }
        let u = if rat.abs() >= tol1 {
            x + rat
        } else if rat >= 0.0 {
            x + tol1
        } else {
            x - tol1
        };
        let fu = f(u);
        if fu <= fx {
            if u >= x {
                lo = x;
            } else {
                hi = x;
            }
            v = w;
            fv = fw;
            w = x;
            fw = fx;
            x = u;
            fx = fu;
        } else {
            if u < x {
                lo = u;
            } else {
                hi = u;
            }
            if fu <= fw || w == x {
                v = w;
                fv = fw;
                w = u;
                fw = fu;
            } else if fu <= fv || v == x || v == w {
                v = u;
                fv = fu;
            }
        }
    }
    (x, fx)
}

/// Bisection root of `f` on `[a, b]`; requires a sign change between the
/// endpoints (returns `None` otherwise, or when either endpoint is exactly
/// zero it returns that endpoint).
pub fn bisect_sign_change<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    xtol: f64,
    max_iter: usize,
) -> Option<f64> {
    let fa = f(a);
    let fb = f(b);
    if fa == 0.0 {
        return Some(a);
    }
    if fb == 0.0 {
        return Some(b);
    }
    if fa.signum() == fb.signum() {
        return None;
    }
    let (mut lo, mut hi, mut flo) = (a, b, fa);
    for _ in 0..max_iter {
        let mid = 0.5 * (lo + hi);
        if hi - lo < xtol {
            return Some(mid);
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Some(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}
