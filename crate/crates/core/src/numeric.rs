//! One-dimensional minimization and root bracketing.

use crate::error::{Error, Result};

const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Golden-section search for a minimum of `f` on `[lo, hi]`.
///
/// Returns `(x, f(x))` for the best point seen once the bracket is narrower
/// than `tol`. Assumes `f` is unimodal on the interval.
pub fn golden_section_min<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64) {
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > tol {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
        // Rounding can stall the update once the bracket is a few ulps wide.
        if x1 <= lo || x2 >= hi {
            break;
        }
    }
    let (flo, fhi) = (f(lo), f(hi));
    [(x1, f1), (x2, f2), (lo, flo), (hi, fhi)].into_iter().min_by(|a, b| a.1.total_cmp(&b.1)).expect("nonempty")
}

/// Global minimum of `f` on `[lo, hi]`: a uniform scan of `samples` points,
/// then golden-section refinement around every discrete local minimum.
pub fn scan_and_refine_min<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, samples: usize, tol: f64) -> (f64, f64) {
    assert!(samples >= 3, "need at least three samples");
    let step = (hi - lo) / (samples - 1) as f64;
    let xs: Vec<f64> = (0..samples).map(|i| if i + 1 == samples { hi } else { lo + step * i as f64 }).collect();
    let ys: Vec<f64> = xs.iter().map(|&x| f(x)).collect();

    let mut best = (xs[0], ys[0]);
    for i in 0..samples {
        let left = if i == 0 { f64::INFINITY } else { ys[i - 1] };
        let right = if i + 1 == samples { f64::INFINITY } else { ys[i + 1] };
        if ys[i] > left || ys[i] > right {
            continue;
        }
        let a = xs[i.saturating_sub(1)];
        let b = xs[(i + 1).min(samples - 1)];
        let candidate = golden_section_min(&f, a, b, tol);
        if candidate.1 < best.1 {
            best = candidate;
        }
    }
    best
}

/// Bisection on a bracket with `f(lo)` and `f(hi)` of opposite sign.
pub fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> Result<f64> {
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() || flo.is_nan() || fhi.is_nan() {
        return Err(Error::SolverFailure(format!("no sign change on [{lo}, {hi}]: f = {flo}, {fhi}")));
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// The first subinterval of a uniform `steps`-way split of `[lo, hi]` on
/// which `f` changes sign.
pub fn first_sign_change<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, steps: usize) -> Option<(f64, f64)> {
    let h = (hi - lo) / steps as f64;
    let mut a = lo;
    let mut fa = f(a);
    for i in 1..=steps {
        let b = if i == steps { hi } else { lo + h * i as f64 };
        let fb = f(b);
        if fa == 0.0 || fa.signum() != fb.signum() {
            return Some((a, b));
        }
        a = b;
        fa = fb;
    }
    None
}
