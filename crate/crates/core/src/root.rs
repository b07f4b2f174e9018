//! Scalar root finding on a bracket.

use crate::error::{Error, Result};

/// Plain bisection on `[lo, hi]`. Requires a sign change (or an exact zero at
/// an endpoint). Converges unconditionally; returns the bracket midpoint once
/// its width drops below `xtol`.
pub fn bisect<F: Fn(f64) -> f64>(f: &F, mut lo: f64, mut hi: f64, xtol: f64) -> Result<f64> {
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::Domain(format!(
            "bisection bracket [{lo}, {hi}] has no sign change (f: {flo:.3e}, {fhi:.3e})"
        )));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= xtol || mid == lo || mid == hi {
            return Ok(mid);
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

/// Safeguarded Newton iteration on a bracket known to contain a root with
/// `f(lo) <= 0 <= f(hi)` or the reverse orientation.
///
/// Newton steps that leave the bracket (or hit a flat derivative) fall back
/// to bisection, so convergence is guaranteed while staying quadratic near
/// the root. Stops when `|f| <= ftol` or the bracket collapses.
pub fn newton_bisect<F: Fn(f64) -> (f64, f64)>(
    f_df: &F,
    mut lo: f64,
    mut hi: f64,
    ftol: f64,
) -> Result<f64> {
    let (flo, _) = f_df(lo);
    let (fhi, _) = f_df(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::Domain(format!(
            "newton bracket [{lo}, {hi}] has no sign change (f: {flo:.3e}, {fhi:.3e})"
        )));
    }
    let sign_lo = flo.signum();
    let mut x = 0.5 * (lo + hi);
    for _ in 0..200 {
        let (fx, dfx) = f_df(x);
        if fx.abs() <= ftol {
            return Ok(x);
        }
        if fx.signum() == sign_lo {
            lo = x;
        } else {
            hi = x;
        }
        let newton = x - fx / dfx;
        x = if dfx != 0.0 && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        if hi - lo <= f64::EPSILON * x.abs().max(1.0) {
            return Ok(x);
        }
    }
    let (fx, _) = f_df(x);
    Err(Error::NonConvergence {
        context: "safeguarded Newton exhausted its iteration budget".into(),
        last: vec![x],
        residual: fx.abs(),
    })
}
