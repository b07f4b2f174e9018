//! Numerical integration primitives.
//!
//! Three integrators with different trade-offs:
//!
//! - [`adaptive_simpson`]: the workhorse for smooth, bounded integrands.
//!   Absolute tolerance with Richardson error control and a hard subdivision
//!   cap. Callers are expected to split at known kinks (bin edges).
//! - [`GaussLegendre`]: fixed-order panel rule for aggregating smooth
//!   solver output over a distribution; exact for polynomials up to
//!   degree `2n - 1`.
//! - [`tanh_sinh`]: double-exponential rule that never samples the interval
//!   endpoints, so it tolerates integrable endpoint singularities (e.g. a
//!   Weibull density with shape < 1 at the origin).

use crate::error::{Error, Result};

/// Default absolute tolerance for adaptive quadrature.
pub const DEFAULT_QUAD_TOL: f64 = 1e-10;
/// Hard cap on recursive subdivision depth.
pub const MAX_SIMPSON_DEPTH: u32 = 52;

/// Adaptive Simpson integration of `f` over `[a, b]` to absolute tolerance
/// `tol`.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    if !(a.is_finite() && b.is_finite()) || a > b {
        return Err(Error::Quadrature(format!(
            "adaptive Simpson needs a finite ordered interval, got [{a}, {b}]"
        )));
    }
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    if !(fa.is_finite() && fb.is_finite() && fm.is_finite()) {
        return Err(Error::Quadrature(format!(
            "integrand is not finite on [{a}, {b}]; use tanh_sinh for singular endpoints"
        )));
    }
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson_step(f, a, fa, m, fm, b, fb, whole, tol, MAX_SIMPSON_DEPTH)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    fa: f64,
    m: f64,
    fm: f64,
    b: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> Result<f64> {
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    if !(flm.is_finite() && frm.is_finite()) {
        return Err(Error::Quadrature(format!(
            "integrand is not finite near [{a}, {b}]"
        )));
    }
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    // |S2 - S1| <= 15 tol ensures the Richardson-extrapolated value meets tol.
    if delta.abs() <= 15.0 * tol {
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 {
        return Err(Error::Quadrature(format!(
            "subdivision cap reached on [{a}, {b}] (estimate {:.6e}, error {:.3e})",
            left + right,
            delta.abs() / 15.0
        )));
    }
    let half = 0.5 * tol;
    Ok(
        simpson_step(f, a, fa, lm, flm, m, fm, left, half, depth - 1)?
            + simpson_step(f, m, fm, rm, frm, b, fb, right, half, depth - 1)?,
    )
}

/// Fixed-order Gauss–Legendre rule with precomputed nodes and weights on
/// `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Build the `n`-point rule. Nodes are the roots of the Legendre
    /// polynomial `P_n`, found by Newton iteration from the Chebyshev
    /// initial guess.
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "Gauss-Legendre order must be at least 2");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let m = n.div_ceil(2);
        for i in 0..m {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_and_derivative(n, x);
                dp = d;
                let step = p / d;
                x -= step;
                if step.abs() < 1e-15 {
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        Self { nodes, weights }
    }

    /// Integrate `f` over `[a, b]` with this rule.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F, a: f64, b: f64) -> f64 {
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let mut acc = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            acc += w * f(mid + half * x);
        }
        acc * half
    }
}

fn legendre_and_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Tanh-sinh (double-exponential) integration of `f` over `[a, b]`.
///
/// Abscissae cluster doubly-exponentially toward the endpoints without ever
/// touching them. Samples where `f` is non-finite are dropped; their true
/// contribution is below the rule's own truncation error.
pub fn tanh_sinh<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    if !(a.is_finite() && b.is_finite()) || a > b {
        return Err(Error::Quadrature(format!(
            "tanh-sinh needs a finite ordered interval, got [{a}, {b}]"
        )));
    }
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let g = |t: f64| -> (f64, f64) {
        // x = tanh(pi/2 sinh t), w = (pi/2) cosh t / cosh^2(pi/2 sinh t)
        let u = std::f64::consts::FRAC_PI_2 * t.sinh();
        let x = u.tanh();
        let c = u.cosh();
        let w = std::f64::consts::FRAC_PI_2 * t.cosh() / (c * c);
        (x, w)
    };
    let eval = |x: f64, w: f64| -> f64 {
        if x.abs() >= 1.0 || w == 0.0 {
            return 0.0;
        }
        let v = f(mid + half * x);
        if v.is_finite() {
            w * v
        } else {
            0.0
        }
    };

    const T_MAX: f64 = 6.1;
    let mut h = 1.0;
    let (x0, w0) = g(0.0);
    let mut sum = eval(x0, w0);
    let mut k = 1;
    while (k as f64) * h <= T_MAX {
        let t = k as f64 * h;
        let (x, w) = g(t);
        sum += eval(x, w) + eval(-x, w);
        k += 1;
    }
    let mut prev = sum * h * half;

    for _level in 1..=12u32 {
        h *= 0.5;
        // Only the new (odd-index) abscissae need evaluating.
        let mut extra = 0.0;
        let mut k = 1;
        while (k as f64) * h <= T_MAX {
            let t = k as f64 * h;
            let (x, w) = g(t);
            extra += eval(x, w) + eval(-x, w);
            k += 2;
        }
        sum += extra;
        let cur = sum * h * half;
        if (cur - prev).abs() <= tol.max(1e-15 * cur.abs()) {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::Quadrature(format!(
        "tanh-sinh did not converge on [{a}, {b}] (last estimate {prev:.6e})"
    )))
}
