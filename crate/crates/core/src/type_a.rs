//! Full-revelation (type-A) equilibrium.
//!
//! When the provider publishes actions verbatim, the unique equilibrium
//! action of an agent with intrinsic value `w` solves
//!
//! ```text
//! a = w/alpha + beta (1 - e^{-a/beta})
//! ```
//!
//! with `a = 0` at `w = 0`. The equilibrium map is strictly increasing, so
//! the published action reveals `w` exactly: the societal estimate along the
//! equilibrium path is `x(a) = alpha a - alpha beta (1 - e^{-a/beta})`, the
//! closed-form inverse of the action map, with slope
//! `x'(a) = alpha (1 - e^{-a/beta})`.

use crate::distributions::Distribution;
use crate::error::{Error, Result};
use crate::params::ModelParams;
use crate::quad::GaussLegendre;
use crate::root::newton_bisect;

/// Equilibrium action for intrinsic value `w`.
///
/// `w/alpha <= a <= w/alpha + beta` always brackets the fixed point, so the
/// safeguarded Newton solve cannot escape. The returned action satisfies the
/// fixed-point equation to ~1e-13 absolute residual.
pub fn solve_action(w: f64, params: &ModelParams) -> Result<f64> {
    if !w.is_finite() || w < 0.0 {
        return Err(Error::Domain(format!(
            "intrinsic value must be finite and nonnegative, got {w}"
        )));
    }
    let (alpha, beta) = (params.alpha, params.beta);
    if beta == 0.0 {
        return Ok(w / alpha);
    }
    let lo = w / alpha;
    let hi = w / alpha + beta;
    let g = |a: f64| {
        let e = (-a / beta).exp();
        (a - w / alpha - beta * (1.0 - e), 1.0 - e)
    };
    let ftol = 4e-15 * (1.0 + hi);
    newton_bisect(&g, lo, hi, ftol)
}

/// Residual of the fixed-point equation at `(w, a)`; zero at the solution.
pub fn fixed_point_residual(w: f64, a: f64, params: &ModelParams) -> f64 {
    if params.beta == 0.0 {
        a - w / params.alpha
    } else {
        a - w / params.alpha - params.beta * (1.0 - (-a / params.beta).exp())
    }
}

/// The reputation-response quantity `(beta/alpha)(1 - e^{-a/beta})`.
///
/// Zero at `a = 0`, increasing, and saturating at `beta/alpha`: the marginal
/// reputational pull vanishes for agents at the bottom and levels off for
/// large actions.
pub fn reputation_derivative(a: f64, params: &ModelParams) -> f64 {
    if params.beta == 0.0 || a == 0.0 {
        return 0.0;
    }
    params.beta / params.alpha * (1.0 - (-a / params.beta).exp())
}

/// Slope of the equilibrium reputation curve, `x'(a) = alpha (1 - e^{-a/beta})`.
///
/// This is the quantity that enters the first-order condition
/// `w = alpha a - beta x'(a)`.
pub fn reputation_slope(a: f64, params: &ModelParams) -> f64 {
    if params.beta == 0.0 {
        return params.alpha;
    }
    params.alpha * (1.0 - (-a / params.beta).exp())
}

/// Societal estimate of `w` for an agent observed playing `a` on the
/// equilibrium path: the closed-form inverse of the action map.
pub fn reputation_at(a: f64, params: &ModelParams) -> f64 {
    if params.beta == 0.0 {
        return params.alpha * a;
    }
    params.alpha * a - params.alpha * params.beta * (1.0 - (-a / params.beta).exp())
}

/// Type-A equilibrium materialized on a grid of intrinsic values.
///
/// Read-only after construction; queries off the grid are solved fresh
/// (pure), so shared concurrent reads are safe.
#[derive(Debug, Clone)]
pub struct TypeAEquilibrium {
    params: ModelParams,
    grid: Vec<(f64, f64)>,
}

impl TypeAEquilibrium {
    pub fn materialize(w_grid: &[f64], params: &ModelParams) -> Result<Self> {
        let mut grid = Vec::with_capacity(w_grid.len());
        for &w in w_grid {
            grid.push((w, solve_action(w, params)?));
        }
        grid.sort_by(|a, b| a.0.total_cmp(&b.0));
        Ok(Self {
            params: *params,
            grid,
        })
    }

    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    /// Equilibrium action at `w`: cached when `w` is a grid point, solved
    /// on the fly otherwise.
    pub fn action_at(&self, w: f64) -> Result<f64> {
        if let Ok(i) = self.grid.binary_search_by(|probe| probe.0.total_cmp(&w)) {
            return Ok(self.grid[i].1);
        }
        solve_action(w, &self.params)
    }

    /// Inverse map: the intrinsic value revealed by an equilibrium action.
    pub fn reputation_at(&self, a: f64) -> f64 {
        reputation_at(a, &self.params)
    }

    pub fn grid(&self) -> &[(f64, f64)] {
        &self.grid
    }
}

/// Aggregate prosocial action `W_A = ∫ a*(w) f(w) dw`.
///
/// Composite Gauss–Legendre over panels that double in width away from the
/// origin (the action map has a square-root kink at `w = 0` and densities may
/// be steep there), split additionally at density breakpoints.
pub fn aggregate_action(dist: &Distribution, params: &ModelParams) -> Result<f64> {
    if params.beta == 0.0 {
        return Ok(dist.mean() / params.alpha);
    }
    let rule = GaussLegendre::new(16);
    let mut total = 0.0;
    let edges = density_edges(dist);
    for base in edges.windows(2) {
        let (lo, hi) = (base[0], base[1]);
        if hi <= lo {
            continue;
        }
        let len = hi - lo;
        let mut a = lo;
        let mut width = len * 2.0f64.powi(-30);
        while a < hi {
            let b = (a + width).min(hi);
            let mut failure = None;
            let v = rule.integrate(
                |w| match solve_action(w, params) {
                    Ok(act) => act * dist.pdf_u(w),
                    Err(e) => {
                        failure = Some(e);
                        0.0
                    }
                },
                a,
                b,
            );
            if let Some(e) = failure {
                return Err(e);
            }
            total += v;
            a = b;
            width *= 2.0;
        }
    }
    Ok(total)
}

/// Integration breakpoints of the density on `[0, support_hi]`.
fn density_edges(dist: &Distribution) -> Vec<f64> {
    use crate::distributions::DistKind;
    let mut edges = vec![0.0];
    match dist.kind() {
        DistKind::Uniform { lo, .. } => {
            if *lo > 0.0 {
                edges.push(*lo);
            }
        }
        DistKind::EmpiricalTable { points } => {
            edges.extend(points.iter().copied().filter(|p| *p > 0.0));
        }
        _ => {}
    }
    edges.push(dist.support_hi());
    edges.dedup();
    edges
}
