//! The intrinsic-value distribution `F` and every integral the equilibrium
//! formulas need.
//!
//! All supported families live on the nonnegative half-line and have a
//! density, so the bin-conditional means that drive the solvers are always
//! well defined. Each operation has a closed-form fast path; the [`reference`]
//! submodule evaluates the same defining integrals by quadrature and serves
//! as the fallback (and as an independent cross-check in tests).
//!
//! Notation used throughout the crate:
//!
//! ```text
//! partial_mean_below(u)  = ∫_0^u w f(w) dw
//! integral_cdf_below(u)  = ∫_0^u F(w) dw          (= u F(u) - partial_mean_below(u))
//! integral_tail_above(u) = ∫_u^∞ [1 - F(w)] dw
//! truncated_mean(a, b)   = E[w | w ∈ [a, b)]
//! ```

use serde::Serialize;
use statrs::function::gamma::{gamma, gamma_li, gamma_ui};

use crate::error::{Error, Result};
use crate::quad;

/// Tail mass below which an unbounded support is truncated for quadrature
/// and reporting purposes.
pub const DEFAULT_TAIL_EPS: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum DistKind {
    Uniform { lo: f64, hi: f64 },
    Weibull { shape: f64, scale: f64 },
    Exponential { rate: f64 },
    /// Piecewise-linear cdf through the given strictly increasing points:
    /// `F(points[i]) = i / (len - 1)`. The density is piecewise constant.
    EmpiricalTable { points: Vec<f64> },
}

/// Intrinsic-value law. Immutable after construction; all methods are pure.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Distribution {
    kind: DistKind,
    support_hi: f64,
    tail_eps: f64,
}

impl Distribution {
    pub fn uniform(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite()) || lo < 0.0 || lo >= hi {
            return Err(Error::Parameter(format!(
                "uniform needs 0 <= lo < hi, got [{lo}, {hi}]"
            )));
        }
        Ok(Self {
            kind: DistKind::Uniform { lo, hi },
            support_hi: hi,
            tail_eps: DEFAULT_TAIL_EPS,
        })
    }

    pub fn weibull(shape: f64, scale: f64) -> Result<Self> {
        if !(shape.is_finite() && scale.is_finite()) || shape <= 0.0 || scale <= 0.0 {
            return Err(Error::Parameter(format!(
                "weibull needs positive shape and scale, got k={shape}, lambda={scale}"
            )));
        }
        let tail_eps = DEFAULT_TAIL_EPS;
        // Smallest w with 1 - F(w) <= tail_eps.
        let support_hi = scale * (-tail_eps.ln()).powf(1.0 / shape);
        Ok(Self {
            kind: DistKind::Weibull { shape, scale },
            support_hi,
            tail_eps,
        })
    }

    pub fn exponential(rate: f64) -> Result<Self> {
        if !rate.is_finite() || rate <= 0.0 {
            return Err(Error::Parameter(format!(
                "exponential needs a positive rate, got {rate}"
            )));
        }
        let tail_eps = DEFAULT_TAIL_EPS;
        let support_hi = -tail_eps.ln() / rate;
        Ok(Self {
            kind: DistKind::Exponential { rate },
            support_hi,
            tail_eps,
        })
    }

    pub fn empirical(points: Vec<f64>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::Parameter(
                "empirical table needs at least two points".into(),
            ));
        }
        if points[0] < 0.0 || points.iter().any(|p| !p.is_finite()) {
            return Err(Error::Parameter(
                "empirical table points must be finite and nonnegative".into(),
            ));
        }
        if points.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parameter(
                "empirical table points must be strictly increasing".into(),
            ));
        }
        let support_hi = *points.last().unwrap();
        Ok(Self {
            kind: DistKind::EmpiricalTable { points },
            support_hi,
            tail_eps: DEFAULT_TAIL_EPS,
        })
    }

    pub fn kind(&self) -> &DistKind {
        &self.kind
    }

    /// Effective upper truncation point: the exact supremum for bounded
    /// supports, otherwise the `1 - tail_eps` quantile.
    pub fn support_hi(&self) -> f64 {
        self.support_hi
    }

    pub fn is_bounded(&self) -> bool {
        matches!(
            self.kind,
            DistKind::Uniform { .. } | DistKind::EmpiricalTable { .. }
        )
    }

    fn check_nonnegative(&self, w: f64, what: &str) -> Result<()> {
        if !w.is_finite() && !(w.is_infinite() && w > 0.0) {
            return Err(Error::Domain(format!("{what} must not be NaN, got {w}")));
        }
        if w < 0.0 {
            return Err(Error::Domain(format!(
                "{what} lives on the nonnegative half-line, got {w}"
            )));
        }
        Ok(())
    }

    // ── Pointwise quantities ────────────────────────────────────────

    pub fn cdf(&self, w: f64) -> Result<f64> {
        self.check_nonnegative(w, "cdf argument")?;
        Ok(self.cdf_u(w))
    }

    pub fn pdf(&self, w: f64) -> Result<f64> {
        self.check_nonnegative(w, "pdf argument")?;
        Ok(self.pdf_u(w))
    }

    /// Survival function `1 - F(w)`, computed without cancellation.
    pub fn sf(&self, w: f64) -> Result<f64> {
        self.check_nonnegative(w, "sf argument")?;
        Ok(self.sf_u(w))
    }

    pub fn quantile(&self, p: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Domain(format!(
                "quantile level must lie in [0, 1], got {p}"
            )));
        }
        Ok(match &self.kind {
            DistKind::Uniform { lo, hi } => lo + p * (hi - lo),
            DistKind::Weibull { shape, scale } => {
                scale * (-(-p).ln_1p()).powf(1.0 / shape)
            }
            DistKind::Exponential { rate } => -(-p).ln_1p() / rate,
            DistKind::EmpiricalTable { points } => {
                let m = (points.len() - 1) as f64;
                let t = p * m;
                let i = (t.floor() as usize).min(points.len() - 2);
                points[i] + (t - i as f64) * (points[i + 1] - points[i])
            }
        })
    }

    pub(crate) fn cdf_u(&self, w: f64) -> f64 {
        match &self.kind {
            DistKind::Uniform { lo, hi } => ((w - lo) / (hi - lo)).clamp(0.0, 1.0),
            DistKind::Weibull { shape, scale } => {
                if w <= 0.0 {
                    0.0
                } else {
                    -(-(w / scale).powf(*shape)).exp_m1()
                }
            }
            DistKind::Exponential { rate } => {
                if w <= 0.0 {
                    0.0
                } else {
                    -(-rate * w).exp_m1()
                }
            }
            DistKind::EmpiricalTable { points } => {
                if w <= points[0] {
                    return 0.0;
                }
                if w >= *points.last().unwrap() {
                    return 1.0;
                }
                let m = (points.len() - 1) as f64;
                let i = points.partition_point(|p| *p <= w) - 1;
                (i as f64 + (w - points[i]) / (points[i + 1] - points[i])) / m
            }
        }
    }

    pub(crate) fn sf_u(&self, w: f64) -> f64 {
        match &self.kind {
            DistKind::Weibull { shape, scale } => {
                if w <= 0.0 {
                    1.0
                } else {
                    (-(w / scale).powf(*shape)).exp()
                }
            }
            DistKind::Exponential { rate } => {
                if w <= 0.0 {
                    1.0
                } else {
                    (-rate * w).exp()
                }
            }
            _ => 1.0 - self.cdf_u(w),
        }
    }

    pub(crate) fn pdf_u(&self, w: f64) -> f64 {
        match &self.kind {
            DistKind::Uniform { lo, hi } => {
                if w < *lo || w > *hi {
                    0.0
                } else {
                    1.0 / (hi - lo)
                }
            }
            DistKind::Weibull { shape, scale } => {
                if w < 0.0 {
                    0.0
                } else {
                    let t = (w / scale).powf(*shape);
                    shape / scale * (w / scale).powf(shape - 1.0) * (-t).exp()
                }
            }
            DistKind::Exponential { rate } => {
                if w < 0.0 {
                    0.0
                } else {
                    rate * (-rate * w).exp()
                }
            }
            DistKind::EmpiricalTable { points } => {
                let last = *points.last().unwrap();
                if w < points[0] || w >= last {
                    return 0.0;
                }
                let m = (points.len() - 1) as f64;
                let i = points.partition_point(|p| *p <= w).clamp(1, points.len() - 1) - 1;
                1.0 / (m * (points[i + 1] - points[i]))
            }
        }
    }

    // ── Moments ─────────────────────────────────────────────────────

    pub fn mean(&self) -> f64 {
        match &self.kind {
            DistKind::Uniform { lo, hi } => 0.5 * (lo + hi),
            DistKind::Weibull { shape, scale } => scale * gamma(1.0 + 1.0 / shape),
            DistKind::Exponential { rate } => 1.0 / rate,
            DistKind::EmpiricalTable { points } => {
                let m = (points.len() - 1) as f64;
                points
                    .windows(2)
                    .map(|s| 0.5 * (s[0] + s[1]) / m)
                    .sum()
            }
        }
    }

    pub fn second_moment(&self) -> f64 {
        match &self.kind {
            DistKind::Uniform { lo, hi } => (lo * lo + lo * hi + hi * hi) / 3.0,
            DistKind::Weibull { shape, scale } => scale * scale * gamma(1.0 + 2.0 / shape),
            DistKind::Exponential { rate } => 2.0 / (rate * rate),
            DistKind::EmpiricalTable { points } => {
                let m = (points.len() - 1) as f64;
                points
                    .windows(2)
                    .map(|s| (s[0] * s[0] + s[0] * s[1] + s[1] * s[1]) / (3.0 * m))
                    .sum()
            }
        }
    }

    pub fn variance(&self) -> f64 {
        let mu = self.mean();
        (self.second_moment() - mu * mu).max(0.0)
    }

    // ── Partial moments and tail integrals ──────────────────────────

    /// `∫_0^u w f(w) dw`.
    pub fn partial_mean_below(&self, u: f64) -> Result<f64> {
        self.check_nonnegative(u, "integration limit")?;
        Ok(self.pm_below_u(u))
    }

    /// `∫_u^∞ w f(w) dw`, evaluated without subtracting near-equal means.
    pub fn partial_mean_above(&self, u: f64) -> Result<f64> {
        self.check_nonnegative(u, "integration limit")?;
        Ok(self.pm_above_u(u))
    }

    /// `∫_0^u F(w) dw`, by parts: `u F(u) - partial_mean_below(u)`.
    pub fn integral_cdf_below(&self, u: f64) -> Result<f64> {
        self.check_nonnegative(u, "integration limit")?;
        Ok((u * self.cdf_u(u) - self.pm_below_u(u)).max(0.0))
    }

    /// `∫_u^∞ [1 - F(w)] dw`; equals the mean at `u = 0`.
    pub fn integral_tail_above(&self, u: f64) -> Result<f64> {
        self.check_nonnegative(u, "integration limit")?;
        Ok(self.tail_u(u))
    }

    fn pm_below_u(&self, u: f64) -> f64 {
        match &self.kind {
            DistKind::Uniform { lo, hi } => {
                let u = u.clamp(*lo, *hi);
                (u * u - lo * lo) / (2.0 * (hi - lo))
            }
            DistKind::Weibull { shape, scale } => {
                if u <= 0.0 {
                    0.0
                } else {
                    scale * gamma_li(1.0 + 1.0 / shape, (u / scale).powf(*shape))
                }
            }
            DistKind::Exponential { rate } => {
                let x = rate * u;
                if x <= 0.0 {
                    0.0
                } else if x < 1e-3 {
                    // 1 - (1+x)e^{-x} = x^2/2 - x^3/3 + x^4/8 - x^5/30 + ...
                    (x * x / 2.0 - x * x * x / 3.0 + x * x * x * x / 8.0) / rate
                } else {
                    (1.0 - (1.0 + x) * (-x).exp()) / rate
                }
            }
            DistKind::EmpiricalTable { points } => {
                let m = (points.len() - 1) as f64;
                let mut acc = 0.0;
                for s in points.windows(2) {
                    if u <= s[0] {
                        break;
                    }
                    let b = u.min(s[1]);
                    acc += (b * b - s[0] * s[0]) / (2.0 * m * (s[1] - s[0]));
                }
                acc
            }
        }
    }

    fn pm_above_u(&self, u: f64) -> f64 {
        match &self.kind {
            DistKind::Weibull { shape, scale } => {
                if u <= 0.0 {
                    self.mean()
                } else {
                    scale * gamma_ui(1.0 + 1.0 / shape, (u / scale).powf(*shape))
                }
            }
            DistKind::Exponential { rate } => {
                let x = rate * u;
                (1.0 + x) * (-x).exp() / rate
            }
            _ => (self.mean() - self.pm_below_u(u)).max(0.0),
        }
    }

    fn tail_u(&self, u: f64) -> f64 {
        match &self.kind {
            DistKind::Uniform { lo, hi } => {
                if u >= *hi {
                    0.0
                } else if u <= *lo {
                    self.mean() - u
                } else {
                    (hi - u) * (hi - u) / (2.0 * (hi - lo))
                }
            }
            DistKind::Weibull { shape, scale } => {
                if u <= 0.0 {
                    self.mean()
                } else {
                    scale / shape * gamma_ui(1.0 / shape, (u / scale).powf(*shape))
                }
            }
            DistKind::Exponential { rate } => (-rate * u).exp() / rate,
            DistKind::EmpiricalTable { .. } => {
                // ∫_u^∞ (1-F) = ∫_u^∞ w f dw - u (1-F(u)), exact for bounded support.
                (self.pm_above_u(u) - u * self.sf_u(u)).max(0.0)
            }
        }
    }

    /// Probability mass of `[lo, hi)`.
    pub fn mass(&self, lo: f64, hi: f64) -> Result<f64> {
        self.check_nonnegative(lo, "interval endpoint")?;
        if hi < lo {
            return Err(Error::Domain(format!(
                "interval endpoints must be ordered, got [{lo}, {hi})"
            )));
        }
        if hi.is_infinite() {
            return Ok(self.sf_u(lo));
        }
        Ok(if self.cdf_u(lo) > 0.5 {
            (self.sf_u(lo) - self.sf_u(hi)).max(0.0)
        } else {
            (self.cdf_u(hi) - self.cdf_u(lo)).max(0.0)
        })
    }

    /// `E[w | w ∈ [lo, hi))`. `hi` may be infinite.
    pub fn truncated_mean(&self, lo: f64, hi: f64) -> Result<f64> {
        self.check_nonnegative(lo, "interval endpoint")?;
        if !(hi > lo) {
            return Err(Error::Domain(format!(
                "truncated_mean needs lo < hi, got [{lo}, {hi})"
            )));
        }
        let mass = self.mass(lo, hi)?;
        if mass <= 0.0 {
            return Err(Error::EmptyBin { lo, hi });
        }
        let num = if hi.is_infinite() {
            self.pm_above_u(lo)
        } else if self.cdf_u(lo) > 0.5 {
            self.pm_above_u(lo) - self.pm_above_u(hi)
        } else {
            self.pm_below_u(hi) - self.pm_below_u(lo)
        };
        Ok((num / mass).clamp(lo, hi))
    }
}

/// Quadrature evaluations of the defining integrals.
///
/// These are the slow fallback path and the independent cross-check for the
/// closed forms above. Density-weighted integrals go through tanh-sinh
/// (densities can be singular at the origin, e.g. Weibull with shape < 1);
/// cdf-based integrands are smooth and use adaptive Simpson.
pub mod reference {
    use super::*;

    const TOL: f64 = 1e-11;

    pub fn cdf(dist: &Distribution, w: f64) -> Result<f64> {
        quad::tanh_sinh(&|x| dist.pdf_u(x), 0.0, w.min(dist.support_hi()), TOL)
    }

    pub fn mean(dist: &Distribution) -> Result<f64> {
        quad::tanh_sinh(&|x| x * dist.pdf_u(x), 0.0, dist.support_hi(), TOL)
    }

    pub fn second_moment(dist: &Distribution) -> Result<f64> {
        quad::tanh_sinh(&|x| x * x * dist.pdf_u(x), 0.0, dist.support_hi(), TOL)
    }

    pub fn partial_mean_below(dist: &Distribution, u: f64) -> Result<f64> {
        quad::tanh_sinh(&|x| x * dist.pdf_u(x), 0.0, u.min(dist.support_hi()), TOL)
    }

    pub fn integral_cdf_below(dist: &Distribution, u: f64) -> Result<f64> {
        quad::adaptive_simpson(&|x| dist.cdf_u(x), 0.0, u, TOL)
    }

    pub fn integral_tail_above(dist: &Distribution, u: f64) -> Result<f64> {
        if u >= dist.support_hi() {
            return Ok(0.0);
        }
        quad::adaptive_simpson(&|x| dist.sf_u(x), u, dist.support_hi(), TOL)
    }

    pub fn truncated_mean(dist: &Distribution, lo: f64, hi: f64) -> Result<f64> {
        let hi = hi.min(dist.support_hi());
        let num = quad::tanh_sinh(&|x| x * dist.pdf_u(x), lo, hi, TOL)?;
        let mass = quad::tanh_sinh(&|x| dist.pdf_u(x), lo, hi, TOL)?;
        if mass <= 0.0 {
            return Err(Error::EmptyBin { lo, hi });
        }
        Ok(num / mass)
    }

    /// `Σ_bins ∫ (w - E[w|bin])^2 f(w) dw` for the partition induced by the
    /// given cuts. Defining integral of the privacy measure.
    pub fn binned_mse(dist: &Distribution, cuts: &[f64]) -> Result<f64> {
        let mut edges = vec![0.0];
        edges.extend_from_slice(cuts);
        edges.push(dist.support_hi());
        let mut total = 0.0;
        for pair in edges.windows(2) {
            let (lo, hi) = (pair[0], pair[1].min(dist.support_hi()));
            if hi <= lo {
                continue;
            }
            let mass = quad::tanh_sinh(&|x| dist.pdf_u(x), lo, hi, TOL)?;
            if mass <= 0.0 {
                continue;
            }
            let m = quad::tanh_sinh(&|x| x * dist.pdf_u(x), lo, hi, TOL)? / mass;
            total += quad::tanh_sinh(&|x| (x - m) * (x - m) * dist.pdf_u(x), lo, hi, TOL)?;
        }
        Ok(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use proptest::prelude::*;

    fn all_kinds() -> Vec<Distribution> {
        vec![
            Distribution::uniform(0.0, 1.0).unwrap(),
            Distribution::uniform(0.2, 2.5).unwrap(),
            Distribution::weibull(0.5, 1.0).unwrap(),
            Distribution::weibull(1.7, 0.8).unwrap(),
            Distribution::exponential(1.0).unwrap(),
            Distribution::exponential(0.4).unwrap(),
            Distribution::empirical(vec![0.0, 0.3, 0.35, 1.1, 2.0]).unwrap(),
        ]
    }

    #[test]
    fn cdf_examples() {
        let uni = Distribution::uniform(0.0, 1.0).unwrap();
        assert_abs_diff_eq!(uni.cdf(0.3).unwrap(), 0.3, epsilon = 1e-15);

        let wei = Distribution::weibull(0.5, 1.0).unwrap();
        let expected = 1.0 - (-0.4f64.sqrt()).exp();
        assert_abs_diff_eq!(wei.cdf(0.4).unwrap(), expected, epsilon = 1e-14);
        assert_abs_diff_eq!(expected, 0.4687, epsilon = 5e-5);

        for d in all_kinds() {
            assert_eq!(d.cdf(0.0).unwrap(), 0.0, "cdf(0) != 0 for {:?}", d.kind());
        }
    }

    #[test]
    fn cdf_rejects_negative_argument() {
        for d in all_kinds() {
            assert!(matches!(d.cdf(-0.1), Err(Error::Domain(_))));
        }
    }

    #[test]
    fn uniform_partial_integrals() {
        let uni = Distribution::uniform(0.0, 1.0).unwrap();
        assert_abs_diff_eq!(uni.integral_cdf_below(0.5).unwrap(), 0.125, epsilon = 1e-15);
        assert_abs_diff_eq!(uni.integral_tail_above(0.0).unwrap(), 0.5, epsilon = 1e-15);
    }

    #[test]
    fn weibull_integral_cdf_matches_closed_form() {
        // Substituting t = sqrt(w): ∫_0^u F = u - 2(1 - (1 + sqrt(u)) e^{-sqrt(u)}).
        let wei = Distribution::weibull(0.5, 1.0).unwrap();
        let u: f64 = 0.4;
        let s = u.sqrt();
        let expected = u - 2.0 * (1.0 - (1.0 + s) * (-s).exp());
        assert_abs_diff_eq!(wei.integral_cdf_below(u).unwrap(), expected, epsilon = 1e-12);
    }

    #[test]
    fn truncated_mean_examples() {
        let uni = Distribution::uniform(0.0, 1.0).unwrap();
        assert_abs_diff_eq!(uni.truncated_mean(0.0, 0.5).unwrap(), 0.25, epsilon = 1e-14);
        assert_abs_diff_eq!(uni.truncated_mean(0.37, 1.0).unwrap(), 0.685, epsilon = 1e-14);

        let exp = Distribution::exponential(1.0).unwrap();
        assert_abs_diff_eq!(
            exp.truncated_mean(0.0, f64::INFINITY).unwrap(),
            1.0,
            epsilon = 1e-14
        );
    }

    #[test]
    fn truncated_mean_empty_bin_errors() {
        let uni = Distribution::uniform(0.2, 1.0).unwrap();
        assert!(matches!(
            uni.truncated_mean(0.0, 0.1),
            Err(Error::EmptyBin { .. })
        ));
        assert!(uni.truncated_mean(0.5, 0.5).is_err());
    }

    #[test]
    fn weibull_mean_is_gamma_value() {
        // k = 0.5 gives E[w] = Γ(3) = 2.
        let wei = Distribution::weibull(0.5, 1.0).unwrap();
        assert_abs_diff_eq!(wei.mean(), 2.0, epsilon = 1e-12);
    }

    #[test]
    fn support_hi_captures_requested_tail_mass() {
        for d in all_kinds() {
            let hi = d.support_hi();
            assert!(d.sf(hi).unwrap() <= DEFAULT_TAIL_EPS * 1.0001, "{:?}", d.kind());
        }
    }

    #[test]
    fn pdf_normalizes_to_one() {
        for d in all_kinds() {
            let total = quad::tanh_sinh(&|x| d.pdf_u(x), 0.0, d.support_hi(), 1e-11).unwrap();
            assert_abs_diff_eq!(total, 1.0, epsilon = 1e-8);
        }
    }

    #[test]
    fn analytic_operations_match_quadrature() {
        for d in all_kinds() {
            let us = [0.05, 0.3, 0.7, 1.3];
            assert_abs_diff_eq!(d.mean(), reference::mean(&d).unwrap(), epsilon = 1e-8);
            assert_abs_diff_eq!(
                d.second_moment(),
                reference::second_moment(&d).unwrap(),
                epsilon = 1e-8
            );
            for &u in &us {
                assert_abs_diff_eq!(
                    d.cdf(u).unwrap(),
                    reference::cdf(&d, u).unwrap(),
                    epsilon = 1e-8
                );
                assert_abs_diff_eq!(
                    d.partial_mean_below(u).unwrap(),
                    reference::partial_mean_below(&d, u).unwrap(),
                    epsilon = 1e-8
                );
                assert_abs_diff_eq!(
                    d.integral_cdf_below(u).unwrap(),
                    reference::integral_cdf_below(&d, u).unwrap(),
                    epsilon = 1e-8
                );
                assert_abs_diff_eq!(
                    d.integral_tail_above(u).unwrap(),
                    reference::integral_tail_above(&d, u).unwrap(),
                    epsilon = 1e-8
                );
            }
            assert_abs_diff_eq!(
                d.truncated_mean(0.1, 0.9).unwrap(),
                reference::truncated_mean(&d, 0.1, 0.9).unwrap(),
                epsilon = 1e-8
            );
        }
    }

    #[test]
    fn partial_mean_plus_binwise_tail_reconstructs_mean() {
        for d in all_kinds() {
            for u in [0.1, 0.4, 1.0] {
                let below = d.partial_mean_below(u).unwrap();
                let tail_mass = d.sf(u).unwrap();
                if tail_mass > 0.0 {
                    let above = d.truncated_mean(u, f64::INFINITY).unwrap() * tail_mass;
                    assert_abs_diff_eq!(below + above, d.mean(), epsilon = 1e-8);
                }
            }
        }
    }

    #[test]
    fn quantile_inverts_cdf() {
        for d in all_kinds() {
            for p in [0.01, 0.25, 0.5, 0.9, 0.999] {
                let w = d.quantile(p).unwrap();
                assert_abs_diff_eq!(d.cdf(w).unwrap(), p, epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn constructor_validation() {
        assert!(Distribution::uniform(-0.5, 1.0).is_err());
        assert!(Distribution::uniform(1.0, 1.0).is_err());
        assert!(Distribution::weibull(0.0, 1.0).is_err());
        assert!(Distribution::exponential(-2.0).is_err());
        assert!(Distribution::empirical(vec![0.5]).is_err());
        assert!(Distribution::empirical(vec![0.5, 0.5]).is_err());
        assert!(Distribution::empirical(vec![-0.1, 0.5]).is_err());
    }

    proptest! {
        #[test]
        fn partial_mean_monotone(u1 in 0.0..3.0f64, u2 in 0.0..3.0f64) {
            let (lo, hi) = if u1 <= u2 { (u1, u2) } else { (u2, u1) };
            for d in all_kinds() {
                let a = d.partial_mean_below(lo).unwrap();
                let b = d.partial_mean_below(hi).unwrap();
                prop_assert!(a <= b + 1e-12);
            }
        }

        #[test]
        fn tail_integral_antitone(u1 in 0.0..3.0f64, u2 in 0.0..3.0f64) {
            let (lo, hi) = if u1 <= u2 { (u1, u2) } else { (u2, u1) };
            for d in all_kinds() {
                let a = d.integral_tail_above(lo).unwrap();
                let b = d.integral_tail_above(hi).unwrap();
                prop_assert!(a >= b - 1e-12);
            }
        }

        #[test]
        fn cdf_nondecreasing(w1 in 0.0..4.0f64, w2 in 0.0..4.0f64) {
            let (lo, hi) = if w1 <= w2 { (w1, w2) } else { (w2, w1) };
            for d in all_kinds() {
                prop_assert!(d.cdf_u(lo) <= d.cdf_u(hi) + 1e-15);
            }
        }
    }
}
