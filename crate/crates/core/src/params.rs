use serde::Serialize;

use crate::error::{Error, Result};

/// Cost curvature and reputation weight shared by every scheme.
///
/// Agents with intrinsic value `w` maximize
/// `a*w - alpha*a^2/2 + beta*E[w | published signal]`, so `alpha` scales the
/// quadratic effort cost and `beta` scales how much the societal estimate of
/// `w` is worth to them.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ModelParams {
    pub alpha: f64,
    pub beta: f64,
}

impl ModelParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !alpha.is_finite() || alpha <= 0.0 {
            return Err(Error::Parameter(format!(
                "cost curvature alpha must be finite and positive, got {alpha}"
            )));
        }
        if !beta.is_finite() || beta < 0.0 {
            return Err(Error::Parameter(format!(
                "reputation weight beta must be finite and nonnegative, got {beta}"
            )));
        }
        Ok(Self { alpha, beta })
    }
}

/// How much of an agent's action the provider publishes.
///
/// `TypeA` reveals the action itself; `TypeB` reveals only which side of a
/// single action threshold the agent landed on; `TypeBm` reveals the index of
/// the action bin among `thetas.len() + 1` categories.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum FeedbackScheme {
    TypeA,
    TypeB { theta: f64 },
    TypeBm { thetas: Vec<f64> },
}

impl FeedbackScheme {
    pub fn label(&self) -> &'static str {
        match self {
            FeedbackScheme::TypeA => "type-a",
            FeedbackScheme::TypeB { .. } => "type-b",
            FeedbackScheme::TypeBm { .. } => "type-bm",
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            FeedbackScheme::TypeA => Ok(()),
            FeedbackScheme::TypeB { theta } => {
                if !theta.is_finite() || *theta <= 0.0 {
                    return Err(Error::Parameter(format!(
                        "type-b threshold must be finite and positive, got {theta}"
                    )));
                }
                Ok(())
            }
            FeedbackScheme::TypeBm { thetas } => validate_thresholds(thetas),
        }
    }
}

/// Shared validation for interior threshold vectors: finite, positive,
/// strictly increasing.
pub fn validate_thresholds(thetas: &[f64]) -> Result<()> {
    if thetas.is_empty() {
        return Err(Error::Parameter(
            "threshold vector must contain at least one threshold".into(),
        ));
    }
    for (i, t) in thetas.iter().enumerate() {
        if !t.is_finite() || *t <= 0.0 {
            return Err(Error::Parameter(format!(
                "threshold {i} must be finite and positive, got {t}"
            )));
        }
        if i > 0 && thetas[i - 1] >= *t {
            return Err(Error::Parameter(format!(
                "thresholds must be strictly increasing, got {} then {}",
                thetas[i - 1],
                t
            )));
        }
    }
    Ok(())
}
