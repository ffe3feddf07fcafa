//! Belonging coefficient schemes and belonging functions.

use crate::cover::Cover;
use crate::graph::Graph;
use crate::{Error, Result};

/// Default steepness of the logistic belonging function.
pub const DEFAULT_STEEPNESS: f64 = 30.0;

/// Tolerance on `Σ_c a_{i,c} = 1` for given fuzzy covers.
pub const ROW_SUM_TOLERANCE: f64 = 1e-9;

/// How belonging coefficients are obtained for a cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CoefficientScheme {
    /// Use the cover's own coefficients (all ones for a crisp partition).
    Given,
    /// `a_{i,c} = 1 / O_i`, the reciprocal of the number of communities holding `i`.
    #[default]
    NumCommunities,
    /// `a_{i,c}` proportional to the edge weight from `i` into `c`.
    NodeStrength,
}

/// Combines two belonging coefficients into a pair weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BelongingFunction {
    /// `(a + b) / 2`
    Average,
    /// `a · b`
    #[default]
    Product,
    /// `g(a) · g(b)` with `g(x) = 1 / (1 + e^{-(2px - p)})`.
    Logistic,
}

/// Coefficient scheme, belonging function and logistic steepness.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BelongingConfig {
    /// Coefficient scheme used by [`BelongingConfig::prepare`].
    pub scheme: CoefficientScheme,
    /// Belonging function used by the metrics.
    pub function: BelongingFunction,
    /// Logistic steepness; also drives `Q_ov^L` whatever `function` is.
    pub p: f64,
}

impl Default for BelongingConfig {
    fn default() -> Self {
        Self { scheme: CoefficientScheme::default(), function: BelongingFunction::default(), p: DEFAULT_STEEPNESS }
    }
}

/// Logistic map `g(x) = 1 / (1 + e^{-(2px - p)})`.
#[inline]
pub fn logistic(p: f64, x: f64) -> f64 {
    1.0 / (1.0 + libm::exp(-(2.0 * p * x - p)))
}

impl BelongingConfig {
    /// Config with the given scheme and function and the default steepness.
    pub fn new(scheme: CoefficientScheme, function: BelongingFunction) -> Self {
        Self { scheme, function, p: DEFAULT_STEEPNESS }
    }

    /// Replaces the logistic steepness.
    pub fn with_p(mut self, p: f64) -> Self {
        self.p = p;
        self
    }

    /// Fails unless `p` is positive and finite.
    pub fn validate(&self) -> Result<()> {
        if self.p > 0.0 && self.p.is_finite() {
            Ok(())
        } else {
            Err(Error::InvalidSteepness(self.p))
        }
    }

    /// `f(a, b)` for the configured belonging function.
    #[inline]
    pub fn value(&self, a: f64, b: f64) -> f64 {
        match self.function {
            BelongingFunction::Average => (a + b) / 2.0,
            BelongingFunction::Product => a * b,
            BelongingFunction::Logistic => logistic(self.p, a) * logistic(self.p, b),
        }
    }

    /// Applies the coefficient scheme to `cover`, producing a cover whose rows
    /// satisfy `Σ_c a_{i,c} = 1` for every covered node.
    pub fn prepare(&self, graph: &Graph, cover: &Cover, options: PrepareOptions) -> Result<Cover> {
        self.validate()?;
        let cover = if options.add_singletons { cover.with_singletons(graph) } else { cover.clone() };
        match self.scheme {
            CoefficientScheme::Given => {
                if options.normalize {
                    Ok(cover.normalized())
                } else {
                    cover.check_row_sums(ROW_SUM_TOLERANCE)?;
                    Ok(cover)
                }
            }
            CoefficientScheme::NumCommunities => cover.assign_v1(),
            CoefficientScheme::NodeStrength => cover.assign_v2(graph, options.v2_fallback),
        }
    }
}

/// Knobs for [`BelongingConfig::prepare`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PrepareOptions {
    /// Give every uncovered node a one-node community first.
    pub add_singletons: bool,
    /// Rescale given fuzzy rows to sum to one instead of rejecting them.
    pub normalize: bool,
    /// Fall back to `1 / O_i` for nodes whose node-strength denominator is 0.
    pub v2_fallback: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn average_and_product() {
        let avg = BelongingConfig::new(CoefficientScheme::Given, BelongingFunction::Average);
        let prod = BelongingConfig::new(CoefficientScheme::Given, BelongingFunction::Product);
        assert_eq!(avg.value(0.5, 1.0), 0.75);
        assert_eq!(prod.value(0.5, 0.5), 0.25);
    }

    #[test]
    fn logistic_constants() {
        assert_eq!(logistic(30.0, 0.5), 0.5);
        assert!((logistic(30.0, 1.0) - 1.0).abs() <= 1e-13);
        // exp(-30) ~ 9.36e-14
        assert!((logistic(30.0, 0.0) - 9.357_622_968_839_299e-14).abs() < 1e-25);
        let cfg = BelongingConfig::new(CoefficientScheme::Given, BelongingFunction::Logistic);
        assert_eq!(cfg.value(0.5, 0.5), 0.25);
        let g1 = 1.0 / (1.0 + libm::exp(-30.0));
        assert_eq!(cfg.value(1.0, 1.0), g1 * g1);
        assert!((cfg.value(1.0, 1.0) - 1.0).abs() <= 2e-13);
    }

    #[test]
    fn steepness_must_be_positive() {
        assert!(BelongingConfig::default().with_p(0.0).validate().is_err());
        assert!(BelongingConfig::default().with_p(f64::INFINITY).validate().is_err());
        assert!(BelongingConfig::default().validate().is_ok());
    }
}
