use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{param, Error, Result};

/// A finite set of positive thresholds, geometric or linear.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "spacing", rename_all = "snake_case")]
pub enum ThresholdGrid {
    Geom { lo: f64, hi: f64, count: usize },
    Lin { lo: f64, hi: f64, count: usize },
}

impl ThresholdGrid {
    pub fn geom(lo: f64, hi: f64, count: usize) -> Self {
        ThresholdGrid::Geom { lo, hi, count }
    }

    pub fn lin(lo: f64, hi: f64, count: usize) -> Self {
        ThresholdGrid::Lin { lo, hi, count }
    }

    pub fn validate(&self) -> Result<()> {
        let (lo, hi, count) = match *self {
            ThresholdGrid::Geom { lo, hi, count } | ThresholdGrid::Lin { lo, hi, count } => {
                (lo, hi, count)
            }
        };
        if !(lo > 0.0 && lo.is_finite() && hi.is_finite()) {
            return Err(param(
                "grid",
                format!("thresholds must be positive and finite, got lo = {lo}"),
            ));
        }
        if count == 0 || (count > 1 && !(hi > lo)) || (count == 1 && hi != lo) {
            return Err(param(
                "grid",
                format!(
                    "need hi > lo with count >= 2 (or a single point), got {lo}..{hi} x{count}"
                ),
            ));
        }
        Ok(())
    }

    /// Strictly increasing points; both ends included.
    pub fn points(&self) -> Vec<f64> {
        match *self {
            ThresholdGrid::Geom { lo, hi, count } => {
                if count == 1 {
                    return vec![lo];
                }
                let r = (hi / lo).ln() / (count - 1) as f64;
                (0..count)
                    .map(|i| {
                        if i + 1 == count {
                            hi
                        } else {
                            lo * (r * i as f64).exp()
                        }
                    })
                    .collect()
            }
            ThresholdGrid::Lin { lo, hi, count } => {
                if count == 1 {
                    return vec![lo];
                }
                let step = (hi - lo) / (count - 1) as f64;
                (0..count)
                    .map(|i| {
                        if i + 1 == count {
                            hi
                        } else {
                            lo + step * i as f64
                        }
                    })
                    .collect()
            }
        }
    }
}

impl fmt::Display for ThresholdGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ThresholdGrid::Geom { lo, hi, count } => write!(f, "geom:{lo},{hi},{count}"),
            ThresholdGrid::Lin { lo, hi, count } => write!(f, "lin:{lo},{hi},{count}"),
        }
    }
}

impl FromStr for ThresholdGrid {
    type Err = Error;

    /// `geom:lo,hi,count` or `lin:lo,hi,count`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadSpec {
            spec: s.to_string(),
            reason: "expected `geom:lo,hi,count` or `lin:lo,hi,count`".into(),
        };
        let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
        let parts: Vec<&str> = rest.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(bad());
        }
        let lo: f64 = parts[0].parse().map_err(|_| bad())?;
        let hi: f64 = parts[1].parse().map_err(|_| bad())?;
        let count: usize = parts[2].parse().map_err(|_| bad())?;
        let g = match kind {
            "geom" => ThresholdGrid::geom(lo, hi, count),
            "lin" => ThresholdGrid::lin(lo, hi, count),
            _ => return Err(bad()),
        };
        g.validate()?;
        Ok(g)
    }
}

/// Tolerances and brackets used by the checks. Defaults are the pinned
/// acceptance values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Tolerances {
    /// Slack for inequalities that hold exactly on the grid, scaled by
    /// `1 + |rhs|`.
    pub exact_tol: f64,
    /// Direct vs layer-cake δ-moment.
    pub layer_cake_tol: f64,
    /// Luxemburg bisection vs λ-scan oracle (relative).
    pub luxemburg_oracle_tol: f64,
    /// Relative slack in the generalized Hölder inequality.
    pub holder_tol: f64,
    /// Closed-form Luxemburg values.
    pub closed_form_tol: f64,
    /// Oracle agreement of fast operator paths.
    pub oracle_tol: f64,
    /// Allowed relative change of an empirical constant under `h -> h/2`.
    pub refinement_rel: f64,
    /// Pointwise error against the closed forms of the weak-(1,1) example.
    pub example_tol: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            exact_tol: 1e-12,
            layer_cake_tol: 1e-8,
            luxemburg_oracle_tol: 1e-6,
            holder_tol: 1e-8,
            closed_form_tol: 1e-9,
            oracle_tol: 1e-12,
            refinement_rel: 0.2,
            example_tol: 0.02,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct VerifyConfig {
    /// Powers for `M_δ`, `M#_δ` and δ-moments, each in `(0, 1)`.
    pub deltas: Vec<f64>,
    /// Powers for the `M_ε(Mf) <= M²f` sandwich, each in `(0, 1)`.
    pub eps: Vec<f64>,
    pub lambda_grid: ThresholdGrid,
    /// Lebesgue exponents, each `> 1`.
    pub p_list: Vec<f64>,
    /// John–Nirenberg thresholds.
    pub t_grid: ThresholdGrid,
    pub seed: u64,
    /// Random `(b, f)` pairs in the exact and oracle suites.
    pub pairs: usize,
    /// Grid size of the exact suite.
    pub exact_n: usize,
    /// Largest grid size of the oracle suite.
    pub oracle_max_n: usize,
    /// Oracle-suite instances.
    pub oracle_instances: usize,
    /// Accepted band for `M²f / M_{L log L} f`.
    pub m2_llogl_bracket: [f64; 2],
    /// A John–Nirenberg fit passes when its slope is at most this.
    pub jn_slope_max: f64,
    /// Exponential integrability is checked at `λ = exp_c / ‖b‖_*`.
    pub exp_c: f64,
    /// Upper bound on weak-type ratios.
    pub weak_type_bound: f64,
    /// Random windows / triples for the Orlicz layer.
    pub orlicz_samples: usize,
    /// Half-width `X` of the weak-(1,1) example domain `[-X, 2]`.
    pub example_x: f64,
    /// Cell count of the weak-(1,1) example domain.
    pub example_n: usize,
    /// Thresholds `λ` for the growth of `λ |{|[M,b]f| > λ}|`.
    pub example_lambdas: Vec<f64>,
    /// Required ratio of the growth table between its smallest and largest `λ`.
    pub example_growth: f64,
    pub tolerances: Tolerances,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            deltas: vec![0.25, 0.5, 0.75],
            eps: vec![0.3, 0.7],
            lambda_grid: ThresholdGrid::geom(0.05, 0.8, 16),
            p_list: vec![2.0, 4.0],
            t_grid: ThresholdGrid::lin(1.0, 6.0, 26),
            seed: 7,
            pairs: 100,
            exact_n: 128,
            oracle_max_n: 64,
            oracle_instances: 200,
            m2_llogl_bracket: [0.125, 8.0],
            jn_slope_max: -0.5,
            exp_c: 0.1,
            weak_type_bound: 10.0,
            orlicz_samples: 100,
            example_x: 8.0,
            example_n: 5120,
            example_lambdas: vec![0.02, 0.05, 0.1, 0.2],
            example_growth: 1.5,
            tolerances: Tolerances::default(),
        }
    }
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<()> {
        let unit_open = |name: &'static str, xs: &[f64]| -> Result<()> {
            match xs.iter().find(|&&d| !(d > 0.0 && d < 1.0)) {
                Some(d) => Err(param(name, format!("{d} is outside (0, 1)"))),
                None => Ok(()),
            }
        };
        unit_open("deltas", &self.deltas)?;
        unit_open("eps", &self.eps)?;
        self.lambda_grid.validate()?;
        self.t_grid.validate()?;
        if let Some(p) = self.p_list.iter().find(|&&p| !(p > 1.0 && p.is_finite())) {
            return Err(param("p_list", format!("{p} is not a finite exponent > 1")));
        }
        if self.exact_n == 0 || self.oracle_max_n == 0 {
            return Err(param("exact_n", "grid sizes must be positive"));
        }
        let [lo, hi] = self.m2_llogl_bracket;
        if !(lo > 0.0 && hi >= lo) {
            return Err(param(
                "m2_llogl_bracket",
                format!("invalid band [{lo}, {hi}]"),
            ));
        }
        if !(self.exp_c > 0.0) {
            return Err(param("exp_c", "must be positive"));
        }
        if !(self.example_x > 0.0) || self.example_n == 0 {
            return Err(param(
                "example_x",
                "domain half-width and cell count must be positive",
            ));
        }
        if self.example_lambdas.len() < 2 || self.example_lambdas.iter().any(|&l| !(l > 0.0)) {
            return Err(param(
                "example_lambdas",
                "need at least two positive thresholds",
            ));
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let c: VerifyConfig = serde_json::from_str(text)?;
        c.validate()?;
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids_parse_and_span() {
        let g: ThresholdGrid = "geom:0.05,0.8,16".parse().unwrap();
        let pts = g.points();
        assert_eq!(pts.len(), 16);
        assert_eq!(pts[0], 0.05);
        assert_eq!(pts[15], 0.8);
        assert!(pts.windows(2).all(|w| w[1] > w[0]));
        let r = pts[1] / pts[0];
        assert!(pts.windows(2).all(|w| (w[1] / w[0] - r).abs() < 1e-12));

        let l: ThresholdGrid = "lin:1,6,26".parse().unwrap();
        assert_eq!(l.points()[5], 2.0);
        assert!("geom:0,1,4".parse::<ThresholdGrid>().is_err());
        assert!("geom:1,0.5,4".parse::<ThresholdGrid>().is_err());
        assert!("cubic:1,2,3".parse::<ThresholdGrid>().is_err());
    }

    #[test]
    fn config_defaults_validate_and_partial_json_fills_in() {
        VerifyConfig::default().validate().unwrap();
        let c = VerifyConfig::from_json(r#"{"seed": 11, "deltas": [0.5]}"#).unwrap();
        assert_eq!(c.seed, 11);
        assert_eq!(c.deltas, vec![0.5]);
        assert_eq!(c.eps, vec![0.3, 0.7]);
        assert!(VerifyConfig::from_json(r#"{"deltas": [1.0]}"#).is_err());
        assert!(VerifyConfig::from_json(r#"{"p_list": [1.0]}"#).is_err());
    }
}
