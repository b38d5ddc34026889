//! The Young pair `Φ(t) = t(1 + log⁺ t)` / `Ψ(t) = e^t − 1` and Luxemburg
//! averages over windows.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{SampledFn, Window};

/// Relative bracket width at which bisection stops.
pub const BISECTION_RTOL: f64 = 1e-10;
/// Hard cap on bisection steps; hitting it is reported, never hidden.
pub const BISECTION_MAX_ITER: u32 = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrliczFunction {
    /// `Φ(t) = t (1 + log⁺ t)`.
    #[serde(rename = "LlogL")]
    LlogL,
    /// `Ψ(t) = e^t − 1`.
    #[serde(rename = "ExpL")]
    ExpL,
}

impl OrliczFunction {
    pub fn eval(self, t: f64) -> f64 {
        match self {
            OrliczFunction::LlogL => {
                if t > 1.0 {
                    t * (1.0 + t.ln())
                } else {
                    t
                }
            }
            OrliczFunction::ExpL => t.exp_m1(),
        }
    }

    /// Inverse on `[0, ∞)`.
    pub fn inverse(self, s: f64) -> f64 {
        match self {
            OrliczFunction::ExpL => s.ln_1p(),
            OrliczFunction::LlogL => {
                if s <= 1.0 {
                    return s;
                }
                // Newton on t(1 + ln t) = s, convex and increasing for t >= 1.
                let mut t = s / (1.0 + s.ln()).max(1.0);
                for _ in 0..100 {
                    let next = t - (t * (1.0 + t.ln()) - s) / (2.0 + t.ln());
                    let next = next.max(1.0);
                    if (next - t).abs() <= 1e-15 * next {
                        return next;
                    }
                    t = next;
                }
                t
            }
        }
    }

    pub fn complement(self) -> OrliczFunction {
        match self {
            OrliczFunction::LlogL => OrliczFunction::ExpL,
            OrliczFunction::ExpL => OrliczFunction::LlogL,
        }
    }
}

impl fmt::Display for OrliczFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrliczFunction::LlogL => "LlogL",
            OrliczFunction::ExpL => "ExpL",
        })
    }
}

impl FromStr for OrliczFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "llogl" | "phi" => Ok(OrliczFunction::LlogL),
            "expl" | "psi" => Ok(OrliczFunction::ExpL),
            _ => Err(crate::error::param(
                "phi",
                format!("unknown Orlicz function `{s}`"),
            )),
        }
    }
}

/// Result of a Luxemburg-average solve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Luxemburg {
    pub value: f64,
    pub iterations: u32,
    /// `false` when the iteration cap was reached before the bracket closed.
    pub converged: bool,
}

impl Luxemburg {
    fn zero() -> Self {
        Self {
            value: 0.0,
            iterations: 0,
            converged: true,
        }
    }
}

/// `inf { λ > 0 : mean(φ(|g|/λ)) <= 1 }` over `w`.
pub fn luxemburg_average(g: &SampledFn, w: Window, phi: OrliczFunction) -> Luxemburg {
    luxemburg_of(&g.values()[w.first()..=w.last()], phi)
}

/// Luxemburg average of a slice of samples.
pub fn luxemburg_of(vals: &[f64], phi: OrliczFunction) -> Luxemburg {
    let len = vals.len() as f64;
    let mut mean = 0.0;
    let mut top: f64 = 0.0;
    for v in vals {
        mean += v.abs();
        top = top.max(v.abs());
    }
    mean /= len;
    if top == 0.0 {
        return Luxemburg::zero();
    }
    let avg = |lam: f64| vals.iter().map(|v| phi.eval(v.abs() / lam)).sum::<f64>() / len;
    solve(avg, mean)
}

/// Same solve with the window described as `(value, multiplicity)` pairs.
pub(crate) fn luxemburg_weighted(
    levels: &[(f64, f64)],
    len: f64,
    phi: OrliczFunction,
) -> Luxemburg {
    let mut mean = 0.0;
    for &(v, c) in levels {
        mean += v * c;
    }
    mean /= len;
    if mean == 0.0 {
        return Luxemburg::zero();
    }
    let avg = |lam: f64| {
        levels
            .iter()
            .map(|&(v, c)| c * phi.eval(v / lam))
            .sum::<f64>()
            / len
    };
    solve(avg, mean)
}

/// Bracket expansion from `start` then bisection on the feasibility of
/// `avg(λ) <= 1`. `avg` must be nonincreasing in `λ`; overflow to `inf`
/// counts as infeasible.
fn solve(avg: impl Fn(f64) -> f64, start: f64) -> Luxemburg {
    let feasible = |lam: f64| {
        let a = avg(lam);
        a.is_finite() && a <= 1.0
    };
    let mut iterations = 0u32;
    let (mut lo, mut hi);
    if feasible(start) {
        hi = start;
        lo = start / 2.0;
        while feasible(lo) {
            hi = lo;
            lo /= 2.0;
            iterations += 1;
            if iterations >= BISECTION_MAX_ITER {
                return Luxemburg {
                    value: hi,
                    iterations,
                    converged: false,
                };
            }
        }
    } else {
        lo = start;
        hi = start * 2.0;
        while !feasible(hi) {
            lo = hi;
            hi *= 2.0;
            iterations += 1;
            if iterations >= BISECTION_MAX_ITER {
                return Luxemburg {
                    value: hi,
                    iterations,
                    converged: false,
                };
            }
        }
    }
    let mut bisect = 0u32;
    while hi - lo > BISECTION_RTOL * hi {
        if bisect >= BISECTION_MAX_ITER {
            return Luxemburg {
                value: hi,
                iterations: iterations + bisect,
                converged: false,
            };
        }
        let mid = 0.5 * (lo + hi);
        if feasible(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
        bisect += 1;
    }
    Luxemburg {
        value: hi,
        iterations: iterations + bisect,
        converged: true,
    }
}

/// `h Σ |v_k| (1 + log⁺ |v_k|)`.
pub fn zygmund_quasinorm(f: &SampledFn) -> f64 {
    f.h()
        * f.values()
            .iter()
            .map(|v| OrliczFunction::LlogL.eval(v.abs()))
            .sum::<f64>()
}
