//! Mean oscillation: the BMO seminorm, its `L^p` variants, level sets of
//! `|b - b_Q|`, exponential averages and δ-moments.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{param, Error, Result};
use crate::grid::{mean_of, raw_prefix, SampledFn, Window};
use crate::oscillation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BmoMethod {
    /// `sup_Q mean |b - b_Q|`.
    ExactL1,
    /// `sup_Q (mean b² - (mean b)²)^{1/2}`, from prefix sums of `b` and `b²`.
    ProxyL2,
}

impl FromStr for BmoMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact_L1" | "exact_l1" | "l1" => Ok(BmoMethod::ExactL1),
            "proxy_L2" | "proxy_l2" | "l2" => Ok(BmoMethod::ProxyL2),
            _ => Err(param("method", format!("unknown BMO method `{s}`"))),
        }
    }
}

pub fn bmo_seminorm(b: &SampledFn, method: BmoMethod) -> f64 {
    match method {
        BmoMethod::ExactL1 => {
            let mut best: f64 = 0.0;
            oscillation::for_each_window_oscillation(b.values(), |_, _, _, osc| {
                best = best.max(osc);
            });
            best
        }
        BmoMethod::ProxyL2 => {
            let v = b.values();
            let s1 = raw_prefix(v);
            let sq: Vec<f64> = v.iter().map(|x| x * x).collect();
            let s2 = raw_prefix(&sq);
            let n = v.len();
            let mut best: f64 = 0.0;
            for i in 0..n {
                let (mut lo, mut hi) = (v[i], v[i]);
                for j in i..n {
                    lo = lo.min(v[j]);
                    hi = hi.max(v[j]);
                    if lo == hi {
                        continue;
                    }
                    let len = (j - i + 1) as f64;
                    let m = (s1[j + 1] - s1[i]) / len;
                    let m2 = (s2[j + 1] - s2[i]) / len;
                    best = best.max(m2 - m * m);
                }
            }
            best.max(0.0).sqrt()
        }
    }
}

/// `sup_Q (mean |b - b_Q|^p)^{1/p}` by direct summation over every window.
pub fn bmo_p_seminorm(b: &SampledFn, p: f64) -> Result<f64> {
    if !(p >= 1.0) || !p.is_finite() {
        return Err(param(
            "p",
            format!("must be a finite exponent >= 1, got {p}"),
        ));
    }
    let v = b.values();
    let n = v.len();
    let mut best: f64 = 0.0;
    for i in 0..n {
        for j in i..n {
            let w = &v[i..=j];
            let c = mean_of(w);
            let m = w.iter().map(|x| (x - c).abs().powf(p)).sum::<f64>() / w.len() as f64;
            best = best.max(m);
        }
    }
    Ok(best.powf(1.0 / p))
}

/// `h · #{k ∈ w : |b_k - b_w| > λ}`.
pub fn level_set_oscillation_measure(b: &SampledFn, w: Window, lambda: f64) -> f64 {
    let vals = &b.values()[w.first()..=w.last()];
    let c = mean_of(vals);
    b.h() * vals.iter().filter(|x| (*x - c).abs() > lambda).count() as f64
}

/// Exponential average, saturating at `f64::MAX` instead of overflowing.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExpAverage {
    pub value: f64,
    pub saturated: bool,
}

/// `mean_w exp(λ |b - b_w|)`.
pub fn exp_average(b: &SampledFn, w: Window, lambda: f64) -> Result<ExpAverage> {
    if !(lambda > 0.0) {
        return Err(param("lambda", format!("must be positive, got {lambda}")));
    }
    Ok(exp_average_of(&b.values()[w.first()..=w.last()], lambda))
}

fn exp_average_of(vals: &[f64], lambda: f64) -> ExpAverage {
    let c = mean_of(vals);
    let s: f64 = vals.iter().map(|x| (lambda * (x - c).abs()).exp()).sum();
    let value = s / vals.len() as f64;
    if value.is_finite() {
        ExpAverage {
            value,
            saturated: false,
        }
    } else {
        ExpAverage {
            value: f64::MAX,
            saturated: true,
        }
    }
}

/// Largest exponential average over all windows.
pub fn exp_average_sup(b: &SampledFn, lambda: f64) -> Result<ExpAverage> {
    if !(lambda > 0.0) {
        return Err(param("lambda", format!("must be positive, got {lambda}")));
    }
    let mut best: f64 = 1.0;
    let fast = oscillation::for_each_window_exp(b.values(), lambda, |_, _, a| best = best.max(a));
    if fast {
        if best.is_finite() {
            return Ok(ExpAverage {
                value: best,
                saturated: false,
            });
        }
        return Ok(ExpAverage {
            value: f64::MAX,
            saturated: true,
        });
    }
    let v = b.values();
    let mut out = ExpAverage {
        value: 1.0,
        saturated: false,
    };
    for i in 0..v.len() {
        for j in i..v.len() {
            let a = exp_average_of(&v[i..=j], lambda);
            if a.saturated {
                return Ok(a);
            }
            out.value = out.value.max(a.value);
        }
    }
    Ok(out)
}

/// `(1/|w|) h Σ_{k∈w} |b_k - b_w|^δ`, summed directly.
pub fn oscillation_moment(b: &SampledFn, w: Window, delta: f64) -> f64 {
    let vals = &b.values()[w.first()..=w.last()];
    let c = mean_of(vals);
    vals.iter().map(|x| (x - c).abs().powf(delta)).sum::<f64>() / vals.len() as f64
}

/// The same δ-moment through the layer-cake formula
/// `δ ∫_0^∞ λ^{δ-1} m(λ) dλ / |w|`, integrated exactly over the jump set of
/// the level-set measure `m`.
pub fn layer_cake_moment(b: &SampledFn, w: Window, delta: f64) -> f64 {
    let vals = &b.values()[w.first()..=w.last()];
    let c = mean_of(vals);
    let mut jumps: Vec<f64> = vals.iter().map(|x| (x - c).abs()).collect();
    jumps.sort_by(f64::total_cmp);
    let total = jumps.len();
    let measure = b.h() * total as f64;
    // Between consecutive jumps d_{r-1} < λ < d_r the count of |b - b_w| > λ
    // is constant; δ ∫ λ^{δ-1} dλ over that gap is d_r^δ - d_{r-1}^δ.
    let mut acc = 0.0;
    let mut prev = 0.0f64;
    let mut r = 0;
    while r < total {
        let d = jumps[r];
        let above = total - r;
        if d > prev {
            acc += b.h() * above as f64 * (d.powf(delta) - prev.powf(delta));
            prev = d;
        }
        r += 1;
        while r < total && jumps[r] == d {
            r += 1;
        }
    }
    acc / measure
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Grid1D;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn unit(vals: Vec<f64>) -> SampledFn {
        let n = vals.len();
        SampledFn::new(Grid1D::new(0.0, n as f64, n).unwrap(), vals).unwrap()
    }

    fn brute_bmo(b: &SampledFn) -> f64 {
        let v = b.values();
        Window::all(v.len())
            .map(|w| {
                let s = &v[w.first()..=w.last()];
                let c = s.iter().sum::<f64>() / s.len() as f64;
                s.iter().map(|x| (x - c).abs()).sum::<f64>() / s.len() as f64
            })
            .fold(0.0, f64::max)
    }

    #[test]
    fn constants_have_zero_oscillation() {
        let c = unit(vec![3f64.sqrt(); 9]);
        assert_eq!(bmo_seminorm(&c, BmoMethod::ExactL1), 0.0);
        assert_eq!(bmo_seminorm(&c, BmoMethod::ProxyL2), 0.0);
        let w = c.grid().full_window();
        assert_eq!(level_set_oscillation_measure(&c, w, 0.1), 0.0);
        assert_eq!(exp_average(&c, w, 3.0).unwrap().value, 1.0);
        assert_eq!(exp_average_sup(&c, 3.0).unwrap().value, 1.0);
        assert_eq!(oscillation_moment(&c, w, 0.5), 0.0);
        assert_eq!(layer_cake_moment(&c, w, 0.5), 0.0);
    }

    #[test]
    fn two_level_step() {
        let b = unit(vec![0.0, 0.0, 1.0, 1.0]);
        assert_eq!(bmo_seminorm(&b, BmoMethod::ExactL1), 0.5);
        assert!((bmo_seminorm(&b, BmoMethod::ProxyL2) - 0.5).abs() < 1e-15);
        let w = b.grid().full_window();
        assert_eq!(level_set_oscillation_measure(&b, w, 0.4), 4.0);
        assert_eq!(level_set_oscillation_measure(&b, w, 0.6), 0.0);
        let want = 0.5f64.sqrt();
        assert!((oscillation_moment(&b, w, 0.5) - want).abs() < 1e-15);
        assert!((layer_cake_moment(&b, w, 0.5) - want).abs() < 1e-15);
        assert!((bmo_p_seminorm(&b, 2.0).unwrap() - 0.5).abs() < 1e-15);
        assert!((bmo_p_seminorm(&b, 1.0).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn exp_average_examples() {
        let b = unit(vec![0.0, 1.0]);
        let w = b.grid().full_window();
        let e = exp_average(&b, w, 1.0).unwrap();
        assert!((e.value - 0.5f64.exp()).abs() < 1e-15);
        assert!((exp_average_sup(&b, 1.0).unwrap().value - 0.5f64.exp()).abs() < 1e-15);
        let tiny = exp_average(&b, w, 1e-8).unwrap().value;
        assert!((1.0..=1.0 + 1e-6).contains(&tiny));
        assert!(exp_average(&b, w, 0.0).is_err());

        let big = unit(vec![0.0, 5000.0]);
        let s = exp_average(&big, big.grid().full_window(), 1.0).unwrap();
        assert!(s.saturated && s.value == f64::MAX);
        assert!(exp_average_sup(&big, 1.0).unwrap().saturated);
    }

    #[test]
    fn exact_l1_matches_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..40 {
            let n = rng.random_range(1..=30);
            let b = unit((0..n).map(|_| rng.random_range(-2.0..2.0)).collect());
            let fast = bmo_seminorm(&b, BmoMethod::ExactL1);
            assert!((fast - brute_bmo(&b)).abs() < 1e-12);
            assert!((bmo_p_seminorm(&b, 1.0).unwrap() - fast).abs() < 1e-12);
            assert!(bmo_seminorm(&b, BmoMethod::ProxyL2) >= fast - 1e-12);
        }
    }

    #[test]
    fn layer_cake_matches_direct_moment() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..100 {
            let n = rng.random_range(1..=50);
            let b = unit(
                (0..n)
                    .map(|_| rng.random_range(0..5) as f64 * 0.3 - 0.2)
                    .collect(),
            );
            let i = rng.random_range(0..n);
            let j = rng.random_range(i..n);
            let w = Window::new(i, j, n).unwrap();
            let delta = rng.random_range(0.05..1.0);
            let a = oscillation_moment(&b, w, delta);
            let c = layer_cake_moment(&b, w, delta);
            assert!((a - c).abs() <= 1e-8, "{a} {c}");
        }
    }

    #[test]
    fn bmo_p_rejects_bad_exponent() {
        let b = unit(vec![0.0, 1.0]);
        assert!(bmo_p_seminorm(&b, 0.5).is_err());
        assert!(bmo_p_seminorm(&b, f64::INFINITY).is_err());
    }
}
