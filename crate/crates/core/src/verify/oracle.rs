//! Exhaustive-enumeration references. Every `(point, window)` pair is
//! visited and every window sum is formed from scratch, so these share no
//! code path with the operators they check.

use crate::norms::OrliczFunction;

fn direct_mean(w: &[f64]) -> f64 {
    let mut s = 0.0;
    for x in w {
        s += x;
    }
    s / w.len() as f64
}

/// `max_{i <= k <= j} score(i, j)` for every `k`.
fn per_point(n: usize, score: impl Fn(usize, usize, usize) -> f64) -> Vec<f64> {
    (0..n)
        .map(|k| {
            let mut best = f64::NEG_INFINITY;
            for i in 0..=k {
                for j in k..n {
                    best = best.max(score(k, i, j));
                }
            }
            best
        })
        .collect()
}

pub fn maximal(v: &[f64]) -> Vec<f64> {
    let a: Vec<f64> = v.iter().map(|x| x.abs()).collect();
    per_point(v.len(), |_, i, j| direct_mean(&a[i..=j]))
}

pub fn power_maximal(v: &[f64], delta: f64) -> Vec<f64> {
    let a: Vec<f64> = v.iter().map(|x| x.abs().powf(delta)).collect();
    per_point(v.len(), |_, i, j| direct_mean(&a[i..=j]))
        .into_iter()
        .map(|m| m.powf(1.0 / delta))
        .collect()
}

pub fn sharp_maximal(v: &[f64]) -> Vec<f64> {
    per_point(v.len(), |_, i, j| {
        let w = &v[i..=j];
        let c = direct_mean(w);
        let dev: Vec<f64> = w.iter().map(|x| (x - c).abs()).collect();
        direct_mean(&dev)
    })
}

pub fn maximal_commutator(b: &[f64], f: &[f64]) -> Vec<f64> {
    per_point(b.len(), |k, i, j| {
        let g: Vec<f64> = (i..=j).map(|m| (b[k] - b[m]).abs() * f[m].abs()).collect();
        direct_mean(&g)
    })
}

/// Luxemburg average by scanning a geometric λ grid: a coarse pass over
/// `[mean, max / φ⁻¹(1)]`-style bounds, then a second pass inside the
/// bracketing cell. Returns the first feasible λ of the fine pass.
pub fn luxemburg_scan(vals: &[f64], phi: OrliczFunction, points: usize) -> f64 {
    let a: Vec<f64> = vals.iter().map(|x| x.abs()).collect();
    let top = a.iter().copied().fold(0.0, f64::max);
    if top == 0.0 {
        return 0.0;
    }
    let feasible = |lam: f64| {
        let s = a.iter().map(|x| phi.eval(x / lam)).sum::<f64>() / a.len() as f64;
        s.is_finite() && s <= 1.0
    };
    // Both averages lie in [mean |g|, 2 max |g|].
    let mut lo = direct_mean(&a) * 0.5;
    let mut hi = 2.0 * top;
    for _ in 0..2 {
        let r = (hi / lo).ln() / (points - 1) as f64;
        let mut prev = lo;
        let mut found = hi;
        for t in 0..points {
            let lam = lo * (r * t as f64).exp();
            if feasible(lam) {
                found = lam;
                break;
            }
            prev = lam;
        }
        lo = prev;
        hi = found;
    }
    hi
}
