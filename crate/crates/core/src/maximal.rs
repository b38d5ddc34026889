//! Maximal operators over the window family: the Hardy–Littlewood operator
//! `M` and its iterate, power and sharp variants, the maximal commutator
//! `C_b`, the commutator `[M, b]` and the Orlicz maximal operator.
//!
//! Every operator returns, at each cell `k`, a maximum over all windows
//! containing `k`. Maxima are exact in floating point, so results do not
//! depend on the order in which windows are visited.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::density;
use crate::error::{param, Error, Result};
use crate::grid::{raw_prefix, SampledFn};
use crate::norms::{luxemburg_of, luxemburg_weighted, OrliczFunction};
use crate::oscillation;

/// How `M` is evaluated. Both give the same maxima; `Hull` is the
/// `O(n log^2 n)` route for grids far beyond a few thousand cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    /// `O(n^2)`: per left end, suffix maxima over right ends.
    #[default]
    Sweep,
    /// Divide and conquer with convex-hull tangent queries.
    Hull,
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sweep" => Ok(Algorithm::Sweep),
            "hull" => Ok(Algorithm::Hull),
            _ => Err(param("algorithm", format!("unknown algorithm `{s}`"))),
        }
    }
}

/// `row[t]` is the value of window `(i, i + t)`; folds its suffix maxima
/// into `out[i..]`.
fn fold_row(out: &mut [f64], i: usize, row: &[f64]) {
    let mut run = f64::NEG_INFINITY;
    for t in (0..row.len()).rev() {
        run = run.max(row[t]);
        let o = &mut out[i + t];
        *o = o.max(run);
    }
}

fn max_mean_sweep(v: &[f64]) -> Vec<f64> {
    let n = v.len();
    let s = raw_prefix(v);
    let mut out = vec![f64::NEG_INFINITY; n];
    let mut row = Vec::with_capacity(n);
    for i in 0..n {
        row.clear();
        row.extend((i..n).map(|j| (s[j + 1] - s[i]) / (j - i + 1) as f64));
        fold_row(&mut out, i, &row);
    }
    out
}

fn abs_values(f: &SampledFn) -> Vec<f64> {
    f.values().iter().map(|v| v.abs()).collect()
}

/// `Mf(x_k) = max_{w ∋ k} mean_w |f|`.
pub fn hl_maximal(f: &SampledFn) -> SampledFn {
    hl_maximal_with(f, Algorithm::Sweep)
}

pub fn hl_maximal_with(f: &SampledFn, algo: Algorithm) -> SampledFn {
    let v = abs_values(f);
    let out = match algo {
        Algorithm::Sweep => max_mean_sweep(&v),
        Algorithm::Hull => density::max_mean_all(&v),
    };
    SampledFn::from_parts(*f.grid(), out)
}

/// Exhaustive enumeration: every window's mean is summed from scratch and
/// written to every cell it covers.
pub fn hl_maximal_bruteforce(f: &SampledFn) -> SampledFn {
    let v = abs_values(f);
    let n = v.len();
    let mut out = vec![f64::NEG_INFINITY; n];
    for i in 0..n {
        for j in i..n {
            let m = v[i..=j].iter().sum::<f64>() / (j - i + 1) as f64;
            for o in &mut out[i..=j] {
                *o = o.max(m);
            }
        }
    }
    SampledFn::from_parts(*f.grid(), out)
}

/// `M²f = M(Mf)`.
pub fn iterated_maximal(f: &SampledFn) -> SampledFn {
    hl_maximal(&hl_maximal(f))
}

pub fn iterated_maximal_with(f: &SampledFn, algo: Algorithm) -> SampledFn {
    hl_maximal_with(&hl_maximal_with(f, algo), algo)
}

fn check_power(delta: f64, open_right: bool) -> Result<()> {
    let ok = delta > 0.0
        && if open_right {
            delta < 1.0
        } else {
            delta <= 1.0
        };
    if ok {
        Ok(())
    } else {
        let range = if open_right { "(0, 1)" } else { "(0, 1]" };
        Err(param("delta", format!("must lie in {range}, got {delta}")))
    }
}

fn powered(f: &SampledFn, delta: f64) -> SampledFn {
    SampledFn::from_parts(
        *f.grid(),
        f.values().iter().map(|v| v.abs().powf(delta)).collect(),
    )
}

fn root(f: SampledFn, delta: f64) -> SampledFn {
    let grid = *f.grid();
    SampledFn::from_parts(
        grid,
        f.into_values()
            .into_iter()
            .map(|v| v.powf(1.0 / delta))
            .collect(),
    )
}

/// `M_δ f = (M |f|^δ)^{1/δ}`, `0 < δ <= 1`.
pub fn power_maximal(f: &SampledFn, delta: f64) -> Result<SampledFn> {
    check_power(delta, false)?;
    Ok(root(hl_maximal(&powered(f, delta)), delta))
}

/// `M#f(x_k) = max_{w ∋ k} mean_w |f - f_w|`, in `O(n^2 log n)`.
pub fn sharp_maximal(f: &SampledFn) -> SampledFn {
    let n = f.len();
    let mut out = vec![f64::NEG_INFINITY; n];
    let mut row = Vec::with_capacity(n);
    oscillation::for_each_window_oscillation(f.values(), |i, j, _, osc| {
        row.push(osc);
        if j == n - 1 {
            fold_row(&mut out, i, &row);
            row.clear();
        }
    });
    SampledFn::from_parts(*f.grid(), out)
}

/// [`sharp_maximal`] by direct summation over every window.
pub fn sharp_maximal_bruteforce(f: &SampledFn) -> SampledFn {
    let v = f.values();
    let n = v.len();
    let mut out = vec![f64::NEG_INFINITY; n];
    for i in 0..n {
        for j in i..n {
            let w = &v[i..=j];
            let c = w.iter().sum::<f64>() / w.len() as f64;
            let osc = w.iter().map(|x| (x - c).abs()).sum::<f64>() / w.len() as f64;
            for o in &mut out[i..=j] {
                *o = o.max(osc);
            }
        }
    }
    SampledFn::from_parts(*f.grid(), out)
}

/// `M#_δ f = (M# |f|^δ)^{1/δ}`, `0 < δ < 1`.
pub fn power_sharp_maximal(f: &SampledFn, delta: f64) -> Result<SampledFn> {
    check_power(delta, true)?;
    Ok(root(sharp_maximal(&powered(f, delta)), delta))
}

fn commutator_kernel(b: &[f64], f: &[f64], k: usize, g: &mut Vec<f64>) {
    g.clear();
    let bk = b[k];
    g.extend(b.iter().zip(f).map(|(bm, fm)| (bk - bm).abs() * fm.abs()));
}

/// `C_b f(x_k) = max_{w ∋ k} mean_{m ∈ w} |b_k - b_m| |f_m|`.
///
/// Baseline: for each `k`, prefix sums of the kernel and a scan of every
/// `(i, j)` with `i <= k <= j`; `O(n^3)` overall.
pub fn maximal_commutator(b: &SampledFn, f: &SampledFn) -> Result<SampledFn> {
    b.ensure_same_grid(f)?;
    let (bv, fv) = (b.values(), f.values());
    let n = bv.len();
    let mut g = Vec::with_capacity(n);
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        commutator_kernel(bv, fv, k, &mut g);
        let s = raw_prefix(&g);
        let mut best = f64::NEG_INFINITY;
        for i in 0..=k {
            for j in k..n {
                best = best.max((s[j + 1] - s[i]) / (j - i + 1) as f64);
            }
        }
        out.push(best);
    }
    Ok(SampledFn::from_parts(*b.grid(), out))
}

/// [`maximal_commutator`] with the per-point window search done by
/// maximum-density-segment hull queries; `O(n^2 log n)` overall.
pub fn maximal_commutator_fast(b: &SampledFn, f: &SampledFn) -> Result<SampledFn> {
    b.ensure_same_grid(f)?;
    let (bv, fv) = (b.values(), f.values());
    let n = bv.len();
    let mut g = Vec::with_capacity(n);
    let out = (0..n)
        .map(|k| {
            commutator_kernel(bv, fv, k, &mut g);
            density::max_mean_containing_prefix(&raw_prefix(&g), k)
        })
        .collect();
    Ok(SampledFn::from_parts(*b.grid(), out))
}

/// `[M, b] f = M(bf) - b Mf`, signed.
pub fn commutator_maximal(b: &SampledFn, f: &SampledFn) -> Result<SampledFn> {
    commutator_maximal_with(b, f, Algorithm::Sweep)
}

pub fn commutator_maximal_with(b: &SampledFn, f: &SampledFn, algo: Algorithm) -> Result<SampledFn> {
    let bf = b.zip_with(f, |x, y| x * y)?;
    let m_bf = hl_maximal_with(&bf, algo);
    let mf = hl_maximal_with(f, algo);
    let out = m_bf
        .values()
        .iter()
        .zip(b.values())
        .zip(mf.values())
        .map(|((mbf, bk), mfk)| mbf - bk * mfk)
        .collect();
    Ok(SampledFn::from_parts(*b.grid(), out))
}

/// Output of [`orlicz_maximal`].
#[derive(Debug, Clone, PartialEq)]
pub struct OrliczMaximal {
    pub output: SampledFn,
    /// Windows whose Luxemburg solve hit the iteration cap.
    pub unconverged_windows: usize,
}

/// Inputs with at most this many distinct nonzero `|f|` levels are solved
/// from per-level counts instead of per-cell sums.
const LEVEL_PATH_MAX: usize = 32;

/// `M_φ f(x_k) = max_{w ∋ k} ‖f‖_{φ,w}`.
pub fn orlicz_maximal(f: &SampledFn, phi: OrliczFunction) -> OrliczMaximal {
    let v = abs_values(f);
    let n = v.len();
    let mut levels: Vec<f64> = v.iter().copied().filter(|&x| x > 0.0).collect();
    levels.sort_by(f64::total_cmp);
    levels.dedup();
    let mut out = vec![f64::NEG_INFINITY; n];
    let mut row = Vec::with_capacity(n);
    let mut unconverged = 0usize;

    if levels.len() <= LEVEL_PATH_MAX {
        // counts[l][t] = #{m < t : |f_m| = levels[l]}
        let counts: Vec<Vec<u32>> = levels
            .iter()
            .map(|&lv| {
                let mut c = Vec::with_capacity(n + 1);
                let mut acc = 0u32;
                c.push(0);
                for &x in &v {
                    acc += (x == lv) as u32;
                    c.push(acc);
                }
                c
            })
            .collect();
        let mut mix: Vec<(f64, f64)> = Vec::with_capacity(levels.len());
        for i in 0..n {
            row.clear();
            for j in i..n {
                mix.clear();
                for (l, c) in counts.iter().enumerate() {
                    let m = c[j + 1] - c[i];
                    if m > 0 {
                        mix.push((levels[l], m as f64));
                    }
                }
                let r = luxemburg_weighted(&mix, (j - i + 1) as f64, phi);
                unconverged += !r.converged as usize;
                row.push(r.value);
            }
            fold_row(&mut out, i, &row);
        }
    } else {
        for i in 0..n {
            row.clear();
            for j in i..n {
                let r = luxemburg_of(&v[i..=j], phi);
                unconverged += !r.converged as usize;
                row.push(r.value);
            }
            fold_row(&mut out, i, &row);
        }
    }
    OrliczMaximal {
        output: SampledFn::from_parts(*f.grid(), out),
        unconverged_windows: unconverged,
    }
}

/// `b⁺ = max(b, 0)`.
pub fn positive_part(b: &SampledFn) -> SampledFn {
    SampledFn::from_parts(*b.grid(), b.values().iter().map(|&v| v.max(0.0)).collect())
}

/// `b⁻ = -min(b, 0)`.
pub fn negative_part(b: &SampledFn) -> SampledFn {
    SampledFn::from_parts(
        *b.grid(),
        b.values()
            .iter()
            .map(|&v| if v < 0.0 { -v } else { 0.0 })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{sample, Expr, Grid1D};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn unit(vals: Vec<f64>) -> SampledFn {
        let n = vals.len();
        SampledFn::new(Grid1D::new(0.0, n as f64, n).unwrap(), vals).unwrap()
    }

    fn random(rng: &mut ChaCha8Rng, n: usize) -> SampledFn {
        unit((0..n).map(|_| rng.random_range(-3.0..3.0)).collect())
    }

    fn close(a: &SampledFn, b: &SampledFn, tol: f64) -> bool {
        a.values()
            .iter()
            .zip(b.values())
            .all(|(x, y)| (x - y).abs() <= tol * (1.0 + y.abs()))
    }

    #[test]
    fn constant_inputs() {
        let c = unit(vec![-3.0; 10]);
        assert!(hl_maximal(&c).values().iter().all(|&v| v == 3.0));
        assert!(hl_maximal_bruteforce(&c).values().iter().all(|&v| v == 3.0));
        assert!(iterated_maximal(&c).values().iter().all(|&v| v == 3.0));
        for d in [0.25, 0.5, 1.0] {
            let p = power_maximal(&c, d).unwrap();
            assert!(p.values().iter().all(|&v| (v - 3.0).abs() < 1e-14));
        }
        assert!(sharp_maximal(&c).values().iter().all(|&v| v == 0.0));
        assert!(power_sharp_maximal(&c, 0.5)
            .unwrap()
            .values()
            .iter()
            .all(|&v| v == 0.0));
    }

    #[test]
    fn small_hand_cases() {
        assert_eq!(
            hl_maximal_bruteforce(&unit(vec![0.0, 4.0, 0.0])).values(),
            &[2.0, 4.0, 2.0]
        );
        assert_eq!(
            hl_maximal(&unit(vec![0.0, 4.0, 0.0])).values(),
            &[2.0, 4.0, 2.0]
        );
        assert_eq!(sharp_maximal(&unit(vec![0.0, 1.0])).values(), &[0.5, 0.5]);

        let b = unit(vec![0.0, 1.0]);
        let f = unit(vec![1.0, 1.0]);
        assert_eq!(maximal_commutator(&b, &f).unwrap().values(), &[0.5, 0.5]);
        assert_eq!(
            maximal_commutator_fast(&b, &f).unwrap().values(),
            &[0.5, 0.5]
        );
    }

    #[test]
    fn indicator_on_example_grid() {
        let g = Grid1D::new(-8.0, 2.0, 5120).unwrap();
        let chi = sample(&Expr::Indicator { u: 0.0, v: 1.0 }, g).unwrap();
        let mf = hl_maximal(&chi);
        let k = g.nearest_index(-1.0);
        assert!((mf.values()[k] - 0.5).abs() < 0.02);
        let m2 = iterated_maximal(&chi);
        assert!(m2.values().iter().zip(mf.values()).all(|(a, b)| a >= b));
        let hull = hl_maximal_with(&chi, Algorithm::Hull);
        assert!(close(&hull, &mf, 1e-12));
    }

    #[test]
    fn coarse_indicator_matches_oracle() {
        let g = Grid1D::new(-1.0, 2.0, 20).unwrap();
        let chi = sample(&Expr::Indicator { u: 0.0, v: 1.0 }, g).unwrap();
        assert_eq!(hl_maximal(&chi), hl_maximal_bruteforce(&chi));
    }

    #[test]
    fn delta_one_is_plain_maximal() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let f = random(&mut rng, 33);
        assert_eq!(power_maximal(&f, 1.0).unwrap(), hl_maximal(&f));
        assert!(power_maximal(&f, 0.0).is_err());
        assert!(power_maximal(&f, 1.5).is_err());
        assert!(power_sharp_maximal(&f, 1.0).is_err());
    }

    #[test]
    fn commutator_with_constant_symbols() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let f = random(&mut rng, 40);
        let beta = SampledFn::constant(*f.grid(), 2.5).unwrap();
        let c = maximal_commutator(&beta, &f).unwrap();
        assert!(c.values().iter().all(|&v| v == 0.0));
        let mb = commutator_maximal(&beta, &f).unwrap();
        assert!(mb.values().iter().all(|v| v.abs() < 1e-12));
        let minus = SampledFn::constant(*f.grid(), -1.0).unwrap();
        let mb = commutator_maximal(&minus, &f).unwrap();
        let mf = hl_maximal(&f);
        for (a, b) in mb.values().iter().zip(mf.values()) {
            assert!((a - 2.0 * b).abs() < 1e-12);
        }
    }

    #[test]
    fn commutator_scaling_in_symbol() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let b = random(&mut rng, 30);
        let f = random(&mut rng, 30);
        let lhs = maximal_commutator(&b.scale(-2.0).unwrap(), &f).unwrap();
        let rhs = maximal_commutator(&b, &f).unwrap().scale(2.0).unwrap();
        assert!(close(&lhs, &rhs, 1e-12));
    }

    #[test]
    fn grid_mismatch_rejected() {
        let a = unit(vec![1.0; 4]);
        let b = unit(vec![1.0; 5]);
        assert!(matches!(
            maximal_commutator(&a, &b),
            Err(Error::GridMismatch)
        ));
        assert!(matches!(
            commutator_maximal(&a, &b),
            Err(Error::GridMismatch)
        ));
        assert!(matches!(
            maximal_commutator_fast(&a, &b),
            Err(Error::GridMismatch)
        ));
    }

    #[test]
    fn orlicz_maximal_closed_forms() {
        let one = unit(vec![1.0; 12]);
        let e = orlicz_maximal(&one, OrliczFunction::ExpL);
        assert_eq!(e.unconverged_windows, 0);
        assert!(e
            .output
            .values()
            .iter()
            .all(|v| (v - 1.0 / std::f64::consts::LN_2).abs() < 1e-9));

        let g = Grid1D::new(-1.0, 2.0, 30).unwrap();
        let chi = sample(&Expr::Indicator { u: 0.0, v: 1.0 }, g).unwrap();
        let m = orlicz_maximal(&chi, OrliczFunction::LlogL).output;
        for k in 0..30 {
            let x = g.x(k);
            if 0.0 < x && x < 1.0 {
                assert!((m.values()[k] - 1.0).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn orlicz_level_path_matches_direct_path() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        // 3 levels -> level path; 40 distinct values -> direct path.
        let few = unit(
            (0..20)
                .map(|_| rng.random_range(0..4) as f64 * 0.7)
                .collect(),
        );
        let lv = orlicz_maximal(&few, OrliczFunction::LlogL).output;
        let v = few.values();
        for k in 0..v.len() {
            let mut best: f64 = 0.0;
            for i in 0..=k {
                for j in k..v.len() {
                    best = best.max(luxemburg_of(&v[i..=j], OrliczFunction::LlogL).value);
                }
            }
            assert!((lv.values()[k] - best).abs() <= 1e-9 * best.max(1.0));
        }
    }

    #[test]
    fn parts_reconstruct() {
        let b = unit(vec![-1.0, 2.0]);
        assert_eq!(positive_part(&b).values(), &[0.0, 2.0]);
        assert_eq!(negative_part(&b).values(), &[1.0, 0.0]);
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let r = random(&mut rng, 50);
        let (p, m) = (positive_part(&r), negative_part(&r));
        for k in 0..50 {
            assert_eq!(p.values()[k] - m.values()[k], r.values()[k]);
            assert_eq!(p.values()[k] + m.values()[k], r.values()[k].abs());
        }
        assert!(negative_part(&unit(vec![0.0, 3.0]))
            .values()
            .iter()
            .all(|&v| v == 0.0));
    }
}
