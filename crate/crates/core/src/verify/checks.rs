//! Individual inequality checks. Each returns an [`InequalityReport`];
//! suites assemble them.

use crate::error::{param, Result};
use crate::grid::{Grid1D, SampledFn, Window};
use crate::maximal::{
    commutator_maximal_with, hl_maximal_with, iterated_maximal_with, maximal_commutator,
    maximal_commutator_fast, negative_part, orlicz_maximal, positive_part, power_maximal,
    Algorithm,
};
use crate::norms::{
    bmo_p_seminorm, bmo_seminorm, distribution_measure, exp_average_sup, layer_cake_moment,
    oscillation_moment, zygmund_quasinorm, BmoMethod, OrliczFunction,
};

use super::report::{InequalityReport, SweepRow};

/// Above this many cells `M` switches to the hull algorithm.
pub const SWEEP_MAX_N: usize = 16_384;
/// Above this many cells `C_b` uses the hull-per-point path.
pub const COMMUTATOR_BASELINE_MAX_N: usize = 256;

pub fn maximal_algorithm(n: usize) -> Algorithm {
    if n > SWEEP_MAX_N {
        Algorithm::Hull
    } else {
        Algorithm::Sweep
    }
}

/// `C_b f` through whichever path suits the grid size; both paths are held
/// to the same oracle.
pub fn maximal_commutator_auto(b: &SampledFn, f: &SampledFn) -> Result<SampledFn> {
    if b.len() > COMMUTATOR_BASELINE_MAX_N {
        maximal_commutator_fast(b, f)
    } else {
        maximal_commutator(b, f)
    }
}

/// Passes iff `lhs_k <= c rhs_k + tol (1 + |rhs_k|)` everywhere. Points
/// with `rhs_k <= 0` are left out of the ratio; a nonzero `lhs` there fails.
pub fn check_pointwise_domination(
    name: impl Into<String>,
    lhs: &SampledFn,
    rhs: &SampledFn,
    c: f64,
    tol: f64,
) -> Result<InequalityReport> {
    lhs.ensure_same_grid(rhs)?;
    if !(c > 0.0) {
        return Err(param("c", format!("must be positive, got {c}")));
    }
    let mut rep = InequalityReport::new(name);
    let mut max_ratio: f64 = 0.0;
    let mut violations = 0usize;
    let mut worst_excess: f64 = 0.0;
    let mut excluded = 0usize;
    let mut excluded_nonzero = 0usize;
    let mut lhs_nonzero = false;
    for (&l, &r) in lhs.values().iter().zip(rhs.values()) {
        let slack = tol * (1.0 + r.abs());
        if l > slack {
            lhs_nonzero = true;
        }
        let excess = l - c * r;
        if excess > slack {
            violations += 1;
            worst_excess = worst_excess.max(excess);
        }
        if r > 0.0 {
            max_ratio = max_ratio.max(l / r);
        } else {
            excluded += 1;
            if l > slack {
                excluded_nonzero += 1;
            }
        }
    }
    rep.max_ratio = Some(max_ratio);
    rep.metric("excluded_points", excluded as f64);
    rep.metric("violations", violations as f64);
    rep.metric("worst_excess", worst_excess);
    if excluded == rhs.len() {
        if lhs_nonzero {
            rep.fail("degenerate: rhs vanishes identically while lhs does not");
        } else {
            rep.degenerate("both sides vanish identically");
        }
        return Ok(rep);
    }
    if excluded_nonzero > 0 {
        rep.fail(format!(
            "{excluded_nonzero} point(s) with rhs = 0 carry nonzero lhs"
        ));
    }
    if violations > 0 {
        rep.fail(format!(
            "{violations} violation(s), worst excess {worst_excess:e}"
        ));
    }
    Ok(rep)
}

/// `max_k M_δ(C_b f)_k / (‖b‖_* M²f_k)` and the δ-free `max_k C_b f_k / (‖b‖_* M²f_k)`.
pub fn estimate_domination_constant(
    name: impl Into<String>,
    b: &SampledFn,
    f: &SampledFn,
    delta: f64,
) -> Result<InequalityReport> {
    let name = name.into();
    let mut reps = domination_constants(b, f, &[delta])?;
    let mut rep = reps.pop().expect("one report per delta");
    rep.name = name;
    Ok(rep)
}

/// [`estimate_domination_constant`] for several powers, sharing `C_b f`,
/// `M²f` and `‖b‖_*`. Reports are named `delta=<δ>`.
pub fn domination_constants(
    b: &SampledFn,
    f: &SampledFn,
    deltas: &[f64],
) -> Result<Vec<InequalityReport>> {
    b.ensure_same_grid(f)?;
    for &d in deltas {
        if !(d > 0.0 && d < 1.0) {
            return Err(param("delta", format!("must lie in (0, 1), got {d}")));
        }
    }
    let norm = bmo_seminorm(b, BmoMethod::ExactL1);
    if norm == 0.0 {
        return Ok(deltas
            .iter()
            .map(|d| {
                let mut rep = InequalityReport::new(format!("delta={d}"));
                rep.metric("bmo_norm", 0.0);
                rep.constant = Some(0.0);
                rep.degenerate("symbol has zero BMO seminorm");
                rep
            })
            .collect());
    }
    let cb = maximal_commutator_auto(b, f)?;
    let m2 = iterated_maximal_with(f, maximal_algorithm(f.len()));
    let mut r_free: f64 = 0.0;
    let mut excluded = 0usize;
    for k in 0..f.len() {
        let den = norm * m2.values()[k];
        if den > 0.0 {
            r_free = r_free.max(cb.values()[k] / den);
        } else {
            excluded += 1;
        }
    }
    let mut out = Vec::with_capacity(deltas.len());
    for &delta in deltas {
        let mut rep = InequalityReport::new(format!("delta={delta}"));
        rep.metric("bmo_norm", norm);
        rep.metric("delta", delta);
        let md = power_maximal(&cb, delta)?;
        let mut r_delta: f64 = 0.0;
        let mut stray = 0usize;
        for k in 0..f.len() {
            let den = norm * m2.values()[k];
            if den > 0.0 {
                r_delta = r_delta.max(md.values()[k] / den);
            } else if md.values()[k] > 0.0 {
                stray += 1;
            }
        }
        rep.metric("excluded_points", excluded as f64);
        if excluded == f.len() {
            rep.constant = Some(0.0);
            rep.degenerate("M²f vanishes identically");
            out.push(rep);
            continue;
        }
        if stray > 0 {
            rep.fail(format!(
                "{stray} point(s) with M²f = 0 carry a positive numerator"
            ));
        }
        rep.constant = Some(r_delta);
        rep.max_ratio = Some(r_delta);
        rep.metric("r_delta", r_delta);
        rep.metric("r_delta_free", r_free);
        if !r_delta.is_finite() || !r_free.is_finite() {
            rep.fail("non-finite constant");
        }
        out.push(rep);
    }
    Ok(out)
}

/// `M_ε(Mf) <= M²f` pointwise.
pub fn check_m_eps_sandwich(
    name: impl Into<String>,
    f: &SampledFn,
    eps: f64,
    tol: f64,
) -> Result<InequalityReport> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(param("eps", format!("must lie in (0, 1), got {eps}")));
    }
    let algo = maximal_algorithm(f.len());
    let mf = hl_maximal_with(f, algo);
    let lhs = power_maximal(&mf, eps)?;
    let rhs = hl_maximal_with(&mf, algo);
    check_pointwise_domination(name, &lhs, &rhs, 1.0, tol)
}

/// Band of `M²f / M_{L log L} f` over points where the denominator is positive.
pub fn verify_m2_llogl_equivalence(
    name: impl Into<String>,
    f: &SampledFn,
    bracket: [f64; 2],
) -> InequalityReport {
    let mut rep = InequalityReport::new(name);
    let m2 = iterated_maximal_with(f, maximal_algorithm(f.len()));
    let orl = orlicz_maximal(f, OrliczFunction::LlogL);
    if orl.unconverged_windows > 0 {
        rep.fail(format!(
            "{} Luxemburg solve(s) hit the iteration cap",
            orl.unconverged_windows
        ));
    }
    let mut lo = f64::INFINITY;
    let mut hi: f64 = 0.0;
    for (a, d) in m2.values().iter().zip(orl.output.values()) {
        if *d > 0.0 {
            let r = a / d;
            lo = lo.min(r);
            hi = hi.max(r);
        }
    }
    if lo == f64::INFINITY {
        rep.degenerate("f vanishes identically");
        return rep;
    }
    rep.metric("band_min", lo);
    rep.metric("band_max", hi);
    rep.max_ratio = Some(hi);
    rep.constant = Some(hi.max(1.0 / lo));
    if !(lo >= bracket[0] && hi <= bracket[1]) {
        rep.fail(format!(
            "band [{lo}, {hi}] leaves [{}, {}]",
            bracket[0], bracket[1]
        ));
    }
    rep
}

/// `|{|Tf| > λ}| / ∫ (|f|/λ)(1 + log⁺(|f|/λ))` over a threshold grid.
pub fn weak_type_sweep(
    name: impl Into<String>,
    tf: &SampledFn,
    f: &SampledFn,
    lambdas: &[f64],
    bound: f64,
) -> Result<InequalityReport> {
    tf.ensure_same_grid(f)?;
    let mut rep = InequalityReport::new(name);
    let rows = weak_type_rows(tf, f, lambdas)?;
    let mut max_ratio: f64 = 0.0;
    for r in &rows {
        if r.denominator == 0.0 && r.numerator > 0.0 {
            rep.fail(format!(
                "zero Zygmund integral at λ = {} with positive measure",
                r.lambda
            ));
        } else {
            max_ratio = max_ratio.max(r.ratio);
        }
    }
    rep.set_rows(rows);
    rep.max_ratio = Some(max_ratio);
    rep.constant = Some(max_ratio);
    if !max_ratio.is_finite() || max_ratio > bound {
        rep.fail(format!("max ratio {max_ratio} exceeds bound {bound}"));
    }
    Ok(rep)
}

pub fn weak_type_rows(tf: &SampledFn, f: &SampledFn, lambdas: &[f64]) -> Result<Vec<SweepRow>> {
    tf.ensure_same_grid(f)?;
    lambdas
        .iter()
        .map(|&lambda| {
            if !(lambda > 0.0) {
                return Err(param(
                    "lambda",
                    format!("thresholds must be positive, got {lambda}"),
                ));
            }
            let numerator = distribution_measure(tf, lambda);
            let denominator = zygmund_quasinorm(&f.scale(1.0 / lambda)?);
            let ratio = if denominator > 0.0 {
                numerator / denominator
            } else if numerator == 0.0 {
                0.0
            } else {
                f64::INFINITY
            };
            Ok(SweepRow {
                lambda,
                numerator,
                denominator,
                ratio,
            })
        })
        .collect()
}

/// Least-squares fit of `log m(t)` against `t`, where `m(t)` is the
/// relative measure of `{|b - b_w| > t}` in `w`.
pub fn john_nirenberg_fit(
    name: impl Into<String>,
    b: &SampledFn,
    w: Window,
    ts: &[f64],
    slope_max: f64,
) -> InequalityReport {
    let mut rep = InequalityReport::new(name);
    let vals = &b.values()[w.first()..=w.last()];
    let c = crate::grid::mean_of(vals);
    let mut dev: Vec<f64> = vals.iter().map(|x| (x - c).abs()).collect();
    dev.sort_by(f64::total_cmp);
    let len = dev.len() as f64;
    let mut rows = Vec::with_capacity(ts.len());
    let mut pts = Vec::new();
    for &t in ts {
        let above = dev.len() - dev.partition_point(|&d| d <= t);
        let m = above as f64 / len;
        rows.push(SweepRow {
            lambda: t,
            numerator: above as f64 * b.h(),
            denominator: len * b.h(),
            ratio: m,
        });
        if m > 0.0 {
            pts.push((t, m.ln()));
        }
    }
    rep.set_rows(rows);
    rep.metric("fit_points", pts.len() as f64);
    if pts.len() < 3 {
        rep.degenerate("fewer than three thresholds with positive level-set measure");
        return rep;
    }
    let k = pts.len() as f64;
    let mt = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mt) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mt) * (p.0 - mt)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mt;
    let norm = bmo_seminorm(b, BmoMethod::ExactL1);
    rep.metric("slope", slope);
    rep.metric("intercept", intercept);
    rep.metric("c1", intercept.exp());
    rep.metric("c2", -slope * norm);
    rep.metric("bmo_norm", norm);
    rep.constant = Some(-slope * norm);
    if !(slope <= slope_max) {
        rep.fail(format!("fitted slope {slope} above {slope_max}"));
    }
    rep
}

/// `sup_w mean_w exp(λ |b - b_w|)` at `λ = c / ‖b‖_*`.
pub fn verify_exp_integrability(
    name: impl Into<String>,
    b: &SampledFn,
    c: f64,
) -> Result<InequalityReport> {
    let mut rep = InequalityReport::new(name);
    let norm = bmo_seminorm(b, BmoMethod::ExactL1);
    rep.metric("bmo_norm", norm);
    if norm == 0.0 {
        rep.constant = Some(1.0);
        rep.degenerate("symbol has zero BMO seminorm; every exponential average is 1");
        return Ok(rep);
    }
    let lambda = c / norm;
    let sup = exp_average_sup(b, lambda)?;
    rep.metric("lambda", lambda);
    rep.constant = Some(sup.value);
    if sup.saturated || !sup.value.is_finite() {
        rep.fail("exponential average saturated");
    }
    Ok(rep)
}

/// The δ-moment of `|b - b_w|` directly and through the layer-cake
/// formula, plus the smallest `C` with `m(λ)/|w| <= C λ^{-1} (1 + log⁺(1/λ))`.
pub fn verify_necessity_moment(
    name: impl Into<String>,
    b: &SampledFn,
    w: Window,
    delta: f64,
    tol: f64,
) -> Result<InequalityReport> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(param("delta", format!("must lie in (0, 1), got {delta}")));
    }
    let mut rep = InequalityReport::new(name);
    let direct = oscillation_moment(b, w, delta);
    let cake = layer_cake_moment(b, w, delta);
    rep.metric("direct", direct);
    rep.metric("layer_cake", cake);
    let diff = (direct - cake).abs();
    rep.metric("difference", diff);
    rep.max_ratio = Some(diff);
    if diff > tol * direct.abs().max(1.0) {
        rep.fail(format!("moment routes differ by {diff:e}"));
    }

    let vals = &b.values()[w.first()..=w.last()];
    let c = crate::grid::mean_of(vals);
    let mut dev: Vec<f64> = vals.iter().map(|x| (x - c).abs()).collect();
    dev.sort_by(f64::total_cmp);
    let len = dev.len() as f64;
    // Just below a jump d the level-set count is #{dev >= d}; the profile
    // λ / (1 + log⁺(1/λ)) is increasing, so suprema sit at the jumps.
    let mut shape: f64 = 0.0;
    for (r, &d) in dev.iter().enumerate() {
        if d > 0.0 && (r == 0 || dev[r - 1] != d) {
            let count = dev.len() - r;
            let g = d / (1.0 + (1.0 / d).ln().max(0.0));
            shape = shape.max(count as f64 / len * g);
        }
    }
    rep.constant = Some(shape);
    rep.metric("shape_constant", shape);
    if direct == 0.0 && cake == 0.0 {
        rep.degenerate("flat window: zero oscillation");
    }
    Ok(rep)
}

/// `1 + log⁺(ac) <= (1 + log⁺ a)(1 + log⁺ c)`.
pub fn verify_log_superadditivity(a: f64, c: f64) -> bool {
    let lp = |x: f64| x.ln().max(0.0);
    1.0 + lp(a * c) <= (1.0 + lp(a)) * (1.0 + lp(c))
}

/// The log inequality on a `count × count` geometric grid over `[lo, hi]²`.
pub fn log_superadditivity_grid(
    name: impl Into<String>,
    lo: f64,
    hi: f64,
    count: usize,
) -> InequalityReport {
    let mut rep = InequalityReport::new(name);
    let r = (hi / lo).ln() / (count.max(2) - 1) as f64;
    let pts: Vec<f64> = (0..count).map(|i| lo * (r * i as f64).exp()).collect();
    let mut failures = 0usize;
    let lp = |x: f64| x.ln().max(0.0);
    let mut max_ratio: f64 = 0.0;
    for &a in &pts {
        for &c in &pts {
            if !verify_log_superadditivity(a, c) {
                failures += 1;
            }
            max_ratio = max_ratio.max((1.0 + lp(a * c)) / ((1.0 + lp(a)) * (1.0 + lp(c))));
        }
    }
    rep.max_ratio = Some(max_ratio);
    rep.metric("pairs", (count * count) as f64);
    if failures > 0 {
        rep.fail(format!("{failures} grid pair(s) violate the inequality"));
    }
    rep
}

/// `‖C_b f‖_p / (‖b‖_* ‖f‖_p)` and `‖[M,b]f‖_p / ((‖b⁺‖_* + sup b⁻) ‖f‖_p)`.
pub fn lp_boundedness_ratio(
    name: impl Into<String>,
    b: &SampledFn,
    f: &SampledFn,
    p: f64,
) -> Result<InequalityReport> {
    b.ensure_same_grid(f)?;
    if !(p > 1.0) {
        return Err(param("p", format!("must exceed 1, got {p}")));
    }
    let mut rep = InequalityReport::new(name);
    let fp = f.lp_norm(p);
    let norm = bmo_seminorm(b, BmoMethod::ExactL1);
    let c0 = bmo_seminorm(&positive_part(b), BmoMethod::ExactL1) + negative_part(b).max_abs();
    let cb = maximal_commutator_auto(b, f)?;
    let mb = commutator_maximal_with(b, f, maximal_algorithm(b.len()))?;
    let (cbp, mbp) = (cb.lp_norm(p), mb.lp_norm(p));
    rep.metric("p", p);
    rep.metric("cb_norm", cbp);
    rep.metric("commutator_norm", mbp);
    let mut worst: f64 = 0.0;
    let mut degenerate = Vec::new();
    let tiny = 1e-12 * (1.0 + fp);
    if norm > 0.0 && fp > 0.0 {
        let r = cbp / (norm * fp);
        rep.metric("ratio_cb", r);
        worst = worst.max(r);
    } else if cbp > tiny {
        rep.fail("C_b f nonzero with vanishing denominator");
    } else {
        degenerate.push("‖b‖_* ‖f‖_p = 0");
    }
    if c0 > 0.0 && fp > 0.0 {
        let r = mbp / (c0 * fp);
        rep.metric("ratio_commutator", r);
        worst = worst.max(r);
    } else if mbp > tiny {
        rep.fail("[M,b]f nonzero with vanishing denominator");
    } else {
        degenerate.push("(‖b⁺‖_* + sup b⁻) ‖f‖_p = 0");
    }
    rep.constant = Some(worst);
    rep.max_ratio = Some(worst);
    if !worst.is_finite() {
        rep.fail("non-finite ratio");
    }
    if degenerate.len() == 2 {
        rep.degenerate(degenerate.join("; "));
    }
    Ok(rep)
}

/// `sup_w (mean_w |b - b_w|^p)^{1/p}` against `p = 1`.
pub fn verify_bmo_p_equivalence(
    name: impl Into<String>,
    b: &SampledFn,
    ps: &[f64],
    tol: f64,
) -> Result<InequalityReport> {
    let mut rep = InequalityReport::new(name);
    let base = bmo_p_seminorm(b, 1.0)?;
    rep.metric("bmo_1", base);
    if base == 0.0 {
        rep.degenerate("symbol has zero oscillation");
        return Ok(rep);
    }
    let mut lo = f64::INFINITY;
    let mut hi: f64 = 0.0;
    for &p in ps {
        let v = bmo_p_seminorm(b, p)?;
        rep.metric(format!("bmo_{p}"), v);
        let r = v / base;
        lo = lo.min(r);
        hi = hi.max(r);
    }
    rep.metric("band_min", lo);
    rep.metric("band_max", hi);
    rep.max_ratio = Some(hi);
    rep.constant = Some(hi);
    if !hi.is_finite() || lo < 1.0 - tol {
        rep.fail(format!("band [{lo}, {hi}] breaks the power-mean ordering"));
    }
    Ok(rep)
}

/// Relative change of an empirical constant under grid refinement.
pub fn refinement_check(
    name: impl Into<String>,
    coarse: f64,
    fine: f64,
    rel: f64,
) -> InequalityReport {
    let mut rep = InequalityReport::new(name);
    rep.metric("coarse", coarse);
    rep.metric("fine", fine);
    if coarse == 0.0 && fine == 0.0 {
        rep.degenerate("both constants vanish");
        return rep;
    }
    let change = if coarse != 0.0 {
        (fine - coarse).abs() / coarse.abs()
    } else {
        f64::INFINITY
    };
    rep.metric("relative_change", change);
    rep.max_ratio = Some(change);
    rep.constant = Some(fine);
    if !coarse.is_finite() || !fine.is_finite() || change > rel {
        rep.fail(format!(
            "constant moved from {coarse} to {fine} ({:.1}%)",
            change * 100.0
        ));
    }
    rep
}

/// The weak-(1,1) counterexample: `f = χ_(0,1)`, `b = log|1 + x|` on `[-X, 2]`.
///
/// Checks `Mf` and `M(bf)` against their closed forms on sample points in
/// `[-X, -1/2]` and tabulates `λ |{|[M,b]f| > λ}|`, which must grow by
/// `growth` between the largest and the smallest `λ`.
pub fn example47_report(
    name: impl Into<String>,
    half_width: f64,
    n: usize,
    lambdas: &[f64],
    tol: f64,
    growth: f64,
) -> Result<InequalityReport> {
    let mut rep = InequalityReport::new(name);
    let grid = Grid1D::new(-half_width, 2.0, n)?;
    let f = crate::grid::sample(&crate::grid::Expr::Indicator { u: 0.0, v: 1.0 }, grid)?;
    let b = crate::grid::sample(&crate::grid::Expr::LogShift, grid)?;
    let algo = maximal_algorithm(n);
    let mf = hl_maximal_with(&f, algo);
    let bf = b.zip_with(&f, |x, y| x * y)?;
    let mbf = hl_maximal_with(&bf, algo);
    let k0 = 2.0 * std::f64::consts::LN_2 - 1.0;

    let mut err_mf: f64 = 0.0;
    let mut err_mbf: f64 = 0.0;
    let mut checked = 0usize;
    for k in 0..n {
        let x = grid.x(k);
        if x > -0.5 {
            break;
        }
        checked += 1;
        err_mf = err_mf.max((mf.values()[k] - 1.0 / (1.0 - x)).abs());
        err_mbf = err_mbf.max((mbf.values()[k] - k0 / (1.0 - x)).abs());
    }
    rep.metric("closed_form_points", checked as f64);
    rep.metric("max_err_mf", err_mf);
    rep.metric("max_err_mbf", err_mbf);
    for x in [-1.0, -4.0] {
        if x >= -half_width {
            let k = grid.nearest_index(x);
            rep.metric(format!("mf_at_{x}"), mf.values()[k]);
            rep.metric(format!("mbf_at_{x}"), mbf.values()[k]);
        }
    }
    if checked == 0 {
        rep.fail("no sample points in [-X, -0.5]");
    } else if err_mf > tol || err_mbf > tol {
        rep.fail(format!(
            "closed-form error {} exceeds {tol}",
            err_mf.max(err_mbf)
        ));
    }

    let comm = commutator_maximal_with(&b, &f, algo)?;
    let mut ls = lambdas.to_vec();
    ls.sort_by(f64::total_cmp);
    let rows: Vec<SweepRow> = ls
        .iter()
        .map(|&lambda| {
            let m = distribution_measure(&comm, lambda);
            SweepRow {
                lambda,
                numerator: m,
                denominator: 1.0 / lambda,
                ratio: lambda * m,
            }
        })
        .collect();
    let small = rows.first().map(|r| r.ratio).unwrap_or(0.0);
    let large = rows.last().map(|r| r.ratio).unwrap_or(0.0);
    rep.set_rows(rows);
    let factor = if large > 0.0 {
        small / large
    } else {
        f64::INFINITY
    };
    rep.metric("growth_factor", factor);
    rep.constant = Some(factor);
    rep.max_ratio = Some(small);

    // |[M,b]f| ≈ log|x| / |x| far out, so λ·measure only grows once the
    // domain reaches the scale (1/λ) log(1/λ).
    let lambda_min = ls[0];
    let needed = (1.0 / lambda_min) * (1.0 / lambda_min).ln();
    rep.metric("min_admissible_x", needed);
    if half_width < needed {
        rep.degenerate(format!(
            "X = {half_width} is too small to witness growth at λ = {lambda_min}; need X ≳ {needed:.0}"
        ));
    } else if !(factor >= growth) {
        rep.fail(format!("growth factor {factor} below {growth}"));
    }
    Ok(rep)
}
