//! Named collections of checks over seeded corpora.

use rand::Rng;

use crate::corpus::{gen, rng, CorpusSpec, Generator};
use crate::error::{param, Error, Result};
use crate::grid::{window_average, Grid1D, SampledFn, Window};
use crate::maximal::{
    commutator_maximal_with, hl_maximal, hl_maximal_with, iterated_maximal_with,
    maximal_commutator, maximal_commutator_fast, negative_part, power_maximal, sharp_maximal,
    Algorithm,
};
use crate::norms::{luxemburg_average, luxemburg_of, OrliczFunction};

use super::checks::*;
use super::config::VerifyConfig;
use super::oracle;
use super::report::{InequalityReport, ReportBundle};

pub const SUITES: [&str; 8] = [
    "exact",
    "domination",
    "weaktype",
    "jn",
    "orlicz",
    "lp",
    "example47",
    "all",
];

/// A symbol `b` and an input `f` on one grid.
#[derive(Debug, Clone, PartialEq)]
pub struct CorpusPair {
    pub name: String,
    pub b: CorpusSpec,
    pub f: CorpusSpec,
}

impl CorpusPair {
    fn new(name: &str, b: Generator, f: Generator, grid: Grid1D) -> Self {
        Self {
            name: name.to_string(),
            b: CorpusSpec::new(b, grid),
            f: CorpusSpec::new(f, grid),
        }
    }

    fn seeds(mut self, b: u64, f: u64) -> Self {
        self.b.seed = b;
        self.f.seed = f;
        self
    }

    pub fn sample(&self) -> Result<(SampledFn, SampledFn)> {
        Ok((gen(&self.b)?, gen(&self.f)?))
    }

    /// The same pair with `h -> h/2`.
    pub fn refined(&self) -> Self {
        Self {
            name: self.name.clone(),
            b: self.b.on(self.b.grid.refined()),
            f: self.f.on(self.f.grid.refined()),
        }
    }

    /// Consecutive manifest entries taken as `(b, f)` pairs.
    pub fn from_manifest(specs: &[CorpusSpec]) -> Result<Vec<CorpusPair>> {
        if !specs.len().is_multiple_of(2) {
            return Err(Error::Format(format!(
                "corpus manifest must list (b, f) pairs; got {} entries",
                specs.len()
            )));
        }
        specs
            .chunks(2)
            .enumerate()
            .map(|(i, c)| {
                if c[0].grid != c[1].grid {
                    return Err(Error::GridMismatch);
                }
                Ok(CorpusPair {
                    name: format!("{i:02}:{}|{}", c[0].label(), c[1].label()),
                    b: c[0].clone(),
                    f: c[1].clone(),
                })
            })
            .collect()
    }
}

fn grid(a: f64, b: f64, n: usize) -> Grid1D {
    Grid1D::new(a, b, n).expect("static grid")
}

/// Fixed pairs for the empirical-constant suites. Singularities sit on
/// cell boundaries at every refinement level.
pub fn standard_pairs() -> Vec<CorpusPair> {
    use Generator::*;
    vec![
        CorpusPair::new(
            "log_shift_indicator",
            LogShift,
            Indicator { u: 0.0, v: 1.0 },
            grid(-8.0, 2.0, 2560),
        ),
        CorpusPair::new(
            "log_sing_gauss",
            LogSing { c: 0.25 },
            Gauss {
                center: 0.0,
                width: 0.5,
            },
            grid(-2.0, 2.0, 512),
        ),
        CorpusPair::new(
            "random_steps",
            RandomStep {
                levels: 4,
                blocks: 16,
            },
            RandomStep {
                levels: 3,
                blocks: 8,
            },
            grid(0.0, 1.0, 512),
        )
        .seeds(3, 5),
        CorpusPair::new(
            "lacunary_indicator",
            LacunaryBmo { terms: 5 },
            Indicator { u: -0.5, v: 0.5 },
            grid(-4.0, 4.0, 512),
        )
        .seeds(11, 0),
        CorpusPair::new(
            "constant_symbol",
            Constant { value: 1.0 },
            Gauss {
                center: 0.0,
                width: 0.5,
            },
            grid(-2.0, 2.0, 512),
        ),
    ]
}

/// Random pairs for the exact suite, `n` cells on `[0, 1]`.
pub fn random_pairs(seed: u64, count: usize, n: usize) -> Result<Vec<CorpusPair>> {
    use Generator::*;
    let g = Grid1D::new(0.0, 1.0, n)?;
    (0..count)
        .map(|i| {
            let b = match i % 4 {
                0 => Uniform { lo: -2.0, hi: 2.0 },
                1 => RandomStep {
                    levels: 5,
                    blocks: prev_pow2(n).min(16),
                },
                2 => LacunaryBmo { terms: 6 },
                _ => LogSing { c: 0.5 },
            };
            let f = match i % 3 {
                0 => Uniform { lo: -1.0, hi: 1.0 },
                1 => RandomStep {
                    levels: 4,
                    blocks: prev_pow2(n).min(8),
                },
                _ => Gauss {
                    center: 0.5,
                    width: 0.1,
                },
            };
            let base = seed.wrapping_mul(1_000_003).wrapping_add(2 * i as u64);
            Ok(CorpusPair::new(&format!("pair{i:03}"), b, f, g).seeds(base, base + 1))
        })
        .collect()
}

fn prev_pow2(x: usize) -> usize {
    if x.is_power_of_two() {
        x
    } else {
        x.next_power_of_two() / 2
    }
}

fn sub<'a>(group: &str, parts: impl IntoIterator<Item = &'a str>) -> String {
    let mut s = group.to_string();
    for p in parts {
        s.push('/');
        s.push_str(p);
    }
    s
}

/// Case name `group/check`, aggregated over all pairs.
struct Collector {
    group: String,
    buckets: std::collections::BTreeMap<String, Vec<InequalityReport>>,
}

impl Collector {
    fn new(group: &str) -> Self {
        Self {
            group: group.to_string(),
            buckets: Default::default(),
        }
    }

    fn push(&mut self, check: &str, rep: InequalityReport) {
        self.buckets.entry(check.to_string()).or_default().push(rep);
    }

    fn finish(self) -> Vec<InequalityReport> {
        self.buckets
            .into_iter()
            .map(|(check, parts)| {
                InequalityReport::aggregate(sub(&self.group, [check.as_str()]), &parts)
            })
            .collect()
    }
}

/// Every discrete inequality that holds exactly on the grid, over
/// `cfg.pairs` random pairs.
pub fn exact_cases(cfg: &VerifyConfig) -> Result<Vec<InequalityReport>> {
    let tol = cfg.tolerances.exact_tol;
    let mut col = Collector::new("exact");
    let mut wr = rng(cfg.seed ^ 0x5eed);
    for pair in random_pairs(cfg.seed, cfg.pairs, cfg.exact_n)? {
        let (b, f) = pair.sample()?;
        let tag = pair.name.as_str();
        let mf = hl_maximal(&f);

        let cb = maximal_commutator(&b, &f)?;
        let comm = commutator_maximal_with(&b, &f, Algorithm::Sweep)?;
        let two_bminus_mf = negative_part(&b).zip_with(&mf, |x, y| 2.0 * x * y)?;
        let rhs = cb.zip_with(&two_bminus_mf, |x, y| x + y)?;
        col.push(
            "commutator_bound",
            check_pointwise_domination(tag, &comm.abs(), &rhs, 1.0, tol)?,
        );

        // g = b is an independent random function on the same grid.
        let mg = hl_maximal(&b);
        let lhs = mf.zip_with(&mg, |x, y| (x - y).abs())?;
        let diff = f.zip_with(&b, |x, y| x - y)?;
        col.push(
            "maximal_lipschitz",
            check_pointwise_domination(tag, &lhs, &hl_maximal(&diff), 1.0, tol)?,
        );

        let bp = b.abs();
        let comm_p = commutator_maximal_with(&bp, &f, Algorithm::Sweep)?;
        let cb_p = maximal_commutator(&bp, &f)?;
        col.push(
            "commutator_by_maximal_commutator",
            check_pointwise_domination(tag, &comm_p.abs(), &cb_p, 1.0, tol)?,
        );
        col.push(
            "abs_symbol",
            check_pointwise_domination(tag, &cb_p, &cb, 1.0, tol)?,
        );

        col.push(
            "sharp_by_maximal",
            check_pointwise_domination(tag, &sharp_maximal(&f), &mf, 2.0, tol)?,
        );
        col.push(
            "maximal_majorant",
            check_pointwise_domination(tag, &f.abs(), &mf, 1.0, tol)?,
        );

        for &d in &cfg.deltas {
            let md = power_maximal(&cb, d)?;
            col.push(
                &format!("power_maximal_majorant/delta={d}"),
                check_pointwise_domination(tag, &cb, &md, 1.0, tol)?,
            );
        }
        for &e in &cfg.eps {
            col.push(
                &format!("m_eps_sandwich/eps={e}"),
                check_m_eps_sandwich(tag, &f, e, tol)?,
            );
        }
        let n = b.len();
        let i = wr.random_range(0..n);
        let j = wr.random_range(i..n);
        for (wname, w) in [
            ("full", b.grid().full_window()),
            ("random", Window::new(i, j, n)?),
        ] {
            for &d in &cfg.deltas {
                col.push(
                    &format!("layer_cake/{wname}/delta={d}"),
                    verify_necessity_moment(tag, &b, w, d, cfg.tolerances.layer_cake_tol)?,
                );
            }
        }
    }
    Ok(col.finish())
}

fn oracle_agreement(name: &str, got: &[f64], want: &[f64], tol: f64) -> InequalityReport {
    let mut rep = InequalityReport::new(name);
    let mut worst: f64 = 0.0;
    let mut bad = 0usize;
    for (g, w) in got.iter().zip(want) {
        let e = (g - w).abs() / (1.0 + w.abs());
        worst = worst.max(e);
        if !(e <= tol) {
            bad += 1;
        }
    }
    rep.max_ratio = Some(worst);
    if got.len() != want.len() {
        rep.fail(format!("length {} vs oracle {}", got.len(), want.len()));
    }
    if bad > 0 {
        rep.fail(format!(
            "{bad} point(s) off the oracle, worst scaled error {worst:e}"
        ));
    }
    rep
}

/// Fast operators against exhaustive enumeration on small random grids.
pub fn oracle_cases(cfg: &VerifyConfig) -> Result<Vec<InequalityReport>> {
    let tol = cfg.tolerances.oracle_tol;
    let mut col = Collector::new("oracle");
    let mut r = rng(cfg.seed ^ 0x0ac1e);
    for inst in 0..cfg.oracle_instances {
        let n = r.random_range(1..=cfg.oracle_max_n);
        let g = Grid1D::new(0.0, 1.0, n)?;
        let draw = |r: &mut rand_chacha::ChaCha8Rng| -> Vec<f64> {
            match r.random_range(0..3) {
                0 => (0..n).map(|_| r.random_range(-1.0..1.0)).collect(),
                1 => (0..n).map(|_| r.random_range(0..4) as f64).collect(),
                _ => (0..n).map(|_| r.random_range(-3.0f64..3.0).exp()).collect(),
            }
        };
        let f = SampledFn::new(g, draw(&mut r))?;
        let b = SampledFn::new(g, draw(&mut r))?;
        let tag = format!("instance{inst:03}");
        let v = f.values();
        let m = oracle::maximal(v);
        col.push(
            "hl_maximal/sweep",
            oracle_agreement(&tag, hl_maximal(&f).values(), &m, tol),
        );
        col.push(
            "hl_maximal/hull",
            oracle_agreement(&tag, hl_maximal_with(&f, Algorithm::Hull).values(), &m, tol),
        );
        col.push(
            "sharp_maximal",
            oracle_agreement(
                &tag,
                sharp_maximal(&f).values(),
                &oracle::sharp_maximal(v),
                tol,
            ),
        );
        for &d in &cfg.deltas {
            col.push(
                &format!("power_maximal/delta={d}"),
                oracle_agreement(
                    &tag,
                    power_maximal(&f, d)?.values(),
                    &oracle::power_maximal(v, d),
                    tol,
                ),
            );
        }
        let c = oracle::maximal_commutator(b.values(), v);
        col.push(
            "maximal_commutator/baseline",
            oracle_agreement(&tag, maximal_commutator(&b, &f)?.values(), &c, tol),
        );
        col.push(
            "maximal_commutator/fast",
            oracle_agreement(&tag, maximal_commutator_fast(&b, &f)?.values(), &c, tol),
        );
    }
    Ok(col.finish())
}

fn per_delta_names(deltas: &[f64]) -> Vec<String> {
    deltas.iter().map(|d| format!("delta={d}")).collect()
}

/// Domination constants `R(δ)` and the δ-free `R`, with refinement
/// checks, plus the `M² ≈ M_{L log L}` band.
pub fn domination_cases(cfg: &VerifyConfig, pairs: &[CorpusPair]) -> Result<Vec<InequalityReport>> {
    let rel = cfg.tolerances.refinement_rel;
    let mut out = Vec::new();
    for pair in pairs {
        let (b, f) = pair.sample()?;
        let (b2, f2) = pair.refined().sample()?;
        let coarse = domination_constants(&b, &f, &cfg.deltas)?;
        let fine = domination_constants(&b2, &f2, &cfg.deltas)?;
        for ((c, fi), dn) in coarse
            .into_iter()
            .zip(fine)
            .zip(per_delta_names(&cfg.deltas))
        {
            let base = sub("domination", [pair.name.as_str(), dn.as_str()]);
            let degenerate = c.verdict == super::report::Verdict::Degenerate;
            if degenerate {
                out.push(InequalityReport { name: base, ..c });
                continue;
            }
            let rc = c.metrics["r_delta"];
            let rf = fi.metrics["r_delta"];
            let fc = c.metrics["r_delta_free"];
            let ff = fi.metrics["r_delta_free"];
            out.push(refinement_check(format!("{base}/refinement"), rc, rf, rel));
            if dn == per_delta_names(&cfg.deltas)[0] {
                let free = sub("domination", [pair.name.as_str(), "delta_free"]);
                out.push(refinement_check(format!("{free}/refinement"), fc, ff, rel));
            }
            out.push(InequalityReport { name: base, ..c });
        }
        for &e in &cfg.eps {
            out.push(check_m_eps_sandwich(
                sub(
                    "domination",
                    [pair.name.as_str(), &format!("m_eps_sandwich/eps={e}")],
                ),
                &f,
                e,
                cfg.tolerances.exact_tol,
            )?);
        }
    }
    out.extend(m2_llogl_cases(cfg, pairs)?);
    Ok(out)
}

fn m2_llogl_cases(cfg: &VerifyConfig, pairs: &[CorpusPair]) -> Result<Vec<InequalityReport>> {
    let bracket = cfg.m2_llogl_bracket;
    let mut out = Vec::new();
    for pair in pairs {
        // The per-cell Luxemburg path is cubic; keep smooth inputs small.
        let mut spec = pair.f.clone();
        if !matches!(
            spec.generator,
            Generator::Indicator { .. } | Generator::RandomStep { .. } | Generator::Constant { .. }
        ) && spec.grid.n() > 256
        {
            spec = spec.on(Grid1D::new(spec.grid.a(), spec.grid.b(), 256)?);
        }
        let f = gen(&spec)?;
        out.push(verify_m2_llogl_equivalence(
            sub("m2_llogl", [pair.name.as_str()]),
            &f,
            bracket,
        ));
    }
    let g = Grid1D::new(0.0, 1.0, 128)?;
    let random: Vec<InequalityReport> = (0..20u64)
        .map(|i| {
            let spec = CorpusSpec::new(Generator::Uniform { lo: 0.0, hi: 1.0 }, g)
                .with_seed(cfg.seed * 100 + i);
            Ok(verify_m2_llogl_equivalence(
                format!("uniform{i:02}"),
                &gen(&spec)?,
                bracket,
            ))
        })
        .collect::<Result<_>>()?;
    let mut agg = InequalityReport::aggregate("m2_llogl/random_uniform", &random);
    let lo = random
        .iter()
        .filter_map(|r| r.metrics.get("band_min"))
        .fold(f64::INFINITY, |a, &b| a.min(b));
    let hi = random
        .iter()
        .filter_map(|r| r.metrics.get("band_max"))
        .fold(0.0f64, |a, &b| a.max(b));
    agg.metric("band_min", lo);
    agg.metric("band_max", hi);
    out.push(agg);
    Ok(out)
}

/// Weak-type sweeps for `M²`, `C_b` and `|[M,b]f|` with refinement checks,
/// the δ-moment computation and the log inequality.
pub fn weaktype_cases(cfg: &VerifyConfig, pairs: &[CorpusPair]) -> Result<Vec<InequalityReport>> {
    let lambdas = cfg.lambda_grid.points();
    let rel = cfg.tolerances.refinement_rel;
    let mut out = Vec::new();
    for pair in pairs {
        let mut maxima: Vec<Vec<(String, InequalityReport)>> = Vec::new();
        for p in [pair.clone(), pair.refined()] {
            let (b, f) = p.sample()?;
            let algo = maximal_algorithm(f.len());
            let ops = [
                ("M2", iterated_maximal_with(&f, algo)),
                ("Cb", maximal_commutator_auto(&b, &f)?),
                ("commutator", commutator_maximal_with(&b, &f, algo)?.abs()),
            ];
            let mut level = Vec::new();
            for (op, tf) in ops {
                let name = sub("weaktype", [pair.name.as_str(), op]);
                level.push((
                    name.clone(),
                    weak_type_sweep(name, &tf, &f, &lambdas, cfg.weak_type_bound)?,
                ));
            }
            maxima.push(level);
        }
        let fine = maxima.pop().expect("two levels");
        let coarse = maxima.pop().expect("two levels");
        for ((name, c), (_, fi)) in coarse.into_iter().zip(fine) {
            let rc = c.max_ratio.unwrap_or(0.0);
            let rf = fi.max_ratio.unwrap_or(0.0);
            let mut r = refinement_check(format!("{name}/refinement"), rc, rf, rel);
            if fi.failed() {
                r.fail("refined sweep failed");
            }
            out.push(r);
            out.push(c);
        }
        let b = gen(&pair.b)?;
        for &d in &cfg.deltas {
            out.push(verify_necessity_moment(
                sub(
                    "necessity_moment",
                    [pair.name.as_str(), &format!("delta={d}")],
                ),
                &b,
                b.grid().full_window(),
                d,
                cfg.tolerances.layer_cake_tol,
            )?);
        }
    }
    out.push(log_superadditivity_grid(
        "log_superadditivity",
        1e-4,
        1e4,
        100,
    ));
    Ok(out)
}

/// John–Nirenberg fit and exponential integrability for `log|x|` on
/// `[-1, 1]`, plus the BMO(p) ordering on small corpus symbols.
pub fn jn_cases(cfg: &VerifyConfig, pairs: &[CorpusPair]) -> Result<Vec<InequalityReport>> {
    let ts = cfg.t_grid.points();
    let mut out = Vec::new();
    let g = Grid1D::new(-1.0, 1.0, 4096)?;
    let b = gen(&CorpusSpec::new(Generator::LogSing { c: 0.0 }, g))?;
    out.push(john_nirenberg_fit(
        "jn/log_abs/fit",
        &b,
        g.full_window(),
        &ts,
        cfg.jn_slope_max,
    ));
    out.push(verify_exp_integrability(
        "jn/log_abs/exp_integrability",
        &b,
        cfg.exp_c,
    )?);
    for pair in pairs {
        let b = gen(&pair.b)?;
        // Corpus symbols are bounded; their slopes are recorded, not judged.
        out.push(john_nirenberg_fit(
            sub("jn", [pair.name.as_str(), "fit"]),
            &b,
            b.grid().full_window(),
            &ts,
            f64::INFINITY,
        ));
        out.push(verify_exp_integrability(
            sub("jn", [pair.name.as_str(), "exp_integrability"]),
            &b,
            cfg.exp_c,
        )?);
        let small = gen(&pair
            .b
            .on(Grid1D::new(pair.b.grid.a(), pair.b.grid.b(), 128)?))?;
        let mut ps = vec![1.0];
        ps.extend(cfg.p_list.iter().copied());
        out.push(verify_bmo_p_equivalence(
            sub("bmo_p", [pair.name.as_str()]),
            &small,
            &ps,
            cfg.tolerances.exact_tol,
        )?);
    }
    Ok(out)
}

/// Luxemburg solver against the scan oracle, the generalized Hölder
/// inequality and the closed forms on constant input.
pub fn orlicz_cases(cfg: &VerifyConfig) -> Result<Vec<InequalityReport>> {
    let tol = cfg.tolerances.luxemburg_oracle_tol;
    let mut r = rng(cfg.seed ^ 0x0e11c2);
    let g = Grid1D::new(0.0, 1.0, 128)?;
    let mut oracle_parts = Vec::new();
    let mut holder_parts = Vec::new();
    for s in 0..cfg.orlicz_samples {
        let f = SampledFn::new(
            g,
            (0..128)
                .map(|_| r.random_range(0.0f64..3.0).powi(2))
                .collect(),
        )?;
        let gg = SampledFn::new(g, (0..128).map(|_| r.random_range(-2.0..2.0)).collect())?;
        let i = r.random_range(0..128);
        let j = r.random_range(i..128);
        let w = Window::new(i, j, 128)?;
        let tag = format!("sample{s:03}");

        let phi = if s % 2 == 0 {
            OrliczFunction::LlogL
        } else {
            OrliczFunction::ExpL
        };
        let vals = &f.values()[i..=j];
        let got = luxemburg_of(vals, phi);
        let want = oracle::luxemburg_scan(vals, phi, 10_000);
        let mut rep = InequalityReport::new(&tag);
        let err = (got.value - want).abs() / want.abs().max(f64::MIN_POSITIVE);
        rep.max_ratio = Some(err);
        if !got.converged {
            rep.fail("bisection hit the iteration cap");
        }
        if !(err <= tol) {
            rep.fail(format!("relative error {err:e} against the scan oracle"));
        }
        oracle_parts.push(rep);

        let lhs = window_average(&f.zip_with(&gg, |a, b| (a * b).abs())?, w);
        let rhs = luxemburg_average(&f, w, OrliczFunction::LlogL).value
            * luxemburg_average(&gg, w, OrliczFunction::ExpL).value;
        let mut rep = InequalityReport::new(&tag);
        rep.max_ratio = Some(if rhs > 0.0 { lhs / rhs } else { 0.0 });
        if lhs > rhs * (1.0 + cfg.tolerances.holder_tol) {
            rep.fail(format!("{lhs} > {rhs}"));
        }
        holder_parts.push(rep);
    }
    let mut out = vec![
        InequalityReport::aggregate("orlicz/luxemburg_oracle", &oracle_parts),
        InequalityReport::aggregate("orlicz/generalized_holder", &holder_parts),
    ];
    let ones = SampledFn::constant(g, 1.0)?;
    for (phi, want) in [
        (OrliczFunction::ExpL, 1.0 / std::f64::consts::LN_2),
        (OrliczFunction::LlogL, 1.0),
    ] {
        let got = luxemburg_average(&ones, g.full_window(), phi).value;
        let mut rep = InequalityReport::new(format!("orlicz/closed_form/{phi}"));
        rep.constant = Some(got);
        rep.max_ratio = Some((got - want).abs());
        if !((got - want).abs() <= cfg.tolerances.closed_form_tol) {
            rep.fail(format!("{got} vs {want}"));
        }
        out.push(rep);
    }
    Ok(out)
}

/// `L_p` ratios over the corpus with refinement checks.
pub fn lp_cases(cfg: &VerifyConfig, pairs: &[CorpusPair]) -> Result<Vec<InequalityReport>> {
    let rel = cfg.tolerances.refinement_rel;
    let mut out = Vec::new();
    for pair in pairs {
        let (b, f) = pair.sample()?;
        let (b2, f2) = pair.refined().sample()?;
        for &p in &cfg.p_list {
            let name = sub("lp", [pair.name.as_str(), &format!("p={p}")]);
            let c = lp_boundedness_ratio(&name, &b, &f, p)?;
            let fi = lp_boundedness_ratio(&name, &b2, &f2, p)?;
            for key in ["ratio_cb", "ratio_commutator"] {
                if let (Some(&x), Some(&y)) = (c.metrics.get(key), fi.metrics.get(key)) {
                    out.push(refinement_check(
                        format!("{name}/{key}/refinement"),
                        x,
                        y,
                        rel,
                    ));
                }
            }
            out.push(c);
        }
    }
    Ok(out)
}

pub fn example47_cases(cfg: &VerifyConfig) -> Result<Vec<InequalityReport>> {
    Ok(vec![example47_report(
        "example47",
        cfg.example_x,
        cfg.example_n,
        &cfg.example_lambdas,
        cfg.tolerances.example_tol,
        cfg.example_growth,
    )?])
}

/// Runs a named suite over the standard corpus.
pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Result<ReportBundle> {
    run_suite_with(name, cfg, &standard_pairs())
}

/// Runs a named suite; `pairs` replaces the standard corpus where one is used.
pub fn run_suite_with(
    name: &str,
    cfg: &VerifyConfig,
    pairs: &[CorpusPair],
) -> Result<ReportBundle> {
    cfg.validate()?;
    let cases = match name {
        "exact" => {
            let mut v = exact_cases(cfg)?;
            v.extend(oracle_cases(cfg)?);
            v
        }
        "domination" => domination_cases(cfg, pairs)?,
        "weaktype" => weaktype_cases(cfg, pairs)?,
        "jn" => jn_cases(cfg, pairs)?,
        "orlicz" => orlicz_cases(cfg)?,
        "lp" => lp_cases(cfg, pairs)?,
        "example47" => example47_cases(cfg)?,
        "all" => {
            let mut v = Vec::new();
            for s in &SUITES[..SUITES.len() - 1] {
                v.extend(run_suite_with(s, cfg, pairs)?.cases);
            }
            v
        }
        _ => {
            return Err(param(
                "suite",
                format!(
                    "unknown suite `{name}`; expected one of {}",
                    SUITES.join(", ")
                ),
            ))
        }
    };
    Ok(ReportBundle::new(name, cfg, cases))
}
