//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::time::{Duration, Instant};

use maxlab::verify::*;

const EXACT_N: usize = 128;
const EXACT_PAIRS: usize = 100;
const EXACT_TOL: f64 = 1e-12;
const LAYER_CAKE_TOL: f64 = 1e-8;
const ORACLE_TOL: f64 = 1e-12;
const ORACLE_INSTANCES: usize = 200;
const ORACLE_MAX_N: usize = 64;
const EXAMPLE_TOL: f64 = 0.02;
const WITNESS_X: f64 = 1e4;
const WITNESS_H: f64 = 0.1;
const WITNESS_GROWTH: f64 = 1.5;
const REFINEMENT_REL: f64 = 0.2;
const M2_BRACKET: [f64; 2] = [0.125, 8.0];
const JN_SLOPE_MAX: f64 = -0.5;
const EXP_C: f64 = 0.1;
const LUXEMBURG_TOL: f64 = 1e-6;
const HOLDER_TOL: f64 = 1e-8;
const CLOSED_FORM_TOL: f64 = 1e-9;
const ORLICZ_SAMPLES: usize = 100;

fn config() -> VerifyConfig {
    let mut cfg = VerifyConfig {
        deltas: vec![0.25, 0.5, 0.75],
        eps: vec![0.3, 0.7],
        lambda_grid: ThresholdGrid::geom(0.05, 0.8, 16),
        t_grid: ThresholdGrid::lin(1.0, 6.0, 26),
        seed: 7,
        pairs: EXACT_PAIRS,
        exact_n: EXACT_N,
        oracle_max_n: ORACLE_MAX_N,
        oracle_instances: ORACLE_INSTANCES,
        m2_llogl_bracket: M2_BRACKET,
        jn_slope_max: JN_SLOPE_MAX,
        exp_c: EXP_C,
        orlicz_samples: ORLICZ_SAMPLES,
        example_x: 8.0,
        example_n: 5120,
        ..VerifyConfig::default()
    };
    cfg.tolerances.exact_tol = EXACT_TOL;
    cfg.tolerances.layer_cake_tol = LAYER_CAKE_TOL;
    cfg.tolerances.oracle_tol = ORACLE_TOL;
    cfg.tolerances.example_tol = EXAMPLE_TOL;
    cfg.tolerances.refinement_rel = REFINEMENT_REL;
    cfg.tolerances.luxemburg_oracle_tol = LUXEMBURG_TOL;
    cfg.tolerances.holder_tol = HOLDER_TOL;
    cfg.tolerances.closed_form_tol = CLOSED_FORM_TOL;
    cfg
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn failures(cases: &[InequalityReport]) -> Vec<String> {
    cases
        .iter()
        .filter(|c| c.failed())
        .map(|c| format!("{}: {}", c.name, c.flags.join("; ")))
        .collect()
}

fn all_pass(cases: &[InequalityReport], what: &str) -> Outcome {
    let bad = failures(cases);
    if bad.is_empty() {
        outcome(true, format!("{} {what} case(s), none failed", cases.len()))
    } else {
        outcome(false, bad.join(" | "))
    }
}

fn exact() -> Outcome {
    let cfg = config();
    let cases = exact_cases(&cfg).unwrap();
    let short = cases
        .iter()
        .filter(|c| c.metrics.get("instances") != Some(&(EXACT_PAIRS as f64)))
        .count();
    if short > 0 {
        return outcome(
            false,
            format!("{short} case(s) did not cover {EXACT_PAIRS} pairs"),
        );
    }
    all_pass(&cases, "exact")
}

fn oracle() -> Outcome {
    let cases = oracle_cases(&config()).unwrap();
    let worst = cases.iter().filter_map(|c| c.max_ratio).fold(0.0, f64::max);
    let o = all_pass(&cases, "oracle");
    outcome(
        o.ok,
        format!("{}; worst scaled deviation {worst:.1e}", o.detail),
    )
}

fn example_closed_forms() -> Outcome {
    let r = example47_report(
        "example",
        8.0,
        5120,
        &[0.02, 0.05, 0.1, 0.2],
        EXAMPLE_TOL,
        WITNESS_GROWTH,
    )
    .unwrap();
    let m = &r.metrics;
    let checks = [
        ("Mf closed form", m["max_err_mf"]),
        ("M(bf) closed form", m["max_err_mbf"]),
        ("Mf(-1)", (m["mf_at_-1"] - 0.5).abs()),
        ("Mf(-4)", (m["mf_at_-4"] - 0.2).abs()),
        ("M(bf)(-1)", (m["mbf_at_-1"] - 0.1931472).abs()),
    ];
    let bad: Vec<String> = checks
        .iter()
        .filter(|(_, e)| e.is_nan() || *e > EXAMPLE_TOL)
        .map(|(n, e)| format!("{n} error {e:.3e}"))
        .collect();
    let worst = checks.iter().map(|c| c.1).fold(0.0, f64::max);
    if bad.is_empty() {
        outcome(
            true,
            format!(
                "max error {worst:.2e} over {} points",
                m["closed_form_points"]
            ),
        )
    } else {
        outcome(false, bad.join(", "))
    }
}

fn weak_witness() -> Outcome {
    let n = ((WITNESS_X + 2.0) / WITNESS_H).round() as usize;
    let r = example47_report(
        "witness",
        WITNESS_X,
        n,
        &[0.02, 0.2],
        EXAMPLE_TOL,
        WITNESS_GROWTH,
    )
    .unwrap();
    let factor = r.metrics["growth_factor"];
    let table: Vec<String> = r.sweep.iter().map(|[l, v]| format!("{l}:{v:.3}")).collect();
    outcome(
        factor >= WITNESS_GROWTH,
        format!(
            "n = {n}, growth factor {factor:.2} (λ·measure {})",
            table.join(", ")
        ),
    )
}

fn refinement_and_failures(cases: &[InequalityReport], pattern: &[&str]) -> Outcome {
    let bad = failures(cases);
    let worst = cases
        .iter()
        .filter(|c| c.name.ends_with("/refinement"))
        .filter_map(|c| c.metrics.get("relative_change"))
        .fold(0.0f64, |a, &b| a.max(b));
    let missing: Vec<&str> = pattern
        .iter()
        .copied()
        .filter(|p| !cases.iter().any(|c| c.name.contains(p)))
        .collect();
    let infinite = cases
        .iter()
        .filter(|c| c.constant.is_some_and(|x| !x.is_finite()))
        .count();
    let ok = bad.is_empty() && missing.is_empty() && infinite == 0 && worst <= REFINEMENT_REL;
    let mut detail = format!("worst refinement change {:.1}%", worst * 100.0);
    if !missing.is_empty() {
        detail.push_str(&format!("; missing {missing:?}"));
    }
    if !bad.is_empty() {
        detail.push_str(&format!("; {}", bad.join(" | ")));
    }
    outcome(ok, detail)
}

fn weak_type() -> Outcome {
    let cases = weaktype_cases(&config(), &standard_pairs()).unwrap();
    let cases: Vec<InequalityReport> = cases
        .into_iter()
        .filter(|c| c.name.starts_with("weaktype/"))
        .collect();
    let max = cases
        .iter()
        .filter(|c| !c.name.ends_with("/refinement"))
        .filter_map(|c| c.max_ratio)
        .fold(0.0f64, f64::max);
    let o = refinement_and_failures(&cases, &["/M2", "/Cb", "/commutator"]);
    outcome(
        o.ok && max.is_finite(),
        format!("max ratio {max:.3}; {}", o.detail),
    )
}

fn domination() -> (Outcome, Outcome) {
    let cases = domination_cases(&config(), &standard_pairs()).unwrap();
    let (dom, m2): (Vec<_>, Vec<_>) = cases
        .into_iter()
        .partition(|c| c.name.starts_with("domination/"));
    let dom: Vec<InequalityReport> = dom
        .into_iter()
        .filter(|c| !c.name.contains("m_eps_sandwich"))
        .collect();

    // Constant symbols must surface as degenerate, never as a pass.
    let flagged = dom
        .iter()
        .filter(|c| c.name.starts_with("domination/constant_symbol/"))
        .all(|c| c.verdict == Verdict::Degenerate && !c.flags.is_empty());
    let o = refinement_and_failures(
        &dom,
        &["delta=0.25", "delta=0.5", "delta=0.75", "delta_free"],
    );
    let dom_out = outcome(
        o.ok && flagged,
        format!("{}; degenerate symbol flagged: {flagged}", o.detail),
    );

    let lo = m2
        .iter()
        .filter_map(|c| c.metrics.get("band_min"))
        .fold(f64::INFINITY, |a, &b| a.min(b));
    let hi = m2
        .iter()
        .filter_map(|c| c.metrics.get("band_max"))
        .fold(0.0f64, |a, &b| a.max(b));
    let recorded = m2
        .iter()
        .all(|c| c.metrics.contains_key("band_min") && c.metrics.contains_key("band_max"));
    let bad = failures(&m2);
    let m2_out = outcome(
        bad.is_empty() && recorded && lo >= M2_BRACKET[0] && hi <= M2_BRACKET[1],
        format!(
            "band [{lo:.4}, {hi:.4}] over {} case(s) {}",
            m2.len(),
            bad.join(" | ")
        ),
    );
    (dom_out, m2_out)
}

fn john_nirenberg() -> Outcome {
    let cases = jn_cases(&config(), &[]).unwrap();
    let fit = cases.iter().find(|c| c.name == "jn/log_abs/fit").unwrap();
    let exp = cases
        .iter()
        .find(|c| c.name == "jn/log_abs/exp_integrability")
        .unwrap();
    let slope = fit.metrics["slope"];
    let sup = exp.constant.unwrap_or(f64::INFINITY);
    outcome(
        fit.passed() && exp.passed() && slope <= JN_SLOPE_MAX && sup.is_finite(),
        format!("slope {slope:.4}, exp sup {sup:.4}"),
    )
}

fn orlicz() -> Outcome {
    let cases = orlicz_cases(&config()).unwrap();
    let get = |n: &str| {
        cases
            .iter()
            .find(|c| c.name == n)
            .and_then(|c| c.max_ratio)
            .unwrap_or(f64::NAN)
    };
    let o = all_pass(&cases, "orlicz");
    outcome(
        o.ok,
        format!(
            "{}; oracle dev {:.1e}, Hölder max ratio {:.4}",
            o.detail,
            get("orlicz/luxemburg_oracle"),
            get("orlicz/generalized_holder")
        ),
    )
}

fn determinism() -> Outcome {
    let cfg = config();
    let mut mismatched = Vec::new();
    for suite in ["exact", "orlicz", "jn", "example47"] {
        let a = run_suite(suite, &cfg).unwrap().to_json().unwrap();
        let b = run_suite(suite, &cfg).unwrap().to_json().unwrap();
        if a != b {
            mismatched.push(suite);
        }
    }
    if mismatched.is_empty() {
        outcome(
            true,
            "exact, orlicz, jn and example47 reports byte-identical across reruns",
        )
    } else {
        outcome(false, format!("reruns differ: {mismatched:?}"))
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed())
}

fn main() {
    let mut failed = 0;
    let mut report = |id: u32, title: &str, limit: Option<u64>, o: Outcome, took: Duration| {
        let slow = limit.is_some_and(|s| took > Duration::from_secs(s));
        let ok = o.ok && !slow;
        failed += !ok as u32;
        let budget = limit.map(|s| format!(" / {s}s")).unwrap_or_default();
        println!(
            "{} [{id:>2}] {title}: {}{} ({:.1}s{budget})",
            if ok { "PASS" } else { "FAIL" },
            o.detail,
            if slow { "; over time budget" } else { "" },
            took.as_secs_f64()
        );
    };

    let (o, t) = timed(exact);
    report(1, "exact discrete inequalities", Some(30), o, t);
    let (o, t) = timed(oracle);
    report(2, "oracle equivalence", Some(60), o, t);
    let (o, t) = timed(example_closed_forms);
    report(3, "example closed forms", Some(30), o, t);
    let (o, t) = timed(weak_witness);
    report(4, "weak-(1,1) failure witness", Some(60), o, t);
    let (o, t) = timed(weak_type);
    report(5, "weak-type L log L sweeps", Some(120), o, t);
    let ((dom, m2), t) = timed(domination);
    report(6, "domination constants", None, dom, t);
    report(7, "M² vs L log L maximal band", None, m2, Duration::ZERO);
    let (o, t) = timed(john_nirenberg);
    report(8, "John–Nirenberg decay", Some(30), o, t);
    let (o, t) = timed(orlicz);
    report(9, "Orlicz layer", None, o, t);
    let (o, t) = timed(determinism);
    report(10, "determinism", None, o, t);

    if failed > 0 {
        println!("{failed} criterion/criteria failed");
        std::process::exit(1);
    }
}
