use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn maxlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_maxlab"))
        .args(args)
        .output()
        .expect("spawn maxlab")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn rows(path: &Path) -> Vec<(f64, f64)> {
    fs::read_to_string(path)
        .unwrap()
        .lines()
        .skip(1)
        .map(|l| {
            let mut it = l.split(',').map(|x| x.parse::<f64>().unwrap());
            (it.next().unwrap(), it.next().unwrap())
        })
        .collect()
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn apply_maximal_matches_closed_form_near_minus_one() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("mf.csv");
    let o = maxlab(&[
        "apply",
        "--op",
        "M",
        "--builtin",
        "indicator:0,1",
        "--grid",
        "-8,2,5120",
        "--out",
        arg(&out),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let r = rows(&out);
    let near = r
        .iter()
        .min_by(|a, b| (a.0 + 1.0).abs().total_cmp(&(b.0 + 1.0).abs()))
        .unwrap();
    assert!((near.1 - 0.5).abs() <= 0.02);
}

#[test]
fn constant_symbol_gives_zero_maximal_commutator() {
    let o = maxlab(&[
        "apply",
        "--op",
        "Cb",
        "--b",
        "const:1",
        "--f",
        "random_step:4:7",
        "--grid",
        "0,1,64",
    ]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert_eq!(text.lines().count(), 65);
    assert!(text.lines().skip(1).all(|l| l.ends_with(",0e0")));
}

#[test]
fn power_maximal_at_one_is_the_maximal_function() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    let common = ["--builtin", "log_sing:0.25", "--grid", "-1,1,200"];
    let mut x = vec!["apply", "--op", "Mdelta", "--delta", "1", "--out", arg(&a)];
    x.extend(common);
    let mut y = vec!["apply", "--op", "M", "--out", arg(&b)];
    y.extend(common);
    assert_eq!(code(&maxlab(&x)), 0);
    assert_eq!(code(&maxlab(&y)), 0);
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    // JSON round-trips as a sampled function.
    let v: serde_json::Value = serde_json::from_slice(&fs::read(&a).unwrap()).unwrap();
    assert_eq!(v["grid"]["n"], 200);
    assert_eq!(v["values"].as_array().unwrap().len(), 200);
}

#[test]
fn file_inputs_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("f.csv");
    let mf = dir.path().join("mf.csv");
    assert_eq!(
        code(&maxlab(&[
            "apply",
            "--op",
            "M",
            "--f",
            "gauss:0,1",
            "--grid",
            "-2,2,50",
            "--out",
            arg(&f)
        ])),
        0
    );
    let o = maxlab(&["apply", "--op", "M", "--input", arg(&f), "--out", arg(&mf)]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    // Mf >= |f| pointwise.
    for ((_, a), (_, b)) in rows(&f).iter().zip(rows(&mf)) {
        assert!(b >= *a - 1e-12);
    }
    let o = maxlab(&[
        "apply",
        "--op",
        "Cb",
        "--b",
        "log_sing:0.25",
        "--input",
        arg(&f),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec![
            "apply",
            "--op",
            "Cb",
            "--f",
            "gauss:0,1",
            "--grid",
            "-1,1,10",
        ],
        vec![
            "apply",
            "--op",
            "Mdelta",
            "--f",
            "gauss:0,1",
            "--grid",
            "-1,1,10",
        ],
        vec![
            "apply",
            "--op",
            "Mdelta",
            "--delta",
            "1.5",
            "--f",
            "gauss:0,1",
            "--grid",
            "-1,1,10",
        ],
        vec!["apply", "--op", "M", "--f", "bogus:1", "--grid", "-1,1,10"],
        vec!["apply", "--op", "M", "--f", "gauss:0,1"],
        vec![
            "apply",
            "--op",
            "Nope",
            "--f",
            "gauss:0,1",
            "--grid",
            "-1,1,10",
        ],
        vec!["verify", "--suite", "nonsense"],
        vec!["verify", "--suite", "orlicz", "--delta", "2"],
        vec![
            "sweep",
            "--op",
            "M",
            "--f",
            "gauss:0,1",
            "--grid",
            "-1,1,10",
            "--lambda-grid",
            "cubic:1,2,3",
        ],
    ] {
        let o = maxlab(&args);
        assert_eq!(
            code(&o),
            2,
            "{args:?}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
    }
    let o = maxlab(&[
        "apply",
        "--op",
        "Cb",
        "--f",
        "gauss:0,1",
        "--grid",
        "-1,1,10",
    ]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("--b"));
}

#[test]
fn data_errors_exit_three() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.csv");
    fs::write(&bad, "x,value\n0.1,1\n0.3,nan\n").unwrap();
    assert_eq!(
        code(&maxlab(&["apply", "--op", "M", "--input", arg(&bad)])),
        3
    );
    let missing = dir.path().join("missing.csv");
    assert_eq!(
        code(&maxlab(&["apply", "--op", "M", "--input", arg(&missing)])),
        3
    );
    let out = dir.path().join("no/such/dir/out.csv");
    let o = maxlab(&[
        "apply",
        "--op",
        "M",
        "--f",
        "gauss:0,1",
        "--grid",
        "-1,1,10",
        "--out",
        arg(&out),
    ]);
    assert_eq!(code(&o), 3);
}

#[test]
fn verify_exact_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("exact.json");
    let o = maxlab(&[
        "verify",
        "--suite",
        "exact",
        "--seed",
        "7",
        "--out",
        arg(&out),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&fs::read(&out).unwrap()).unwrap();
    assert_eq!(v["suite"], "exact");
    assert_eq!(v["config"]["seed"], 7);
    assert!(v["cases"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["verdict"] != "fail"));
}

#[test]
fn verify_example_reports_closed_form_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("ex.json");
    let o = maxlab(&[
        "verify",
        "--suite",
        "example47",
        "--X",
        "8",
        "--n",
        "5120",
        "--out",
        arg(&out),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&fs::read(&out).unwrap()).unwrap();
    let case = &v["cases"][0];
    assert!(case["metrics"]["max_err_mf"].as_f64().unwrap() <= 0.02);
    assert!(case["metrics"]["max_err_mbf"].as_f64().unwrap() <= 0.02);
}

#[test]
fn verify_reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for p in [&a, &b] {
        assert_eq!(
            code(&maxlab(&[
                "verify",
                "--suite",
                "orlicz",
                "--seed",
                "3",
                "--out",
                arg(p)
            ])),
            0
        );
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn failed_verification_exits_one_and_still_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("corpus.json");
    fs::write(
        &corpus,
        r#"[{"generator":"log_shift","grid":{"a":-4,"b":2,"n":48}},
            {"generator":"indicator","u":0,"v":1,"grid":{"a":-4,"b":2,"n":48}}]"#,
    )
    .unwrap();
    let config = dir.path().join("cfg.json");
    fs::write(&config, r#"{"weak_type_bound": 0.001}"#).unwrap();
    let out = dir.path().join("r.json");
    let o = maxlab(&[
        "verify",
        "--suite",
        "weaktype",
        "--config",
        arg(&config),
        "--corpus",
        arg(&corpus),
        "--out",
        arg(&out),
    ]);
    assert_eq!(code(&o), 1, "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&fs::read(&out).unwrap()).unwrap();
    assert!(v["cases"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c["verdict"] == "fail"));
}

#[test]
fn sweep_tables() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("m2.csv");
    let o = maxlab(&[
        "sweep",
        "--op",
        "M2",
        "--f",
        "indicator:0,1",
        "--grid",
        "-8,2,640",
        "--lambda-grid",
        "geom:0.05,0.8,16",
        "--out",
        arg(&out),
    ]);
    assert_eq!(code(&o), 0);
    let text = fs::read_to_string(&out).unwrap();
    assert_eq!(
        text.lines().next(),
        Some("lambda,numerator,denominator,ratio")
    );
    assert_eq!(text.lines().count(), 17);

    let o = maxlab(&[
        "sweep",
        "--op",
        "M",
        "--f",
        "indicator:0,1",
        "--grid",
        "-8,2,640",
        "--lambda-grid",
        "geom:1.5,4,4",
    ]);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text
        .lines()
        .skip(1)
        .all(|l| l.split(',').nth(1) == Some("0e0")));
}

#[test]
fn sweep_of_commutator_on_the_wide_example_grows() {
    let o = maxlab(&[
        "sweep",
        "--op",
        "MbCommutator",
        "--b",
        "log_shift",
        "--f",
        "indicator:0,1",
        "--X",
        "10000",
        "--n",
        "100020",
        "--lambda-grid",
        "geom:0.02,0.2,4",
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let scaled: Vec<f64> = String::from_utf8(o.stdout)
        .unwrap()
        .lines()
        .skip(1)
        .map(|l| {
            let c: Vec<f64> = l.split(',').map(|x| x.parse().unwrap()).collect();
            c[0] * c[1]
        })
        .collect();
    assert_eq!(scaled.len(), 4);
    assert!(scaled.windows(2).all(|w| w[0] > w[1]), "{scaled:?}");
}
