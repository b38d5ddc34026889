//! `maxlab`: sample functions, apply maximal operators, run verification
//! suites and emit threshold sweeps.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O or
//! data error.

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use maxlab::corpus::{gen, read_manifest, Builtin};
use maxlab::maximal::{
    commutator_maximal_with, hl_maximal_with, iterated_maximal_with, orlicz_maximal, power_maximal,
    power_sharp_maximal, sharp_maximal,
};
use maxlab::norms::{rearrangement, OrliczFunction};
use maxlab::verify::{
    maximal_algorithm, maximal_commutator_auto, run_suite_with, standard_pairs, weak_type_rows,
    write_sweep_csv, CorpusPair, ThresholdGrid, VerifyConfig, SUITES,
};
use maxlab::{Error, Grid1D, SampledFn};

#[derive(Parser)]
#[command(
    name = "maxlab",
    version,
    about = "Discrete maximal operators and inequality checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply an operator and write the result.
    Apply(ApplyArgs),
    /// Run a verification suite and write its JSON report.
    Verify(VerifyArgs),
    /// Tabulate `|{|Tf| > λ}|` against the Zygmund integral of `f/λ`.
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Op {
    #[value(name = "M")]
    M,
    #[value(name = "M2")]
    M2,
    #[value(name = "Mdelta")]
    Mdelta,
    #[value(name = "sharp")]
    Sharp,
    #[value(name = "sharp_delta")]
    SharpDelta,
    #[value(name = "Cb")]
    Cb,
    #[value(name = "MbCommutator")]
    MbCommutator,
    #[value(name = "OrliczMax")]
    OrliczMax,
    #[value(name = "rearrange")]
    Rearrange,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Phi {
    #[value(name = "LlogL")]
    LlogL,
    #[value(name = "ExpL")]
    ExpL,
}

/// Where operands come from.
#[derive(Args)]
struct Operands {
    /// Input function: builtin spec (`indicator:0,1`) or CSV/JSON file.
    #[arg(long)]
    f: Option<String>,
    /// Same as `--f`.
    #[arg(long, conflicts_with = "f")]
    builtin: Option<String>,
    /// Input file (CSV `x,value` or JSON) for `f`.
    #[arg(long, conflicts_with_all = ["f", "builtin"])]
    input: Option<PathBuf>,
    /// Symbol `b`: builtin spec or CSV/JSON file.
    #[arg(long)]
    b: Option<String>,
    /// Grid `a,b,n` for builtin specs.
    #[arg(long, allow_hyphen_values = true)]
    grid: Option<String>,
    /// Half-width `X` of the grid `[-X, 2]` (with `--n`) when `--grid` is absent.
    #[arg(long = "X", allow_hyphen_values = true)]
    x: Option<f64>,
    /// Cell count for `--X`.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args)]
struct ApplyArgs {
    #[arg(long, value_enum)]
    op: Op,
    #[command(flatten)]
    operands: Operands,
    /// Power for `Mdelta` and `sharp_delta`.
    #[arg(long)]
    delta: Option<f64>,
    /// Young function for `OrliczMax`.
    #[arg(long, value_enum, default_value = "LlogL")]
    phi: Phi,
    /// Output path; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format; defaults from the `--out` extension, else CSV.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of exact, domination, weaktype, jn, orlicz, lp, example47, all.
    #[arg(long)]
    suite: String,
    /// JSON configuration; flags below override its fields.
    #[arg(long)]
    config: Option<PathBuf>,
    /// JSON list of corpus specs, read as consecutive `(b, f)` pairs.
    #[arg(long)]
    corpus: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    /// Comma-separated powers in (0, 1).
    #[arg(long)]
    delta: Option<String>,
    /// Comma-separated powers in (0, 1).
    #[arg(long)]
    eps: Option<String>,
    /// Comma-separated exponents > 1.
    #[arg(long)]
    p: Option<String>,
    /// `geom:lo,hi,count` or `lin:lo,hi,count`.
    #[arg(long)]
    lambda_grid: Option<String>,
    #[arg(long)]
    t_grid: Option<String>,
    /// Half-width of the weak-(1,1) example domain.
    #[arg(long = "X", allow_hyphen_values = true)]
    x: Option<f64>,
    /// Cell count of the weak-(1,1) example domain.
    #[arg(long)]
    n: Option<usize>,
    /// Report path; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, value_enum)]
    op: Op,
    #[command(flatten)]
    operands: Operands,
    #[arg(long)]
    delta: Option<f64>,
    #[arg(long, value_enum, default_value = "LlogL")]
    phi: Phi,
    #[arg(long, default_value = "geom:0.05,0.8,16")]
    lambda_grid: String,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Only CSV is produced.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

/// An error with its exit status.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

/// Parameter and spec errors are usage errors; the rest are data errors.
fn classify(flag: &str, e: Error) -> Failure {
    match e {
        Error::InvalidParameter { .. } | Error::BadSpec { .. } | Error::InvalidGrid(_) => {
            usage(format!("{flag}: {e}"))
        }
        other => Failure {
            code: 3,
            message: format!("{flag}: {other}"),
        },
    }
}

fn io_failure(path: &Path, e: impl std::fmt::Display) -> Failure {
    Failure {
        code: 3,
        message: format!("{}: {e}", path.display()),
    }
}

type CliResult<T> = Result<T, Failure>;

impl Operands {
    fn grid(&self) -> CliResult<Option<Grid1D>> {
        if let Some(g) = &self.grid {
            return g
                .parse::<Grid1D>()
                .map(Some)
                .map_err(|e| classify("--grid", e));
        }
        match (self.x, self.n) {
            (Some(x), Some(n)) => Grid1D::new(-x, 2.0, n)
                .map(Some)
                .map_err(|e| classify("--X", e)),
            (Some(_), None) => Err(usage("--X needs --n")),
            (None, Some(_)) => Err(usage("--n needs --X")),
            (None, None) => Ok(None),
        }
    }

    fn f_source(&self) -> Option<(&'static str, Source)> {
        if let Some(s) = &self.f {
            Some(("--f", Source::parse(s)))
        } else if let Some(s) = &self.builtin {
            Some(("--builtin", Source::parse(s)))
        } else {
            self.input
                .as_ref()
                .map(|p| ("--input", Source::File(p.clone())))
        }
    }

    fn load_f(&self, grid: Option<Grid1D>) -> CliResult<SampledFn> {
        let (flag, src) = self
            .f_source()
            .ok_or_else(|| usage("missing input: pass --f, --builtin or --input"))?;
        src.load(flag, grid)
    }

    fn load_b(&self, grid: Option<Grid1D>) -> CliResult<SampledFn> {
        let b = self
            .b
            .as_deref()
            .ok_or_else(|| usage("--b is required for this operator"))?;
        Source::parse(b).load("--b", grid)
    }

    /// `f`, and `b` on the same grid when the operator needs one.
    fn load(&self, needs_b: bool) -> CliResult<(Option<SampledFn>, SampledFn)> {
        let grid = self.grid()?;
        let f = self.load_f(grid)?;
        if !needs_b {
            return Ok((None, f));
        }
        let b = self.load_b(Some(grid.unwrap_or(*f.grid())))?;
        b.ensure_same_grid(&f).map_err(|e| classify("--b", e))?;
        Ok((Some(b), f))
    }
}

enum Source {
    File(PathBuf),
    Spec(String),
}

impl Source {
    fn parse(s: &str) -> Source {
        let p = Path::new(s);
        let ext = p.extension().and_then(|e| e.to_str()).unwrap_or("");
        if p.is_file() || matches!(ext, "csv" | "json") {
            Source::File(p.to_path_buf())
        } else {
            Source::Spec(s.to_string())
        }
    }

    fn load(self, flag: &str, grid: Option<Grid1D>) -> CliResult<SampledFn> {
        match self {
            Source::Spec(s) => {
                let builtin: Builtin = s.parse().map_err(|e| classify(flag, e))?;
                let grid = grid.ok_or_else(|| usage(format!("{flag} `{s}` needs --grid a,b,n")))?;
                gen(&builtin.on(grid)).map_err(|e| classify(flag, e))
            }
            Source::File(path) => {
                let file = File::open(&path).map_err(|e| io_failure(&path, e))?;
                let reader = BufReader::new(file);
                let f = if path.extension().is_some_and(|e| e == "json") {
                    let text = io::read_to_string(reader).map_err(|e| io_failure(&path, e))?;
                    SampledFn::from_json(&text).map_err(|e| io_failure(&path, e))?
                } else {
                    SampledFn::read_csv(reader, grid).map_err(|e| io_failure(&path, e))?
                };
                if let Some(g) = grid {
                    if *f.grid() != g {
                        return Err(Failure {
                            code: 3,
                            message: format!(
                                "{}: grid {} differs from {g}",
                                path.display(),
                                f.grid()
                            ),
                        });
                    }
                }
                Ok(f)
            }
        }
    }
}

fn format_for(explicit: Option<Format>, out: Option<&Path>) -> Format {
    explicit.unwrap_or_else(
        || match out.and_then(|p| p.extension()).and_then(|e| e.to_str()) {
            Some("json") => Format::Json,
            _ => Format::Csv,
        },
    )
}

/// Runs `write` against `--out` or stdout.
fn emit(
    out: Option<&Path>,
    write: impl FnOnce(&mut dyn Write) -> maxlab::Result<()>,
) -> CliResult<()> {
    let label = out
        .map(Path::to_path_buf)
        .unwrap_or_else(|| PathBuf::from("<stdout>"));
    let result = match out {
        Some(p) => {
            let file = File::create(p).map_err(|e| io_failure(p, e))?;
            let mut w = BufWriter::new(file);
            write(&mut w).and_then(|_| w.flush().map_err(Error::from))
        }
        None => {
            let stdout = io::stdout();
            let mut w = stdout.lock();
            write(&mut w).and_then(|_| w.flush().map_err(Error::from))
        }
    };
    result.map_err(|e| io_failure(&label, e))
}

fn needs_b(op: Op) -> bool {
    matches!(op, Op::Cb | Op::MbCommutator)
}

fn delta_for(op: Op, delta: Option<f64>) -> CliResult<f64> {
    delta.ok_or_else(|| {
        usage(format!(
            "--delta is required for {}",
            op.to_possible_value()
                .map(|v| v.get_name().to_string())
                .unwrap_or_default()
        ))
    })
}

fn phi_of(p: Phi) -> OrliczFunction {
    match p {
        Phi::LlogL => OrliczFunction::LlogL,
        Phi::ExpL => OrliczFunction::ExpL,
    }
}

/// Applies a pointwise operator; `rearrange` is handled by the caller.
fn apply_op(
    op: Op,
    b: Option<&SampledFn>,
    f: &SampledFn,
    delta: Option<f64>,
    phi: Phi,
) -> CliResult<SampledFn> {
    let algo = maximal_algorithm(f.len());
    let with_b = || b.ok_or_else(|| usage("--b is required for this operator"));
    let out = match op {
        Op::M => hl_maximal_with(f, algo),
        Op::M2 => iterated_maximal_with(f, algo),
        Op::Mdelta => {
            let d = delta_for(op, delta)?;
            if d == 1.0 {
                hl_maximal_with(f, algo)
            } else {
                power_maximal(f, d).map_err(|e| classify("--delta", e))?
            }
        }
        Op::Sharp => sharp_maximal(f),
        Op::SharpDelta => {
            power_sharp_maximal(f, delta_for(op, delta)?).map_err(|e| classify("--delta", e))?
        }
        Op::Cb => maximal_commutator_auto(with_b()?, f).map_err(|e| classify("--b", e))?,
        Op::MbCommutator => {
            commutator_maximal_with(with_b()?, f, algo).map_err(|e| classify("--b", e))?
        }
        Op::OrliczMax => {
            let r = orlicz_maximal(f, phi_of(phi));
            if r.unconverged_windows > 0 {
                eprintln!(
                    "warning: {} Luxemburg solve(s) hit the iteration cap",
                    r.unconverged_windows
                );
            }
            r.output
        }
        Op::Rearrange => {
            return Err(usage(
                "rearrange produces a profile, not a sampled function",
            ))
        }
    };
    Ok(out)
}

fn cmd_apply(args: ApplyArgs) -> CliResult<()> {
    let (b, f) = args.operands.load(needs_b(args.op))?;
    let out = args.out.as_deref();
    let format = format_for(args.format, out);
    if args.op == Op::Rearrange {
        let profile = rearrangement(&f);
        return emit(out, |w| match format {
            Format::Csv => profile.write_csv(w),
            Format::Json => {
                serde_json::to_writer_pretty(&mut *w, &profile)?;
                writeln!(w)?;
                Ok(())
            }
        });
    }
    let result = apply_op(args.op, b.as_ref(), &f, args.delta, args.phi)?;
    emit(out, |w| match format {
        Format::Csv => result.write_csv(w),
        Format::Json => {
            writeln!(w, "{}", result.to_json()?)?;
            Ok(())
        }
    })
}

fn cmd_sweep(args: SweepArgs) -> CliResult<()> {
    if args.format == Some(Format::Json) {
        return Err(usage("--format: sweeps are written as CSV only"));
    }
    if args.op == Op::Rearrange {
        return Err(usage("--op: rearrange has no sweep"));
    }
    let lambdas: ThresholdGrid = args
        .lambda_grid
        .parse()
        .map_err(|e| classify("--lambda-grid", e))?;
    let (b, f) = args.operands.load(needs_b(args.op))?;
    let tf = apply_op(args.op, b.as_ref(), &f, args.delta, args.phi)?.abs();
    let rows =
        weak_type_rows(&tf, &f, &lambdas.points()).map_err(|e| classify("--lambda-grid", e))?;
    emit(args.out.as_deref(), |w| write_sweep_csv(&rows, w))
}

fn parse_list(flag: &str, s: &str) -> CliResult<Vec<f64>> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<f64>()
                .map_err(|_| usage(format!("{flag}: `{x}` is not a number")))
        })
        .collect()
}

fn verify_config(args: &VerifyArgs) -> CliResult<VerifyConfig> {
    let mut cfg = match &args.config {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| io_failure(p, e))?;
            VerifyConfig::from_json(&text).map_err(|e| match e {
                Error::InvalidParameter { .. } => usage(format!("{}: {e}", p.display())),
                other => io_failure(p, other),
            })?
        }
        None => VerifyConfig::default(),
    };
    if let Some(s) = args.seed {
        cfg.seed = s;
    }
    if let Some(d) = &args.delta {
        cfg.deltas = parse_list("--delta", d)?;
    }
    if let Some(e) = &args.eps {
        cfg.eps = parse_list("--eps", e)?;
    }
    if let Some(p) = &args.p {
        cfg.p_list = parse_list("--p", p)?;
    }
    if let Some(g) = &args.lambda_grid {
        cfg.lambda_grid = g.parse().map_err(|e| classify("--lambda-grid", e))?;
    }
    if let Some(g) = &args.t_grid {
        cfg.t_grid = g.parse().map_err(|e| classify("--t-grid", e))?;
    }
    if let Some(x) = args.x {
        cfg.example_x = x;
    }
    if let Some(n) = args.n {
        cfg.example_n = n;
    }
    cfg.validate().map_err(|e| classify("config", e))?;
    Ok(cfg)
}

fn cmd_verify(args: VerifyArgs) -> CliResult<bool> {
    if !SUITES.contains(&args.suite.as_str()) {
        return Err(usage(format!(
            "--suite: unknown suite `{}`; expected one of {}",
            args.suite,
            SUITES.join(", ")
        )));
    }
    if args.format == Some(Format::Csv) {
        return Err(usage("--format: reports are written as JSON only"));
    }
    let cfg = verify_config(&args)?;
    let pairs = match &args.corpus {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| io_failure(p, e))?;
            let specs = read_manifest(&text).map_err(|e| io_failure(p, e))?;
            CorpusPair::from_manifest(&specs).map_err(|e| io_failure(p, e))?
        }
        None => standard_pairs(),
    };
    let bundle = run_suite_with(&args.suite, &cfg, &pairs).map_err(|e| classify("--suite", e))?;
    emit(args.out.as_deref(), |w| {
        writeln!(w, "{}", bundle.to_json()?)?;
        Ok(())
    })?;
    let failed: Vec<&str> = bundle.failures().map(|c| c.name.as_str()).collect();
    eprintln!(
        "{}: {} case(s), {} failed",
        args.suite,
        bundle.cases.len(),
        failed.len()
    );
    for name in &failed {
        eprintln!("  FAIL {name}");
    }
    Ok(failed.is_empty())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Apply(a) => cmd_apply(a).map(|_| true),
        Command::Sweep(a) => cmd_sweep(a).map(|_| true),
        Command::Verify(a) => cmd_verify(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
