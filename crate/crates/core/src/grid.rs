//! Uniform midpoint grids on a bounded interval, sampled functions, and the
//! contiguous-window family that stands in for cubes.
//!
//! A grid on `[a, b]` with `n` cells samples at the cell midpoints
//! `x_k = a + (k + 1/2) h`, `h = (b - a) / n`. A [`Window`] is any contiguous
//! index range `i..=j` inside the grid; windows never reach past the
//! interval and functions are not extended outside it.

use std::fmt;
use std::io::{Read, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Uniform 1-D grid with `n` cells on `[a, b]`, sampled at cell midpoints.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawGrid", into = "RawGrid")]
pub struct Grid1D {
    a: f64,
    b: f64,
    n: usize,
    h: f64,
}

#[derive(Serialize, Deserialize)]
struct RawGrid {
    a: f64,
    b: f64,
    n: usize,
}

impl TryFrom<RawGrid> for Grid1D {
    type Error = Error;

    fn try_from(raw: RawGrid) -> Result<Self> {
        Grid1D::new(raw.a, raw.b, raw.n)
    }
}

impl From<Grid1D> for RawGrid {
    fn from(g: Grid1D) -> Self {
        RawGrid {
            a: g.a,
            b: g.b,
            n: g.n,
        }
    }
}

impl Grid1D {
    pub fn new(a: f64, b: f64, n: usize) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::InvalidGrid(format!(
                "endpoints must be finite, got [{a}, {b}]"
            )));
        }
        if b <= a {
            return Err(Error::InvalidGrid(format!(
                "right endpoint {b} must exceed left endpoint {a}"
            )));
        }
        if n == 0 {
            return Err(Error::InvalidGrid("cell count must be positive".into()));
        }
        let h = (b - a) / n as f64;
        if !(h > 0.0) {
            return Err(Error::InvalidGrid(format!(
                "cell width underflows for n = {n} on [{a}, {b}]"
            )));
        }
        Ok(Self { a, b, n, h })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Cell width.
    pub fn h(&self) -> f64 {
        self.h
    }

    /// Midpoint of cell `k`.
    pub fn x(&self, k: usize) -> f64 {
        self.a + (k as f64 + 0.5) * self.h
    }

    pub fn points(&self) -> impl ExactSizeIterator<Item = f64> + '_ {
        (0..self.n).map(move |k| self.x(k))
    }

    /// Index of the sample point closest to `x` (clamped to the grid).
    pub fn nearest_index(&self, x: f64) -> usize {
        let t = ((x - self.a) / self.h - 0.5).round();
        if t <= 0.0 {
            0
        } else {
            (t as usize).min(self.n - 1)
        }
    }

    /// Same grid refined by a factor of two (`h -> h/2`).
    pub fn refined(&self) -> Grid1D {
        Grid1D {
            a: self.a,
            b: self.b,
            n: self.n * 2,
            h: (self.b - self.a) / (self.n * 2) as f64,
        }
    }

    pub fn window(&self, i: usize, j: usize) -> Result<Window> {
        Window::new(i, j, self.n)
    }

    pub fn full_window(&self) -> Window {
        Window {
            i: 0,
            j: self.n - 1,
        }
    }

    /// Measure `|Q|` of a window.
    pub fn measure(&self, w: Window) -> f64 {
        w.len() as f64 * self.h
    }
}

impl fmt::Display for Grid1D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}] n={}", self.a, self.b, self.n)
    }
}

impl FromStr for Grid1D {
    type Err = Error;

    /// Parses `a,b,n`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(Error::InvalidGrid(format!("expected `a,b,n`, got `{s}`")));
        }
        let bad = |what: &str| Error::InvalidGrid(format!("cannot parse {what} in `{s}`"));
        let a: f64 = parts[0].parse().map_err(|_| bad("a"))?;
        let b: f64 = parts[1].parse().map_err(|_| bad("b"))?;
        let n: usize = parts[2].parse().map_err(|_| bad("n"))?;
        Grid1D::new(a, b, n)
    }
}

/// A contiguous index range `i..=j`, the discrete stand-in for a cube.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Window {
    i: usize,
    j: usize,
}

impl Window {
    pub fn new(i: usize, j: usize, n: usize) -> Result<Self> {
        if i > j || j >= n {
            return Err(Error::InvalidWindow { i, j, n });
        }
        Ok(Self { i, j })
    }

    pub fn singleton(k: usize) -> Self {
        Self { i: k, j: k }
    }

    pub fn first(&self) -> usize {
        self.i
    }

    pub fn last(&self) -> usize {
        self.j
    }

    /// Number of cells covered.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.j - self.i + 1
    }

    pub fn contains(&self, k: usize) -> bool {
        self.i <= k && k <= self.j
    }

    pub fn indices(&self) -> std::ops::RangeInclusive<usize> {
        self.i..=self.j
    }

    /// Every window of a grid with `n` cells, ordered by left then right end.
    pub fn all(n: usize) -> impl Iterator<Item = Window> {
        (0..n).flat_map(move |i| (i..n).map(move |j| Window { i, j }))
    }
}

/// A real function sampled at the midpoints of a [`Grid1D`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawSampled")]
pub struct SampledFn {
    grid: Grid1D,
    values: Vec<f64>,
}

#[derive(Deserialize)]
struct RawSampled {
    grid: Grid1D,
    values: Vec<f64>,
}

impl TryFrom<RawSampled> for SampledFn {
    type Error = Error;

    fn try_from(raw: RawSampled) -> Result<Self> {
        SampledFn::new(raw.grid, raw.values)
    }
}

impl SampledFn {
    pub fn new(grid: Grid1D, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.n() {
            return Err(Error::LengthMismatch {
                expected: grid.n(),
                got: values.len(),
            });
        }
        if let Some(k) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                x: grid.x(k),
                value: values[k],
            });
        }
        Ok(Self { grid, values })
    }

    pub fn constant(grid: Grid1D, c: f64) -> Result<Self> {
        Self::new(grid, vec![c; grid.n()])
    }

    /// Internal constructor for values produced by finite arithmetic on
    /// already-validated operands.
    pub(crate) fn from_parts(grid: Grid1D, values: Vec<f64>) -> Self {
        debug_assert_eq!(values.len(), grid.n());
        Self { grid, values }
    }

    pub fn grid(&self) -> &Grid1D {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn h(&self) -> f64 {
        self.grid.h()
    }

    pub fn map(&self, op: impl Fn(f64) -> f64) -> Result<SampledFn> {
        SampledFn::new(self.grid, self.values.iter().map(|&v| op(v)).collect())
    }

    pub fn abs(&self) -> SampledFn {
        Self::from_parts(self.grid, self.values.iter().map(|v| v.abs()).collect())
    }

    pub fn scale(&self, alpha: f64) -> Result<SampledFn> {
        self.map(|v| alpha * v)
    }

    /// Pointwise combination of two functions on the same grid.
    pub fn zip_with(&self, other: &SampledFn, op: impl Fn(f64, f64) -> f64) -> Result<SampledFn> {
        self.ensure_same_grid(other)?;
        SampledFn::new(
            self.grid,
            self.values
                .iter()
                .zip(&other.values)
                .map(|(&x, &y)| op(x, y))
                .collect(),
        )
    }

    pub fn ensure_same_grid(&self, other: &SampledFn) -> Result<()> {
        if self.grid == other.grid {
            Ok(())
        } else {
            Err(Error::GridMismatch)
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Discrete `L_p` norm `(h Σ |v_k|^p)^{1/p}`.
    pub fn lp_norm(&self, p: f64) -> f64 {
        let s: f64 = self.values.iter().map(|v| v.abs().powf(p)).sum();
        (self.h() * s).powf(1.0 / p)
    }

    /// CSV with header `x,value` and one row per sample point.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["x", "value"])?;
        for (k, v) in self.values.iter().enumerate() {
            w.write_record([format!("{:e}", self.grid.x(k)), format!("{v:e}")])?;
        }
        w.flush()?;
        Ok(())
    }

    /// Reads the CSV layout written by [`SampledFn::write_csv`]. When `grid`
    /// is `None` it is inferred from the sample points, which then must be
    /// uniformly spaced (at least two rows).
    pub fn read_csv<R: Read>(input: R, grid: Option<Grid1D>) -> Result<SampledFn> {
        let mut rdr = csv::Reader::from_reader(input);
        let headers = rdr.headers()?.clone();
        if headers.len() != 2 || &headers[0] != "x" || &headers[1] != "value" {
            return Err(Error::Format(format!(
                "expected header `x,value`, got `{}`",
                headers.iter().collect::<Vec<_>>().join(",")
            )));
        }
        let mut xs = Vec::new();
        let mut vs = Vec::new();
        for (line, rec) in rdr.records().enumerate() {
            let rec = rec?;
            let parse = |field: usize| -> Result<f64> {
                rec.get(field)
                    .and_then(|s| s.trim().parse::<f64>().ok())
                    .ok_or_else(|| Error::Format(format!("bad number on data row {}", line + 1)))
            };
            xs.push(parse(0)?);
            vs.push(parse(1)?);
        }
        let grid = match grid {
            Some(g) => g,
            None => infer_grid(&xs)?,
        };
        if xs.len() != grid.n() {
            return Err(Error::LengthMismatch {
                expected: grid.n(),
                got: xs.len(),
            });
        }
        for (k, &x) in xs.iter().enumerate() {
            if (x - grid.x(k)).abs() > 1e-6 * grid.h() {
                return Err(Error::Format(format!(
                    "row {} has x = {x}, expected midpoint {}",
                    k + 1,
                    grid.x(k)
                )));
            }
        }
        SampledFn::new(grid, vs)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }

    pub fn from_json(s: &str) -> Result<SampledFn> {
        Ok(serde_json::from_str(s)?)
    }
}

fn infer_grid(xs: &[f64]) -> Result<Grid1D> {
    if xs.len() < 2 {
        return Err(Error::Format(
            "cannot infer a grid from fewer than two rows".into(),
        ));
    }
    let n = xs.len();
    let h = (xs[n - 1] - xs[0]) / (n - 1) as f64;
    if !(h > 0.0) {
        return Err(Error::Format("sample points are not increasing".into()));
    }
    for w in xs.windows(2) {
        if ((w[1] - w[0]) - h).abs() > 1e-6 * h {
            return Err(Error::Format(
                "sample points are not uniformly spaced".into(),
            ));
        }
    }
    Grid1D::new(xs[0] - h / 2.0, xs[n - 1] + h / 2.0, n)
}

/// Named closed-form functions that can be sampled on a grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Expr {
    Constant {
        value: f64,
    },
    /// Indicator of the open interval `(u, v)`.
    Indicator {
        u: f64,
        v: f64,
    },
    /// `log|1 + x|`.
    LogShift,
    /// `log|x - c|`.
    LogSing {
        c: f64,
    },
    /// `exp(-((x - center) / width)^2)`.
    Gauss {
        center: f64,
        width: f64,
    },
}

impl Expr {
    pub fn eval(&self, x: f64) -> f64 {
        match *self {
            Expr::Constant { value } => value,
            Expr::Indicator { u, v } => {
                if u < x && x < v {
                    1.0
                } else {
                    0.0
                }
            }
            Expr::LogShift => (1.0 + x).abs().ln(),
            Expr::LogSing { c } => (x - c).abs().ln(),
            Expr::Gauss { center, width } => {
                let z = (x - center) / width;
                (-z * z).exp()
            }
        }
    }
}

/// Samples `expr` at every midpoint of `grid`.
pub fn sample(expr: &Expr, grid: Grid1D) -> Result<SampledFn> {
    if let Expr::Gauss { width, .. } = expr {
        if !(*width > 0.0) {
            return Err(crate::error::param("width", "must be positive"));
        }
    }
    let values: Vec<f64> = grid.points().map(|x| expr.eval(x)).collect();
    SampledFn::new(grid, values)
}

/// `P[0] = 0`, `P[k] = Σ_{m<k} v_m h`, accumulated in ascending order.
pub fn prefix_sums(f: &SampledFn) -> Vec<f64> {
    let h = f.h();
    let mut p = Vec::with_capacity(f.len() + 1);
    let mut acc = 0.0;
    p.push(acc);
    for &v in f.values() {
        acc += v * h;
        p.push(acc);
    }
    p
}

/// Unweighted running sums `S[k] = Σ_{m<k} v_m`; window means are
/// `(S[j+1] - S[i]) / (j - i + 1)`.
pub(crate) fn raw_prefix(values: &[f64]) -> Vec<f64> {
    let mut p = Vec::with_capacity(values.len() + 1);
    let mut acc = 0.0;
    p.push(acc);
    for &v in values {
        acc += v;
        p.push(acc);
    }
    p
}

/// Mean of `f` over `w`, summed directly in ascending index order.
pub fn window_average(f: &SampledFn, w: Window) -> f64 {
    mean_of(&f.values()[w.first()..=w.last()])
}

/// Mean of a slice; exact on flat slices.
pub(crate) fn mean_of(vals: &[f64]) -> f64 {
    let first = vals[0];
    if vals.iter().all(|&v| v == first) {
        return first;
    }
    vals.iter().sum::<f64>() / vals.len() as f64
}
