//! Seeded generators for test functions.
//!
//! A [`CorpusSpec`] fully determines its output: same spec, same samples.
//! Random draws come from ChaCha8 seeded through `seed_from_u64`, whose
//! stream is fixed across platforms.

use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{param, Error, Result};
use crate::grid::{sample, Expr, Grid1D, SampledFn};

/// Identifier of the random source, recorded in reports.
pub const RNG_ALGORITHM: &str = "chacha8/seed_from_u64";

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "generator", rename_all = "snake_case")]
pub enum Generator {
    Constant {
        value: f64,
    },
    /// Indicator of `(u, v)`.
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
    Gauss {
        center: f64,
        width: f64,
    },
    /// Piecewise constant on `blocks` equal index blocks (a power of two),
    /// each level drawn uniformly from `{0, …, levels - 1}`.
    RandomStep {
        levels: u32,
        #[serde(default = "default_blocks")]
        blocks: usize,
    },
    /// `Σ_{m=1..terms} ±cos(2^m x)` with seeded signs.
    LacunaryBmo {
        terms: u32,
    },
    /// Independent uniform samples on `[lo, hi)`.
    Uniform {
        lo: f64,
        hi: f64,
    },
}

fn default_blocks() -> usize {
    16
}

fn default_amplitude() -> f64 {
    1.0
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusSpec {
    #[serde(flatten)]
    pub generator: Generator,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_amplitude")]
    pub amplitude: f64,
    pub grid: Grid1D,
}

impl CorpusSpec {
    pub fn new(generator: Generator, grid: Grid1D) -> Self {
        Self {
            generator,
            seed: 0,
            amplitude: 1.0,
            grid,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_amplitude(mut self, amplitude: f64) -> Self {
        self.amplitude = amplitude;
        self
    }

    /// Same generator on another grid.
    pub fn on(&self, grid: Grid1D) -> Self {
        Self {
            grid,
            ..self.clone()
        }
    }

    /// Short label such as `random_step:4:7`.
    pub fn label(&self) -> String {
        let base = match &self.generator {
            Generator::Constant { value } => format!("const:{value}"),
            Generator::Indicator { u, v } => format!("indicator:{u},{v}"),
            Generator::LogShift => "log_shift".to_string(),
            Generator::LogSing { c } => format!("log_sing:{c}"),
            Generator::Gauss { center, width } => format!("gauss:{center},{width}"),
            Generator::RandomStep { levels, blocks } => {
                format!("random_step:{levels},{blocks}:{}", self.seed)
            }
            Generator::LacunaryBmo { terms } => format!("lacunary_bmo:{terms}:{}", self.seed),
            Generator::Uniform { lo, hi } => format!("uniform:{lo},{hi}:{}", self.seed),
        };
        if self.amplitude == 1.0 {
            base
        } else {
            format!("{}*{base}", self.amplitude)
        }
    }
}

/// Generates the samples described by `spec`.
pub fn gen(spec: &CorpusSpec) -> Result<SampledFn> {
    if !spec.amplitude.is_finite() {
        return Err(param("amplitude", "must be finite"));
    }
    let grid = spec.grid;
    let base = match spec.generator {
        Generator::Constant { value } => {
            if !value.is_finite() {
                return Err(param("value", "must be finite"));
            }
            sample(&Expr::Constant { value }, grid)?
        }
        Generator::Indicator { u, v } => {
            if !(u < v) {
                return Err(param("u", format!("need u < v, got ({u}, {v})")));
            }
            sample(&Expr::Indicator { u, v }, grid)?
        }
        Generator::LogShift => sample(&Expr::LogShift, grid)?,
        Generator::LogSing { c } => sample(&Expr::LogSing { c }, grid)?,
        Generator::Gauss { center, width } => {
            if !(width > 0.0) {
                return Err(param("width", format!("must be positive, got {width}")));
            }
            sample(&Expr::Gauss { center, width }, grid)?
        }
        Generator::RandomStep { levels, blocks } => {
            if levels == 0 {
                return Err(param("levels", "must be at least 1"));
            }
            if blocks == 0 || !blocks.is_power_of_two() || blocks > grid.n() {
                return Err(param(
                    "blocks",
                    format!(
                        "must be a power of two in [1, n = {}], got {blocks}",
                        grid.n()
                    ),
                ));
            }
            let mut r = rng(spec.seed);
            let heights: Vec<f64> = (0..blocks)
                .map(|_| r.random_range(0..levels) as f64)
                .collect();
            let n = grid.n();
            let values = (0..n).map(|k| heights[k * blocks / n]).collect();
            SampledFn::new(grid, values)?
        }
        Generator::LacunaryBmo { terms } => {
            if terms == 0 || terms > 50 {
                return Err(param("terms", format!("must lie in 1..=50, got {terms}")));
            }
            let mut r = rng(spec.seed);
            let signs: Vec<f64> = (0..terms)
                .map(|_| if r.random::<bool>() { 1.0 } else { -1.0 })
                .collect();
            let values = grid
                .points()
                .map(|x| {
                    signs
                        .iter()
                        .enumerate()
                        .map(|(m, s)| s * (2f64.powi(m as i32 + 1) * x).cos())
                        .sum()
                })
                .collect();
            SampledFn::new(grid, values)?
        }
        Generator::Uniform { lo, hi } => {
            if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
                return Err(param(
                    "lo",
                    format!("need finite lo < hi, got [{lo}, {hi})"),
                ));
            }
            let mut r = rng(spec.seed);
            let values = (0..grid.n()).map(|_| r.random_range(lo..hi)).collect();
            SampledFn::new(grid, values)?
        }
    };
    if spec.amplitude == 1.0 {
        Ok(base)
    } else {
        base.scale(spec.amplitude)
    }
}

/// Reads a JSON list of specs.
pub fn read_manifest(text: &str) -> Result<Vec<CorpusSpec>> {
    Ok(serde_json::from_str(text)?)
}

/// A builtin in the command-line mini-syntax `name[:params[:seed]]`, e.g.
/// `indicator:0,1`, `const:1`, `log_shift`, `random_step:4:7`.
#[derive(Debug, Clone, PartialEq)]
pub struct Builtin {
    pub generator: Generator,
    pub seed: u64,
}

impl Builtin {
    pub fn on(&self, grid: Grid1D) -> CorpusSpec {
        CorpusSpec::new(self.generator.clone(), grid).with_seed(self.seed)
    }
}

impl FromStr for Builtin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::BadSpec {
            spec: s.to_string(),
            reason: reason.to_string(),
        };
        let mut parts = s.trim().splitn(3, ':');
        let name = parts.next().unwrap_or_default();
        let params: Vec<f64> = match parts.next() {
            None | Some("") => Vec::new(),
            Some(p) => p
                .split(',')
                .map(|x| x.trim().parse::<f64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| bad("parameters must be numbers"))?,
        };
        let seed = match parts.next() {
            None => 0,
            Some(x) => x
                .trim()
                .parse::<u64>()
                .map_err(|_| bad("seed must be a u64"))?,
        };
        let need = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(bad(&format!("`{name}` takes {k} parameter(s)")))
            }
        };
        let whole = |x: f64, what: &str| -> Result<u64> {
            if x >= 0.0 && x.fract() == 0.0 {
                Ok(x as u64)
            } else {
                Err(bad(&format!("{what} must be a non-negative integer")))
            }
        };
        let generator = match name {
            "const" | "constant" => {
                need(1)?;
                Generator::Constant { value: params[0] }
            }
            "indicator" => {
                need(2)?;
                Generator::Indicator {
                    u: params[0],
                    v: params[1],
                }
            }
            "log_shift" => {
                need(0)?;
                Generator::LogShift
            }
            "log_sing" => {
                need(1)?;
                Generator::LogSing { c: params[0] }
            }
            "gauss" => {
                need(2)?;
                Generator::Gauss {
                    center: params[0],
                    width: params[1],
                }
            }
            "random_step" => match params.len() {
                1 => Generator::RandomStep {
                    levels: whole(params[0], "levels")? as u32,
                    blocks: default_blocks(),
                },
                2 => Generator::RandomStep {
                    levels: whole(params[0], "levels")? as u32,
                    blocks: whole(params[1], "blocks")? as usize,
                },
                _ => return Err(bad("`random_step` takes levels[,blocks]")),
            },
            "lacunary_bmo" => {
                need(1)?;
                Generator::LacunaryBmo {
                    terms: whole(params[0], "terms")? as u32,
                }
            }
            "uniform" => {
                need(2)?;
                Generator::Uniform {
                    lo: params[0],
                    hi: params[1],
                }
            }
            _ => return Err(bad("unknown builtin")),
        };
        Ok(Builtin { generator, seed })
    }
}
