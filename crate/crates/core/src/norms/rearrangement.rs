//! Nonincreasing rearrangement, distribution measure and the weak `L^p`
//! quasinorm.

use serde::{Deserialize, Serialize};

use crate::grid::SampledFn;

/// `f*` as a right-continuous step function: the `m`-th largest `|v|` on
/// `[m h, (m + 1) h)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RearrangementProfile {
    steps: Vec<f64>,
    mass: f64,
}

impl RearrangementProfile {
    /// Step heights in nonincreasing order.
    pub fn steps(&self) -> &[f64] {
        &self.steps
    }

    /// Mass `h` carried by every step.
    pub fn step_mass(&self) -> f64 {
        self.mass
    }

    pub fn total_mass(&self) -> f64 {
        self.steps.len() as f64 * self.mass
    }

    /// `f*(t)`; zero for `t >= n h`.
    pub fn eval(&self, t: f64) -> f64 {
        if t < 0.0 {
            return self.steps.first().copied().unwrap_or(0.0);
        }
        let m = (t / self.mass).floor();
        if m >= self.steps.len() as f64 {
            0.0
        } else {
            self.steps[m as usize]
        }
    }

    /// `|{t : f*(t) > λ}|`.
    pub fn measure_above(&self, lambda: f64) -> f64 {
        self.steps.partition_point(|&s| s > lambda) as f64 * self.mass
    }

    /// CSV rows `t_start,t_end,value`.
    pub fn write_csv<W: std::io::Write>(&self, out: W) -> crate::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["t_start", "t_end", "value"])?;
        for (m, s) in self.steps.iter().enumerate() {
            w.write_record([
                format!("{:e}", m as f64 * self.mass),
                format!("{:e}", (m + 1) as f64 * self.mass),
                format!("{s:e}"),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

pub fn rearrangement(f: &SampledFn) -> RearrangementProfile {
    let mut steps: Vec<f64> = f.values().iter().map(|v| v.abs()).collect();
    steps.sort_by(|a, b| b.total_cmp(a));
    RearrangementProfile { steps, mass: f.h() }
}

/// `h · #{k : |v_k| > λ}`.
pub fn distribution_measure(f: &SampledFn, lambda: f64) -> f64 {
    f.h() * f.values().iter().filter(|v| v.abs() > lambda).count() as f64
}

/// `sup_t t^{1/p} f*(t)`, attained at the right end of some step.
pub fn weak_lorentz_quasinorm(f: &SampledFn, p: f64) -> crate::Result<f64> {
    if !(p >= 1.0) {
        return Err(crate::error::param("p", format!("must be >= 1, got {p}")));
    }
    let prof = rearrangement(f);
    Ok(prof
        .steps
        .iter()
        .enumerate()
        .map(|(m, &s)| ((m + 1) as f64 * prof.mass).powf(1.0 / p) * s)
        .fold(0.0, f64::max))
}
