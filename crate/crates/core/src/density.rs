//! Maximum-density segments through convex hulls of prefix-sum points.
//!
//! With running sums `S`, the mean of `v[i..=j]` is the slope between the
//! points `(i, S[i])` and `(j + 1, S[j + 1])`. The best window containing a
//! fixed cell pairs a point on the left with a point on the right, and the
//! best right partner of any left point lies on the upper hull of the right
//! points, where slopes from an outside point on the left are unimodal.
//!
//! Every candidate is finally evaluated as `(S[j+1] - S[i]) / (j + 1 - i)`,
//! the same expression the quadratic sweep uses.

use crate::grid::raw_prefix;

#[derive(Debug, Clone, Copy)]
struct Pt {
    x: f64,
    y: f64,
    id: usize,
}

fn cross(o: Pt, a: Pt, b: Pt) -> f64 {
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
}

/// Upper convex hull of points with strictly increasing `x`.
struct UpperHull {
    pts: Vec<Pt>,
}

impl UpperHull {
    fn build(points: impl Iterator<Item = Pt>) -> Self {
        let mut pts: Vec<Pt> = Vec::new();
        for p in points {
            while pts.len() >= 2 && cross(pts[pts.len() - 2], pts[pts.len() - 1], p) >= 0.0 {
                pts.pop();
            }
            pts.push(p);
        }
        Self { pts }
    }

    /// Hull vertex maximizing the slope from `p`, which must lie strictly to
    /// the left of every hull point. Returns the candidate ids around the
    /// located peak so the caller can evaluate them exactly.
    fn best_from(&self, p: Pt) -> [usize; 3] {
        let h = &self.pts;
        // First t whose successor does not turn left as seen from p.
        let (mut lo, mut hi) = (0usize, h.len() - 1);
        while lo < hi {
            let mid = (lo + hi) / 2;
            if cross(p, h[mid], h[mid + 1]) > 0.0 {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        let prev = lo.saturating_sub(1);
        let next = (lo + 1).min(h.len() - 1);
        [h[prev].id, h[lo].id, h[next].id]
    }
}

#[inline]
fn mean(s: &[f64], i: usize, end: usize) -> f64 {
    (s[end] - s[i]) / (end - i) as f64
}

/// For every cell `k`, the largest mean of `v` over windows containing `k`.
/// Divide and conquer on the split point; `O(n log^2 n)`.
pub(crate) fn max_mean_all(v: &[f64]) -> Vec<f64> {
    let n = v.len();
    let s = raw_prefix(v);
    let mut out = v.to_vec();
    if n > 1 {
        crossing(&s, 0, n - 1, &mut out);
    }
    out
}

fn crossing(s: &[f64], lo: usize, hi: usize, out: &mut [f64]) {
    if lo >= hi {
        return;
    }
    let mid = (lo + hi) / 2;
    // Windows (i, j) with lo <= i <= mid < j <= hi pair point i with point j+1.
    let right = UpperHull::build((mid + 2..=hi + 1).map(|t| Pt {
        x: t as f64,
        y: s[t],
        id: t,
    }));
    let mut run = f64::NEG_INFINITY;
    for i in lo..=mid {
        let p = Pt {
            x: i as f64,
            y: s[i],
            id: i,
        };
        let best = right
            .best_from(p)
            .iter()
            .map(|&e| mean(s, i, e))
            .fold(f64::NEG_INFINITY, f64::max);
        run = run.max(best);
        out[i] = out[i].max(run);
    }
    // Mirror (x, y) -> (-x, -y) so the left points become a right-side hull.
    let left = UpperHull::build((lo..=mid).rev().map(|t| Pt {
        x: -(t as f64),
        y: -s[t],
        id: t,
    }));
    let mut run = f64::NEG_INFINITY;
    for j in (mid + 1..=hi).rev() {
        let e = j + 1;
        let q = Pt {
            x: -(e as f64),
            y: -s[e],
            id: e,
        };
        let best = left
            .best_from(q)
            .iter()
            .map(|&i| mean(s, i, e))
            .fold(f64::NEG_INFINITY, f64::max);
        run = run.max(best);
        out[j] = out[j].max(run);
    }
    crossing(s, lo, mid, out);
    crossing(s, mid + 1, hi, out);
}

/// Largest mean of `v` over windows containing cell `k`; `O(n log n)`.
#[cfg(test)]
pub(crate) fn max_mean_containing(v: &[f64], k: usize) -> f64 {
    let s = raw_prefix(v);
    max_mean_containing_prefix(&s, k)
}

pub(crate) fn max_mean_containing_prefix(s: &[f64], k: usize) -> f64 {
    let n = s.len() - 1;
    let right = UpperHull::build((k + 1..=n).map(|t| Pt {
        x: t as f64,
        y: s[t],
        id: t,
    }));
    let mut best = f64::NEG_INFINITY;
    for i in 0..=k {
        let p = Pt {
            x: i as f64,
            y: s[i],
            id: i,
        };
        for e in right.best_from(p) {
            best = best.max(mean(s, i, e));
        }
    }
    best
}
