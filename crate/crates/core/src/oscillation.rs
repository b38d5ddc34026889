//! Mean oscillation of every window in `O(n^2 log n)`.
//!
//! For a fixed left end `i` the window grows one cell at a time. Cells are
//! inserted into Fenwick trees keyed by the rank of their value, so the
//! count and sum of the cells on either side of the current mean come out
//! of two prefix queries.

use crate::grid::raw_prefix;

struct Fenwick {
    tree: Vec<f64>,
}

impl Fenwick {
    fn new(n: usize) -> Self {
        Self {
            tree: vec![0.0; n + 1],
        }
    }

    fn clear(&mut self) {
        self.tree.iter_mut().for_each(|t| *t = 0.0);
    }

    fn add(&mut self, pos: usize, w: f64) {
        let mut p = pos + 1;
        while p < self.tree.len() {
            self.tree[p] += w;
            p += p & p.wrapping_neg();
        }
    }

    /// Sum over positions `< end`.
    fn prefix(&self, end: usize) -> f64 {
        let mut p = end;
        let mut s = 0.0;
        while p > 0 {
            s += self.tree[p];
            p &= p - 1;
        }
        s
    }
}

/// Sorted distinct values and the rank of each cell.
struct Ranks {
    sorted: Vec<f64>,
    of_cell: Vec<usize>,
}

impl Ranks {
    fn new(values: &[f64]) -> Self {
        let mut sorted = values.to_vec();
        sorted.sort_by(f64::total_cmp);
        sorted.dedup();
        let of_cell = values
            .iter()
            .map(|v| sorted.partition_point(|s| s < v))
            .collect();
        Self { sorted, of_cell }
    }

    /// Number of distinct values `<= c`.
    fn at_most(&self, c: f64) -> usize {
        self.sorted.partition_point(|&s| s <= c)
    }

    fn len(&self) -> usize {
        self.sorted.len()
    }
}

/// Calls `visit(i, j, mean, mean_abs_dev)` for every window `i..=j`, in
/// ascending `(i, j)` order. `mean_abs_dev` is the average of `|v - mean|`.
pub(crate) fn for_each_window_oscillation(
    values: &[f64],
    mut visit: impl FnMut(usize, usize, f64, f64),
) {
    let n = values.len();
    let s = raw_prefix(values);
    let ranks = Ranks::new(values);
    let r = ranks.len();
    let mut cnt_lo = Fenwick::new(r);
    let mut sum_lo = Fenwick::new(r);
    let mut cnt_hi = Fenwick::new(r);
    let mut sum_hi = Fenwick::new(r);
    for i in 0..n {
        cnt_lo.clear();
        sum_lo.clear();
        cnt_hi.clear();
        sum_hi.clear();
        let (mut lo, mut hi) = (values[i], values[i]);
        for j in i..n {
            let v = values[j];
            lo = lo.min(v);
            hi = hi.max(v);
            let rk = ranks.of_cell[j];
            cnt_lo.add(rk, 1.0);
            sum_lo.add(rk, v);
            // hi trees are keyed by reversed rank so suffixes are prefixes.
            cnt_hi.add(r - 1 - rk, 1.0);
            sum_hi.add(r - 1 - rk, v);
            if lo == hi {
                // Flat window: no rounding residue.
                visit(i, j, v, 0.0);
                continue;
            }
            let len = (j - i + 1) as f64;
            let c = (s[j + 1] - s[i]) / len;
            let le = ranks.at_most(c);
            let below = c * cnt_lo.prefix(le) - sum_lo.prefix(le);
            let above = sum_hi.prefix(r - le) - c * cnt_hi.prefix(r - le);
            visit(i, j, c, (below + above).max(0.0) / len);
        }
    }
}

/// Calls `visit(i, j, avg)` with `avg` the mean of `exp(lambda |v - mean|)`
/// over every window. Returns `false` without visiting when the weights
/// would overflow (`lambda * (max - min)` too large); callers then fall
/// back to direct evaluation.
pub(crate) fn for_each_window_exp(
    values: &[f64],
    lambda: f64,
    mut visit: impl FnMut(usize, usize, f64),
) -> bool {
    let n = values.len();
    if n == 0 {
        return true;
    }
    let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if !(lambda * (hi - lo) < 600.0) {
        return false;
    }
    let s = raw_prefix(values);
    let ranks = Ranks::new(values);
    let r = ranks.len();
    // exp(lambda (v - c)) = exp(lambda (v - lo)) * exp(-lambda (c - lo)), and
    // the mirror image for cells below the mean.
    let up: Vec<f64> = values.iter().map(|v| (lambda * (v - lo)).exp()).collect();
    let down: Vec<f64> = values.iter().map(|v| (lambda * (hi - v)).exp()).collect();
    let mut below = Fenwick::new(r);
    let mut above = Fenwick::new(r);
    for i in 0..n {
        below.clear();
        above.clear();
        let (mut flat_lo, mut flat_hi) = (values[i], values[i]);
        for j in i..n {
            let rk = ranks.of_cell[j];
            below.add(rk, down[j]);
            above.add(r - 1 - rk, up[j]);
            flat_lo = flat_lo.min(values[j]);
            flat_hi = flat_hi.max(values[j]);
            if flat_lo == flat_hi {
                visit(i, j, 1.0);
                continue;
            }
            let len = (j - i + 1) as f64;
            let c = (s[j + 1] - s[i]) / len;
            let le = ranks.at_most(c);
            let total = below.prefix(le) * (lambda * (c - hi)).exp()
                + above.prefix(r - le) * (-lambda * (c - lo)).exp();
            visit(i, j, total / len);
        }
    }
    true
}
