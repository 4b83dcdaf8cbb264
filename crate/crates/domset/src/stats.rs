//! Nonparametric comparison machinery: Wilcoxon signed-rank test, Friedman
//! mean ranks, and Holm-adjusted pairwise comparisons.

use statrs::distribution::{ContinuousCDF, Normal};

use crate::error::{Error, Result};

/// Matched pairs `(value_a, value_b)`; the sign convention of every summary
/// is relative to this column order, so report generation labels columns
/// explicitly.
#[derive(Clone, Debug, PartialEq)]
pub struct PairedSamples {
    pairs: Vec<(f64, f64)>,
}

impl PairedSamples {
    pub fn new(pairs: Vec<(f64, f64)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::Validation("paired samples must be non-empty".into()));
        }
        Ok(Self { pairs })
    }

    pub fn pairs(&self) -> &[(f64, f64)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Swapped-column view, for direction checks.
    pub fn swapped(&self) -> Self {
        Self { pairs: self.pairs.iter().map(|&(a, b)| (b, a)).collect() }
    }
}

/// Wilcoxon signed-rank outcome. `z` is signed: it is built from the rank
/// sum of the `a < b` pairs, so swapping the columns negates it, and its
/// magnitude equals the classical min-rank-sum statistic.
#[derive(Clone, Debug, PartialEq)]
pub struct RankSummary {
    pub n_greater: usize,
    pub n_less: usize,
    pub n_equal: usize,
    pub z: f64,
    /// Two-tailed normal-approximation p-value.
    pub p_value: f64,
}

/// Counts pairs with `a > b`, `a < b`, and `a = b`.
pub fn sign_summary(s: &PairedSamples) -> (usize, usize, usize) {
    let mut greater = 0;
    let mut less = 0;
    let mut equal = 0;
    for &(a, b) in &s.pairs {
        if a > b {
            greater += 1;
        } else if a < b {
            less += 1;
        } else {
            equal += 1;
        }
    }
    (greater, less, equal)
}

/// Wilcoxon signed-rank test with the zero-difference-discarding convention
/// and average ranks on tied magnitudes.
///
/// With `N` nonzero differences, `W⁻` the rank sum of the negative ones and
/// tie groups of sizes `t`:
/// `z = (W⁻ − N(N+1)/4) / √(N(N+1)(2N+1)/24 − Σ(t³−t)/48)`.
pub fn wilcoxon_signed_rank(s: &PairedSamples) -> Result<RankSummary> {
    let (n_greater, n_less, n_equal) = sign_summary(s);
    let diffs: Vec<f64> = s
        .pairs
        .iter()
        .map(|&(a, b)| a - b)
        .filter(|d| *d != 0.0)
        .collect();
    if diffs.is_empty() {
        return Err(Error::DegenerateInput(
            "all paired differences are zero after discarding ties".into(),
        ));
    }
    let n = diffs.len();
    let ranks = average_ranks(&diffs.iter().map(|d| d.abs()).collect::<Vec<_>>());
    let w_minus: f64 = diffs
        .iter()
        .zip(&ranks)
        .filter(|(d, _)| **d < 0.0)
        .map(|(_, r)| *r)
        .sum();

    let nf = n as f64;
    let mean = nf * (nf + 1.0) / 4.0;
    let tie_term: f64 = tie_group_sizes(&diffs.iter().map(|d| d.abs()).collect::<Vec<_>>())
        .into_iter()
        .map(|t| {
            let t = t as f64;
            (t * t * t - t) / 48.0
        })
        .sum();
    let variance = nf * (nf + 1.0) * (2.0 * nf + 1.0) / 24.0 - tie_term;
    if variance <= 0.0 {
        return Err(Error::DegenerateInput(
            "zero variance: every nonzero difference is tied".into(),
        ));
    }
    let z = (w_minus - mean) / variance.sqrt();
    let normal = Normal::new(0.0, 1.0).expect("unit normal");
    let p_value = 2.0 * normal.cdf(-z.abs());
    Ok(RankSummary { n_greater, n_less, n_equal, z, p_value })
}

/// Friedman analysis output: per-algorithm mean ranks (rank 1 = smallest
/// value) and the chi-square statistic
/// `χ²_F = 12N/(k(k+1)) · [Σ R̄_j² − k(k+1)²/4]` over mean ranks `R̄_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct FriedmanResult {
    pub mean_ranks: Vec<f64>,
    pub chi_square: f64,
}

/// Ranks each row ascending with average ranks on ties and averages the
/// columns. Requires at least two rows (instances) and two columns
/// (algorithms), all rows of equal width.
pub fn friedman_mean_ranks(matrix: &[Vec<f64>]) -> Result<FriedmanResult> {
    let rows = matrix.len();
    if rows < 2 {
        return Err(Error::Validation("friedman needs at least 2 instances".into()));
    }
    let k = matrix[0].len();
    if k < 2 {
        return Err(Error::Validation("friedman needs at least 2 algorithms".into()));
    }
    let mut sums = vec![0.0; k];
    for (i, row) in matrix.iter().enumerate() {
        if row.len() != k {
            return Err(Error::Validation(format!(
                "ragged input: row {i} has {} entries, expected {k}",
                row.len()
            )));
        }
        for (j, r) in average_ranks(row).into_iter().enumerate() {
            sums[j] += r;
        }
    }
    let n = rows as f64;
    let kf = k as f64;
    let mean_ranks: Vec<f64> = sums.iter().map(|s| s / n).collect();
    let sum_sq: f64 = mean_ranks.iter().map(|r| (r * n) * (r * n)).sum();
    let chi_square = 12.0 / (n * kf * (kf + 1.0)) * sum_sq - 3.0 * n * (kf + 1.0);
    Ok(FriedmanResult { mean_ranks, chi_square })
}

/// Holm step-down adjustment of a family of p-values.
pub fn holm_adjust(p_values: &[f64]) -> Vec<f64> {
    let m = p_values.len();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| p_values[a].total_cmp(&p_values[b]));
    let mut adjusted = vec![0.0; m];
    let mut running_max = 0.0f64;
    for (rank, &idx) in order.iter().enumerate() {
        let scaled = ((m - rank) as f64 * p_values[idx]).min(1.0);
        running_max = running_max.max(scaled);
        adjusted[idx] = running_max;
    }
    adjusted
}

/// One row of the pairwise comparison table backing critical-difference
/// reporting.
#[derive(Clone, Debug)]
pub struct PairwiseComparison {
    pub a: String,
    pub b: String,
    pub z: f64,
    pub p_value: f64,
    pub p_holm: f64,
}

/// All-pairs Wilcoxon tests over the columns of `matrix` with Holm
/// adjustment across the family. Pairs whose differences are all zero are
/// reported with `z = 0, p = 1`.
pub fn pairwise_wilcoxon_holm(
    matrix: &[Vec<f64>],
    labels: &[String],
) -> Result<Vec<PairwiseComparison>> {
    let k = labels.len();
    if matrix.iter().any(|row| row.len() != k) {
        return Err(Error::Validation("matrix width must match label count".into()));
    }
    let mut raw = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let pairs: Vec<(f64, f64)> = matrix.iter().map(|row| (row[i], row[j])).collect();
            let samples = PairedSamples::new(pairs)?;
            let (z, p) = match wilcoxon_signed_rank(&samples) {
                Ok(summary) => (summary.z, summary.p_value),
                Err(Error::DegenerateInput(_)) => (0.0, 1.0),
                Err(e) => return Err(e),
            };
            raw.push((i, j, z, p));
        }
    }
    let adjusted = holm_adjust(&raw.iter().map(|r| r.3).collect::<Vec<_>>());
    Ok(raw
        .into_iter()
        .zip(adjusted)
        .map(|((i, j, z, p_value), p_holm)| PairwiseComparison {
            a: labels[i].clone(),
            b: labels[j].clone(),
            z,
            p_value,
            p_holm,
        })
        .collect())
}

/// Ascending average ranks (rank 1 = smallest value).
fn average_ranks(values: &[f64]) -> Vec<f64> {
    let n = values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; n];
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j + 1 < n && values[order[j + 1]] == values[order[i]] {
            j += 1;
        }
        let avg = (i + j) as f64 / 2.0 + 1.0;
        for &idx in &order[i..=j] {
            ranks[idx] = avg;
        }
        i = j + 1;
    }
    ranks
}

fn tie_group_sizes(values: &[f64]) -> Vec<usize> {
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.total_cmp(b));
    let mut groups = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i;
        while j + 1 < sorted.len() && sorted[j + 1] == sorted[i] {
            j += 1;
        }
        if j > i {
            groups.push(j - i + 1);
        }
        i = j + 1;
    }
    groups
}
