//! Wilcoxon rank-sum test (equivalently Mann-Whitney U).
//!
//! Small tie-free samples get an exact p-value from the null distribution of
//! the rank sum, counted by dynamic programming over subsets of ranks. All
//! other inputs use the normal approximation with a tie-corrected variance
//! and a 0.5 continuity correction.

use super::correlation::midranks;
use super::dist::{normal_cdf, normal_sf};
use super::{check_finite, Method, TestResult};
use crate::error::{Error, Result};

/// Largest combined sample size that takes the exact route.
pub const EXACT_MAX_TOTAL: usize = 12;

/// Tail counts of the rank-sum null distribution.
///
/// Out of `total` = C(n1 + n2, n1) equally likely assignments of ranks to
/// the first group, `lower` have rank sum <= the observed one and `upper`
/// have rank sum >= it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactCounts {
    pub lower: u128,
    pub upper: u128,
    pub total: u128,
}

impl ExactCounts {
    /// min(1, 2 * min(lower, upper) / total).
    pub fn two_tailed_p(&self) -> f64 {
        let tail = self.lower.min(self.upper);
        (2.0 * tail as f64 / self.total as f64).min(1.0)
    }
}

/// Counts rank assignments for a first group of `n1` out of `n1 + n2`
/// untied ranks, relative to an observed rank sum of `observed`.
pub fn rank_sum_exact_counts(n1: usize, n2: usize, observed: u64) -> ExactCounts {
    let n = n1 + n2;
    let max_sum = (n2 + 1..=n).sum::<usize>();
    // ways[k][s]: k-subsets of the ranks seen so far with sum s
    let mut ways = vec![vec![0u128; max_sum + 1]; n1 + 1];
    ways[0][0] = 1;
    for rank in 1..=n {
        for k in (1..=n1.min(rank)).rev() {
            let (lo, hi) = ways.split_at_mut(k);
            let (prev, cur) = (&lo[k - 1], &mut hi[0]);
            for s in (rank..=max_sum).rev() {
                cur[s] += prev[s - rank];
            }
        }
    }
    let dist = &ways[n1];
    let obs = usize::try_from(observed).unwrap_or(usize::MAX);
    let lower = dist.iter().take(obs.saturating_add(1)).sum();
    let upper = dist.iter().skip(obs).sum();
    ExactCounts {
        lower,
        upper,
        total: dist.iter().sum(),
    }
}

/// Two-sided Wilcoxon rank-sum test. The statistic is the sum of the first
/// group's (mid)ranks in the pooled sample.
pub fn wilcoxon_rank_sum(a: &[f64], b: &[f64]) -> Result<TestResult> {
    for g in [a, b] {
        if g.is_empty() {
            return Err(Error::InsufficientData {
                what: "Wilcoxon group",
                required: 1,
                found: 0,
            });
        }
        check_finite(g, "Wilcoxon")?;
    }
    let (n1, n2) = (a.len(), b.len());
    let n = n1 + n2;
    let pooled: Vec<f64> = a.iter().chain(b).copied().collect();
    let ranks = midranks(&pooled);
    let rank_sum: f64 = ranks[..n1].iter().sum();

    let mut sorted = pooled;
    sorted.sort_by(f64::total_cmp);
    let tie_term: f64 = sorted
        .chunk_by(|x, y| x == y)
        .map(|run| {
            let t = run.len() as f64;
            t * t * t - t
        })
        .sum();
    let has_ties = tie_term > 0.0;

    if n <= EXACT_MAX_TOTAL && !has_ties {
        let counts = rank_sum_exact_counts(n1, n2, rank_sum as u64);
        let mut r = TestResult::new(Method::Wilcoxon, rank_sum, counts.two_tailed_p(), vec![n1, n2]);
        r.exact = true;
        return Ok(r);
    }

    let (f1, f2, nf) = (n1 as f64, n2 as f64, n as f64);
    let expected = f1 * (nf + 1.0) / 2.0;
    let variance = f1 * f2 / 12.0 * ((nf + 1.0) - tie_term / (nf * (nf - 1.0)));
    let p = if variance <= 0.0 {
        1.0
    } else {
        let diff = rank_sum - expected;
        let correction = if diff > 0.0 {
            0.5
        } else if diff < 0.0 {
            -0.5
        } else {
            0.0
        };
        let z = (diff - correction) / variance.sqrt();
        (2.0 * normal_cdf(z).min(normal_sf(z))).min(1.0)
    };
    Ok(TestResult::new(Method::Wilcoxon, rank_sum, p, vec![n1, n2]))
}
