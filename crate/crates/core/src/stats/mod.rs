//! Group comparison and correlation tests.
//!
//! Screening follows the usual decision path: Shapiro-Wilk on each variable
//! and Levene across groups choose between the parametric test (Student t,
//! Pearson) and its rank-based counterpart (Wilcoxon rank-sum, Spearman).
//! [`auto_compare`] and [`auto_correlate`] run that path and record the
//! screening p-values on the returned [`TestResult`].

use std::fmt;

mod auto;
mod correlation;
pub mod dist;
mod levene;
mod power;
mod shapiro;
mod ttest;
mod wilcoxon;

pub use auto::{auto_compare, auto_correlate};
pub use correlation::{linear_fit, midranks, pearson_r, spearman_rho, LinearFit};
pub use levene::{levene, levene_groups};
pub use power::{power_two_sample_t, PowerResult};
pub use shapiro::shapiro_wilk;
pub use ttest::{cohens_d, t_test_unpaired};
pub use wilcoxon::{rank_sum_exact_counts, wilcoxon_rank_sum, ExactCounts, EXACT_MAX_TOTAL};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    ShapiroWilk,
    Levene,
    TTest,
    Wilcoxon,
    Pearson,
    Spearman,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::ShapiroWilk => "shapiro_wilk",
            Method::Levene => "levene",
            Method::TTest => "t_test",
            Method::Wilcoxon => "wilcoxon",
            Method::Pearson => "pearson",
            Method::Spearman => "spearman",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A screening test run before the final test was chosen.
#[derive(Debug, Clone, PartialEq)]
pub struct Screening {
    /// What was screened, e.g. `shapiro_a`.
    pub label: String,
    pub method: Method,
    pub p_value: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TestResult {
    pub method: Method,
    /// W for Shapiro-Wilk, F for Levene, t for t-test and both correlations,
    /// the rank sum of the first group for Wilcoxon.
    pub statistic: f64,
    pub p_value: f64,
    /// Degrees of freedom (the denominator df for Levene).
    pub df: Option<f64>,
    /// Numerator degrees of freedom, Levene only.
    pub df_num: Option<f64>,
    /// Cohen's d for the t-test, r or rho for correlations.
    pub effect_size: Option<f64>,
    /// Sample sizes involved, in argument order.
    pub n: Vec<usize>,
    /// Wilcoxon only: p-value from full enumeration rather than the normal
    /// approximation.
    pub exact: bool,
    /// Correlation of exactly +-1: the t statistic is infinite and p is 0.
    pub degenerate: bool,
    pub screening: Vec<Screening>,
}

impl TestResult {
    pub(crate) fn new(method: Method, statistic: f64, p_value: f64, n: Vec<usize>) -> Self {
        TestResult {
            method,
            statistic,
            p_value: p_value.clamp(0.0, 1.0),
            df: None,
            df_num: None,
            effect_size: None,
            n,
            exact: false,
            degenerate: false,
            screening: Vec::new(),
        }
    }

    /// Screening p-values followed by the chosen method, e.g.
    /// `shapiro_a=0.41;shapiro_b=0.22;levene=0.63->t_test`.
    pub fn route(&self) -> String {
        let mut out = String::new();
        for s in &self.screening {
            if !out.is_empty() {
                out.push(';');
            }
            out.push_str(&format!("{}={}", s.label, crate::io_csv::format_sig6(s.p_value)));
        }
        out.push_str("->");
        out.push_str(self.method.as_str());
        out
    }
}

pub(crate) fn check_finite(xs: &[f64], what: &'static str) -> crate::error::Result<()> {
    if let Some(i) = xs.iter().position(|x| !x.is_finite()) {
        return Err(crate::error::Error::InvalidArgument(format!(
            "{what}: non-finite value {} at index {i}",
            xs[i]
        )));
    }
    Ok(())
}
