use super::dist::t_two_tailed;
use super::{check_finite, Method, TestResult};
use crate::error::{Error, Result};
use crate::metrics::mean;

/// 1-based ranks; tied values share the mean of the ranks they span.
pub fn midranks(xs: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..xs.len()).collect();
    order.sort_by(|&i, &j| xs[i].total_cmp(&xs[j]));
    let mut ranks = vec![0.0; xs.len()];
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && xs[order[end]] == xs[order[start]] {
            end += 1;
        }
        // positions start..end hold ranks start+1..=end
        let rank = (start + 1 + end) as f64 / 2.0;
        for &i in &order[start..end] {
            ranks[i] = rank;
        }
        start = end;
    }
    ranks
}

fn check_pair(x: &[f64], y: &[f64], what: &'static str) -> Result<()> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    if x.len() < 3 {
        return Err(Error::InsufficientData {
            what,
            required: 3,
            found: x.len(),
        });
    }
    check_finite(x, what)?;
    check_finite(y, what)
}

fn correlation(x: &[f64], y: &[f64], what: &'static str) -> Result<f64> {
    let (mx, my) = (mean(x), mean(y));
    let (mut sxx, mut syy, mut sxy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        let (dx, dy) = (a - mx, b - my);
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if !(sxx > 0.0 && syy > 0.0) {
        return Err(Error::ZeroVariance(what));
    }
    Ok((sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0))
}

/// Packs a correlation coefficient with its t statistic and two-tailed p.
fn correlation_result(method: Method, r: f64, n: usize) -> Result<TestResult> {
    let df = (n - 2) as f64;
    let mut result = if 1.0 - r.abs() <= 4.0 * f64::EPSILON {
        let r = r.signum();
        let mut res = TestResult::new(method, r * f64::INFINITY, 0.0, vec![n]);
        res.effect_size = Some(r);
        res.degenerate = true;
        res
    } else {
        let t = r * df.sqrt() / (1.0 - r * r).sqrt();
        let mut res = TestResult::new(method, t, t_two_tailed(t, df)?, vec![n]);
        res.effect_size = Some(r);
        res
    };
    result.df = Some(df);
    Ok(result)
}

/// Pearson product-moment correlation. `effect_size` holds r, `statistic`
/// the t value r * sqrt(n - 2) / sqrt(1 - r^2).
pub fn pearson_r(x: &[f64], y: &[f64]) -> Result<TestResult> {
    check_pair(x, y, "Pearson correlation")?;
    let r = correlation(x, y, "Pearson correlation")?;
    correlation_result(Method::Pearson, r, x.len())
}

/// Spearman rank correlation: Pearson's r on midranks, with the same t
/// approximation for p.
pub fn spearman_rho(x: &[f64], y: &[f64]) -> Result<TestResult> {
    check_pair(x, y, "Spearman correlation")?;
    let rho = correlation(&midranks(x), &midranks(y), "Spearman correlation")?;
    correlation_result(Method::Spearman, rho, x.len())
}

/// Ordinary least-squares line y = slope * x + intercept.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearFit {
    pub slope: f64,
    pub intercept: f64,
}

impl LinearFit {
    pub fn at(&self, x: f64) -> f64 {
        self.slope * x + self.intercept
    }
}

pub fn linear_fit(x: &[f64], y: &[f64]) -> Result<LinearFit> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    if x.len() < 2 {
        return Err(Error::InsufficientData {
            what: "linear fit",
            required: 2,
            found: x.len(),
        });
    }
    let (mx, my) = (mean(x), mean(y));
    let sxx: f64 = x.iter().map(|a| (a - mx).powi(2)).sum();
    if sxx.is_nan() || sxx <= 0.0 {
        return Err(Error::ZeroVariance("linear fit x"));
    }
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let slope = sxy / sxx;
    Ok(LinearFit {
        slope,
        intercept: my - slope * mx,
    })
}
