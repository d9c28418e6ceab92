use super::dist::{noncentral_t_cdf, noncentral_t_sf, t_quantile};
use crate::error::{Error, Result};

/// Post-hoc power of a two-tailed, two-sample Student t-test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerResult {
    /// Cohen's d the power was computed for.
    pub d: f64,
    /// Noncentrality parameter d * sqrt(n1 * n2 / (n1 + n2)).
    pub delta: f64,
    /// Upper critical value of the central t at 1 - alpha / 2.
    pub t_crit: f64,
    pub df: f64,
    pub alpha: f64,
    pub power: f64,
}

/// Probability that |T'| exceeds the critical t, where T' is noncentral t
/// with n1 + n2 - 2 degrees of freedom and noncentrality `delta`.
pub fn power_two_sample_t(d: f64, n1: usize, n2: usize, alpha: f64) -> Result<PowerResult> {
    if n1 < 2 || n2 < 2 {
        return Err(Error::InvalidArgument(format!("power analysis needs n1, n2 >= 2, got {n1} and {n2}")));
    }
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidArgument(format!("alpha must lie in (0, 1), got {alpha}")));
    }
    if !d.is_finite() {
        return Err(Error::InvalidArgument(format!("effect size must be finite, got {d}")));
    }
    let (f1, f2) = (n1 as f64, n2 as f64);
    let delta = d * (f1 * f2 / (f1 + f2)).sqrt();
    let df = f1 + f2 - 2.0;
    let t_crit = t_quantile(1.0 - alpha / 2.0, df)?;
    let upper = noncentral_t_sf(t_crit, df, delta)?;
    let lower = noncentral_t_cdf(-t_crit, df, delta)?;
    Ok(PowerResult {
        d,
        delta,
        t_crit,
        df,
        alpha,
        power: (upper + lower).clamp(0.0, 1.0),
    })
}
