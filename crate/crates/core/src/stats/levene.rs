use super::dist::f_sf;
use super::{check_finite, Method, TestResult};
use crate::error::{Error, Result};
use crate::metrics::mean;

/// Levene's test for equal variances of two groups (mean-centred).
pub fn levene(a: &[f64], b: &[f64]) -> Result<TestResult> {
    levene_groups(&[a, b])
}

/// Levene's test over any number of groups: one-way ANOVA on the absolute
/// deviations of each value from its group mean.
pub fn levene_groups(groups: &[&[f64]]) -> Result<TestResult> {
    let k = groups.len();
    if k < 2 {
        return Err(Error::InvalidArgument("Levene needs at least two groups".into()));
    }
    for g in groups {
        if g.len() < 2 {
            return Err(Error::InsufficientData {
                what: "Levene group",
                required: 2,
                found: g.len(),
            });
        }
        check_finite(g, "Levene")?;
    }
    let deviations: Vec<Vec<f64>> = groups
        .iter()
        .map(|g| {
            let m = mean(g);
            g.iter().map(|x| (x - m).abs()).collect()
        })
        .collect();
    let total: usize = groups.iter().map(|g| g.len()).sum();
    let grand = deviations.iter().flatten().sum::<f64>() / total as f64;

    let mut between = 0.0;
    let mut within = 0.0;
    for z in &deviations {
        let zm = mean(z);
        between += z.len() as f64 * (zm - grand).powi(2);
        within += z.iter().map(|v| (v - zm).powi(2)).sum::<f64>();
    }
    let df1 = (k - 1) as f64;
    let df2 = (total - k) as f64;
    let f = if between == 0.0 {
        0.0
    } else if within == 0.0 {
        f64::INFINITY
    } else {
        (between / df1) / (within / df2)
    };
    let p = f_sf(f, df1, df2)?;
    let mut r = TestResult::new(Method::Levene, f, p, groups.iter().map(|g| g.len()).collect());
    r.df = Some(df2);
    r.df_num = Some(df1);
    Ok(r)
}
