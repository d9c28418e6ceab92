use super::dist::t_two_tailed;
use super::{check_finite, Method, TestResult};
use crate::error::{Error, Result};
use crate::metrics::mean;

struct Pooled {
    mean_a: f64,
    mean_b: f64,
    sd: f64,
}

fn pooled(a: &[f64], b: &[f64], what: &'static str) -> Result<Pooled> {
    for g in [a, b] {
        if g.len() < 2 {
            return Err(Error::InsufficientData {
                what,
                required: 2,
                found: g.len(),
            });
        }
        check_finite(g, what)?;
    }
    let (ma, mb) = (mean(a), mean(b));
    let ss = |g: &[f64], m: f64| g.iter().map(|x| (x - m).powi(2)).sum::<f64>();
    let var = (ss(a, ma) + ss(b, mb)) / (a.len() + b.len() - 2) as f64;
    if var.is_nan() || var <= 0.0 {
        return Err(Error::ZeroVariance(what));
    }
    Ok(Pooled {
        mean_a: ma,
        mean_b: mb,
        sd: var.sqrt(),
    })
}

/// Standardized mean difference (mean_a - mean_b) / pooled SD.
pub fn cohens_d(a: &[f64], b: &[f64]) -> Result<f64> {
    let p = pooled(a, b, "Cohen's d")?;
    Ok((p.mean_a - p.mean_b) / p.sd)
}

/// Student's two-sample t-test with pooled variance, two-tailed.
///
/// `effect_size` holds Cohen's d.
pub fn t_test_unpaired(a: &[f64], b: &[f64]) -> Result<TestResult> {
    let p = pooled(a, b, "t-test")?;
    let (n1, n2) = (a.len() as f64, b.len() as f64);
    let se = p.sd * (1.0 / n1 + 1.0 / n2).sqrt();
    let t = (p.mean_a - p.mean_b) / se;
    let df = n1 + n2 - 2.0;
    let mut r = TestResult::new(Method::TTest, t, t_two_tailed(t, df)?, vec![a.len(), b.len()]);
    r.df = Some(df);
    r.effect_size = Some((p.mean_a - p.mean_b) / p.sd);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_groups() {
        let a = [3.0, 1.0, 4.0, 1.0, 5.0];
        let r = t_test_unpaired(&a, &a).unwrap();
        assert_eq!((r.statistic, r.p_value, r.effect_size), (0.0, 1.0, Some(0.0)));
        assert_eq!(cohens_d(&a, &a).unwrap(), 0.0);
    }

    #[test]
    fn hand_computed_small_case() {
        // pooled SD 1, SE sqrt(2/3)
        let r = t_test_unpaired(&[1.0, 2.0, 3.0], &[2.0, 3.0, 4.0]).unwrap();
        assert!((r.statistic + 1.0 / (2.0f64 / 3.0).sqrt()).abs() < 1e-12);
        assert!((r.statistic + 1.2247).abs() < 1e-4);
        assert_eq!(r.df, Some(4.0));
        assert!((r.p_value - 0.2878641347266908).abs() < 1e-12);
    }

    #[test]
    fn df_from_group_sizes() {
        let a: Vec<f64> = (0..10).map(|i| i as f64).collect();
        let b: Vec<f64> = (0..11).map(|i| (i * i) as f64 / 7.0).collect();
        assert_eq!(t_test_unpaired(&a, &b).unwrap().df, Some(19.0));
    }

    #[test]
    fn unit_effect() {
        // means 1 and 0, both groups with SD 1
        let d = cohens_d(&[0.0, 1.0, 2.0], &[-1.0, 0.0, 1.0]).unwrap();
        assert!((d - 1.0).abs() < 1e-15);
    }

    #[test]
    fn zero_variance_rejected() {
        assert!(matches!(t_test_unpaired(&[2.0, 2.0], &[2.0, 2.0, 2.0]), Err(Error::ZeroVariance(_))));
        assert!(cohens_d(&[1.0], &[1.0, 2.0]).is_err());
    }
}
