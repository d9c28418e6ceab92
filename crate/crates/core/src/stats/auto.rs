use super::{levene, pearson_r, shapiro_wilk, spearman_rho, t_test_unpaired, wilcoxon_rank_sum};
use super::{Method, Screening, TestResult};
use crate::error::{Error, Result};

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("alpha must lie in (0, 1), got {alpha}")))
    }
}

fn screen(label: &str, method: Method, p_value: f64) -> Screening {
    Screening {
        label: label.to_owned(),
        method,
        p_value,
    }
}

/// Compares two groups: Student t when both groups pass Shapiro-Wilk and
/// the pair passes Levene (all p > alpha), otherwise Wilcoxon rank-sum.
pub fn auto_compare(a: &[f64], b: &[f64], alpha: f64) -> Result<TestResult> {
    check_alpha(alpha)?;
    for g in [a, b] {
        if g.len() < 3 {
            return Err(Error::InsufficientData {
                what: "group comparison",
                required: 3,
                found: g.len(),
            });
        }
    }
    let screening = vec![
        screen("shapiro_a", Method::ShapiroWilk, shapiro_wilk(a)?.p_value),
        screen("shapiro_b", Method::ShapiroWilk, shapiro_wilk(b)?.p_value),
        screen("levene", Method::Levene, levene(a, b)?.p_value),
    ];
    let parametric = screening.iter().all(|s| s.p_value > alpha);
    let mut result = if parametric {
        t_test_unpaired(a, b)?
    } else {
        wilcoxon_rank_sum(a, b)?
    };
    result.screening = screening;
    Ok(result)
}

/// Correlates two variables: Pearson when both pass Shapiro-Wilk
/// (p > alpha), otherwise Spearman.
pub fn auto_correlate(x: &[f64], y: &[f64], alpha: f64) -> Result<TestResult> {
    check_alpha(alpha)?;
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    if x.len() < 3 {
        return Err(Error::InsufficientData {
            what: "correlation",
            required: 3,
            found: x.len(),
        });
    }
    let screening = vec![
        screen("shapiro_x", Method::ShapiroWilk, shapiro_wilk(x)?.p_value),
        screen("shapiro_y", Method::ShapiroWilk, shapiro_wilk(y)?.p_value),
    ];
    let mut result = if screening.iter().all(|s| s.p_value > alpha) {
        pearson_r(x, y)?
    } else {
        spearman_rho(x, y)?
    };
    result.screening = screening;
    Ok(result)
}
