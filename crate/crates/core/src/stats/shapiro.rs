// Shapiro-Wilk W test, Royston's approximation (AS R94) for 3 <= n <= 5000.
//
// The coefficients a_i are approximated from normal order-statistic scores;
// W is the squared correlation between the ordered sample and the
// coefficients. The p-value uses a normalizing transformation of 1 - W whose
// mean and spread are polynomials in n (n <= 11) or log n (n >= 12). For
// n = 3 the null distribution of W is known in closed form.

use super::dist::{normal_quantile, normal_sf};
use super::{check_finite, Method, TestResult};
use crate::error::{Error, Result};

const C1: [f64; 6] = [0.0, 0.221157, -0.147981, -2.071190, 4.434685, -2.706056];
const C2: [f64; 6] = [0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633];
const C3: [f64; 4] = [0.5440, -0.39978, 0.025054, -6.714e-4];
const C4: [f64; 4] = [1.3822, -0.77857, 0.062767, -0.0020322];
const C5: [f64; 4] = [-1.5861, -0.31082, -0.083751, 0.0038915];
const C6: [f64; 3] = [-0.4803, -0.082676, 0.0030302];
const G: [f64; 2] = [-2.273, 0.459];

const SMALL: f64 = 1e-19;

fn poly(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &ci| acc * x + ci)
}

/// Half of the antisymmetric coefficient vector: a[0] pairs with the
/// extremes, a[n/2 - 1] with the innermost pair.
fn coefficients(n: usize) -> Vec<f64> {
    let half = n / 2;
    if n == 3 {
        return vec![std::f64::consts::FRAC_1_SQRT_2];
    }
    let an = n as f64;
    let an25 = an + 0.25;
    let m: Vec<f64> = (1..=half).map(|i| normal_quantile((i as f64 - 0.375) / an25)).collect();
    let summ2 = 2.0 * m.iter().map(|v| v * v).sum::<f64>();
    let ssumm2 = summ2.sqrt();
    let rsn = 1.0 / an.sqrt();
    let a1 = poly(&C1, rsn) - m[0] / ssumm2;

    let mut a = vec![0.0; half];
    let (first, fac) = if n > 5 {
        let a2 = -m[1] / ssumm2 + poly(&C2, rsn);
        let fac = ((summ2 - 2.0 * m[0] * m[0] - 2.0 * m[1] * m[1]) / (1.0 - 2.0 * a1 * a1 - 2.0 * a2 * a2)).sqrt();
        a[1] = a2;
        (2, fac)
    } else {
        let fac = ((summ2 - 2.0 * m[0] * m[0]) / (1.0 - 2.0 * a1 * a1)).sqrt();
        (1, fac)
    };
    a[0] = a1;
    for i in first..half {
        a[i] = -m[i] / fac;
    }
    a
}

/// Shapiro-Wilk test of normality.
pub fn shapiro_wilk(samples: &[f64]) -> Result<TestResult> {
    let n = samples.len();
    if n < 3 {
        return Err(Error::InsufficientData {
            what: "Shapiro-Wilk",
            required: 3,
            found: n,
        });
    }
    if n > 5000 {
        return Err(Error::InvalidArgument(format!("Shapiro-Wilk supports at most 5000 values, got {n}")));
    }
    check_finite(samples, "Shapiro-Wilk")?;

    let mut x = samples.to_vec();
    x.sort_by(f64::total_cmp);
    let range = x[n - 1] - x[0];
    if range < SMALL {
        return Err(Error::ZeroVariance("Shapiro-Wilk sample"));
    }

    let half = coefficients(n);
    // full coefficient for the i-th order statistic (0-based)
    let coef = |i: usize| -> f64 {
        let j = n - 1 - i;
        match i.cmp(&j) {
            std::cmp::Ordering::Less => -half[i],
            std::cmp::Ordering::Greater => half[j],
            std::cmp::Ordering::Equal => 0.0,
        }
    };

    // W as the squared correlation of scaled data and coefficients;
    // 1 - W is formed directly to keep precision when W is near 1.
    let xs: Vec<f64> = x.iter().map(|v| v / range).collect();
    let mean_x = xs.iter().sum::<f64>() / n as f64;
    let mean_a = (0..n).map(coef).sum::<f64>() / n as f64;
    let (mut ssa, mut ssx, mut sax) = (0.0, 0.0, 0.0);
    for (i, xi) in xs.iter().enumerate() {
        let da = coef(i) - mean_a;
        let dx = xi - mean_x;
        ssa += da * da;
        ssx += dx * dx;
        sax += da * dx;
    }
    let ssassx = (ssa * ssx).sqrt();
    let w1 = (ssassx - sax) * (ssassx + sax) / (ssa * ssx);
    let w = 1.0 - w1;

    let p = if n == 3 {
        use std::f64::consts::{FRAC_PI_3, PI};
        (6.0 / PI * (w.sqrt().asin() - FRAC_PI_3)).max(0.0)
    } else {
        let an = n as f64;
        let y = w1.ln();
        let (z, mean, sd) = if n <= 11 {
            let gamma = poly(&G, an);
            if y >= gamma {
                return Ok(TestResult::new(Method::ShapiroWilk, w, 1e-99, vec![n]));
            }
            (-(gamma - y).ln(), poly(&C3, an), poly(&C4, an).exp())
        } else {
            let ln_n = an.ln();
            (y, poly(&C5, ln_n), poly(&C6, ln_n).exp())
        };
        normal_sf((z - mean) / sd)
    };
    Ok(TestResult::new(Method::ShapiroWilk, w, p, vec![n]))
}
