//! Distribution functions used by the tests.
//!
//! Central normal, Student t and F come from `statrs`. The noncentral t CDF
//! is computed here with Lenth's series (Applied Statistics algorithm AS 243):
//! a Poisson-weighted mixture of incomplete beta functions, summed until the
//! remaining Poisson mass bounds the truncation error below 1e-12.

use statrs::distribution::{Continuous, ContinuousCDF, FisherSnedecor, Normal, StudentsT};
use statrs::function::beta::beta_reg;
use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};

fn std_normal() -> Normal {
    Normal::standard()
}

pub fn normal_cdf(z: f64) -> f64 {
    std_normal().cdf(z)
}

pub fn normal_sf(z: f64) -> f64 {
    std_normal().sf(z)
}

pub fn normal_quantile(p: f64) -> f64 {
    std_normal().inverse_cdf(p)
}

fn student(df: f64) -> Result<StudentsT> {
    StudentsT::new(0.0, 1.0, df).map_err(|e| Error::InvalidArgument(format!("t distribution with df {df}: {e}")))
}

pub fn t_cdf(t: f64, df: f64) -> Result<f64> {
    Ok(student(df)?.cdf(t))
}

pub fn t_sf(t: f64, df: f64) -> Result<f64> {
    Ok(student(df)?.sf(t))
}

/// Two-tailed p-value of a t statistic.
pub fn t_two_tailed(t: f64, df: f64) -> Result<f64> {
    if t.is_infinite() {
        return Ok(0.0);
    }
    Ok((2.0 * t_sf(t.abs(), df)?).min(1.0))
}

/// Quantile of the central t distribution, polished with Newton steps.
pub fn t_quantile(p: f64, df: f64) -> Result<f64> {
    if !(0.0 < p && p < 1.0) {
        return Err(Error::InvalidArgument(format!("quantile probability {p} outside (0, 1)")));
    }
    let dist = student(df)?;
    let mut x = dist.inverse_cdf(p);
    for _ in 0..8 {
        let dens = dist.pdf(x);
        if dens.is_nan() || dens <= 0.0 || !x.is_finite() {
            break;
        }
        // F(x) - p, evaluated in whichever tail is small
        let resid = if p > 0.5 { (1.0 - p) - dist.sf(x) } else { dist.cdf(x) - p };
        let step = resid / dens;
        x -= step;
        if step.abs() <= 1e-15 * x.abs().max(1.0) {
            break;
        }
    }
    Ok(x)
}

/// Upper tail of the F distribution.
pub fn f_sf(f: f64, df1: f64, df2: f64) -> Result<f64> {
    if f <= 0.0 {
        return Ok(1.0);
    }
    if f.is_infinite() {
        return Ok(0.0);
    }
    let dist = FisherSnedecor::new(df1, df2)
        .map_err(|e| Error::InvalidArgument(format!("F distribution with df ({df1}, {df2}): {e}")))?;
    Ok(dist.sf(f))
}

const SQRT_2_OVER_PI: f64 = 0.797_884_560_802_865_4;
const LN_SQRT_PI: f64 = 0.572_364_942_924_700_1;

/// P(T <= t) for T noncentral t with `df` degrees of freedom and
/// noncentrality `delta`.
pub fn noncentral_t_cdf(t: f64, df: f64, delta: f64) -> Result<f64> {
    if df.is_nan() || df <= 0.0 || !df.is_finite() {
        return Err(Error::InvalidArgument(format!("noncentral t needs df > 0, got {df}")));
    }
    if t.is_nan() || delta.is_nan() {
        return Err(Error::InvalidArgument("noncentral t: NaN argument".into()));
    }
    if t == f64::INFINITY {
        return Ok(1.0);
    }
    if t == f64::NEG_INFINITY {
        return Ok(0.0);
    }
    // F(t; df, delta) = 1 - F(-t; df, -delta), so the series only needs t >= 0.
    let (tt, del, negated) = if t >= 0.0 { (t, delta, false) } else { (-t, -delta, true) };

    if df > 4e5 || del * del > 2.0 * std::f64::consts::LN_2 * 1021.0 {
        // Large df or |delta|: normal approximation, as AS 243 does.
        let s = 1.0 / (4.0 * df);
        let z = (tt * (1.0 - s) - del) / (1.0 + tt * tt * 2.0 * s).sqrt();
        let lower = normal_cdf(z);
        return Ok(if negated { normal_sf(z) } else { lower });
    }

    let x = tt * tt / (tt * tt + df);
    let mut tnc = 0.0;
    if x > 0.0 {
        const ERRMAX: f64 = 1e-12;
        const ITRMAX: usize = 1000;

        let lambda = del * del;
        let mut p = 0.5 * (-0.5 * lambda).exp();
        let mut q = SQRT_2_OVER_PI * p * del;
        let mut s = 0.5 - p;
        if s < 1e-7 {
            s = -0.5 * (-0.5 * lambda).exp_m1();
        }
        let mut a = 0.5;
        let b = 0.5 * df;
        let rxb = (1.0 - x).powf(b);
        let albeta = LN_SQRT_PI + ln_gamma(b) - ln_gamma(0.5 + b);
        let mut xodd = beta_reg(a, b, x);
        let mut godd = 2.0 * rxb * (a * x.ln() - albeta).exp();
        let bx = b * x;
        let mut xeven = if bx < f64::EPSILON { bx } else { 1.0 - rxb };
        let mut geven = bx * rxb;
        tnc = p * xodd + q * xeven;

        let mut converged = false;
        for it in 1..=ITRMAX {
            a += 1.0;
            xodd -= godd;
            xeven -= geven;
            godd *= x * (a + b - 1.0) / a;
            geven *= x * (a + b - 0.5) / (a + 0.5);
            p *= lambda / (2.0 * it as f64);
            q *= lambda / (2.0 * it as f64 + 1.0);
            tnc += p * xodd + q * xeven;
            s -= p;
            if s < -1e-10 || (s <= 0.0 && it > 1) {
                converged = true;
                break;
            }
            let errbd = 2.0 * s * (xodd - godd);
            if errbd.abs() < ERRMAX && it > 1 {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NoConvergence("noncentral t series"));
        }
    }
    tnc += normal_cdf(-del);
    let lower = tnc.clamp(0.0, 1.0);
    Ok(if negated { 1.0 - lower } else { lower })
}

/// P(T > t) for the noncentral t.
pub fn noncentral_t_sf(t: f64, df: f64, delta: f64) -> Result<f64> {
    // sf(t; delta) = cdf(-t; -delta) keeps the series in its accurate branch.
    noncentral_t_cdf(-t, df, -delta)
}
