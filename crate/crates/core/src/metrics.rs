//! Per-session gaze metrics and the KDA match score.
//!
//! Only valid samples enter any metric. Dispersion is the per-axis sample
//! standard deviation; the centre distance is measured from the real-valued
//! scene midpoint to the mean gaze point.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::roi::RoiLayout;
use crate::trace::GazeTrace;

#[derive(Debug, Clone, PartialEq)]
pub struct SessionMetrics {
    pub sd_x: f64,
    pub sd_y: f64,
    pub mean_x: f64,
    pub mean_y: f64,
    pub dist_center: f64,
    /// Fraction of valid samples per ROI label.
    pub roi_pct: BTreeMap<String, f64>,
    pub valid_fraction: f64,
    pub n_valid: usize,
}

/// Kills, deaths and assists for one trial.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatchStats {
    pub kills: u32,
    pub deaths: u32,
    pub assists: u32,
}

impl MatchStats {
    pub fn new(kills: u32, deaths: u32, assists: u32) -> Self {
        MatchStats { kills, deaths, assists }
    }

    pub fn kda(&self) -> f64 {
        kda(self.kills, self.deaths, self.assists)
    }
}

/// (kills + assists) / deaths, with a death count of zero treated as one.
pub fn kda(kills: u32, deaths: u32, assists: u32) -> f64 {
    (kills as f64 + assists as f64) / deaths.max(1) as f64
}

fn valid_xy(trace: &GazeTrace) -> (Vec<f64>, Vec<f64>) {
    trace.valid_positions().map(|p| (p.x as f64, p.y as f64)).unzip()
}

fn require_valid(trace: &GazeTrace, required: usize, what: &'static str) -> Result<usize> {
    let n = trace.n_valid();
    if n < required {
        return Err(Error::InsufficientData {
            what,
            required,
            found: n,
        });
    }
    Ok(n)
}

pub(crate) fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Sample standard deviation (n - 1 denominator), two-pass.
pub(crate) fn sample_sd(xs: &[f64]) -> f64 {
    let m = mean(xs);
    let ss: f64 = xs.iter().map(|x| (x - m) * (x - m)).sum();
    (ss / (xs.len() - 1) as f64).sqrt()
}

pub fn gaze_sd(trace: &GazeTrace) -> Result<(f64, f64)> {
    require_valid(trace, 2, "gaze SD")?;
    let (xs, ys) = valid_xy(trace);
    Ok((sample_sd(&xs), sample_sd(&ys)))
}

pub fn mean_gaze(trace: &GazeTrace) -> Result<Point> {
    require_valid(trace, 1, "mean gaze")?;
    let (xs, ys) = valid_xy(trace);
    Ok(Point::new(mean(&xs), mean(&ys)))
}

pub fn dist_from_center(trace: &GazeTrace) -> Result<f64> {
    let m = mean_gaze(trace)?;
    let center = Point::new(trace.scene_width() as f64 / 2.0, trace.scene_height() as f64 / 2.0);
    Ok(m.distance(&center))
}

/// Share of valid samples carrying each label. Every label of `layout`
/// appears in the result; labels outside the layout (e.g. read back from an
/// edited file) are counted too.
pub fn roi_percentages(trace: &GazeTrace, layout: &RoiLayout) -> Result<BTreeMap<String, f64>> {
    let n = require_valid(trace, 1, "ROI percentages")?;
    let mut counts: BTreeMap<String, usize> = layout.labels().into_iter().map(|l| (l.to_owned(), 0)).collect();
    for s in trace.samples().iter().filter(|s| s.is_valid()) {
        let label = s.roi.as_ref().ok_or(Error::Unannotated(s.frame_id))?;
        *counts.entry(label.clone()).or_default() += 1;
    }
    Ok(counts.into_iter().map(|(k, c)| (k, c as f64 / n as f64)).collect())
}

pub fn session_metrics(trace: &GazeTrace, layout: &RoiLayout) -> Result<SessionMetrics> {
    let n_valid = require_valid(trace, 2, "session metrics")?;
    let (sd_x, sd_y) = gaze_sd(trace)?;
    let m = mean_gaze(trace)?;
    Ok(SessionMetrics {
        sd_x,
        sd_y,
        mean_x: m.x,
        mean_y: m.y,
        dist_center: dist_from_center(trace)?,
        roi_pct: roi_percentages(trace, layout)?,
        valid_fraction: n_valid as f64 / trace.len() as f64,
        n_valid,
    })
}
