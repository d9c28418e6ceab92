//! Regions of interest over the game scene.
//!
//! A layout is a list of named rectangles with unique priorities plus a
//! fallback label. Every in-bounds point gets exactly one label: the name of
//! the highest-priority rectangle containing it, or the fallback.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::config::AnalysisConfig;
use crate::error::{Error, Result};
use crate::geometry::Rect;
use crate::trace::GazeTrace;

pub const DEFAULT_FALLBACK: &str = "other";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Region {
    pub name: String,
    pub rect: Rect,
    pub priority: i64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RoiLayout {
    scene_width: u32,
    scene_height: u32,
    regions: Vec<Region>,
    /// Indices into `regions`, highest priority first.
    by_priority: Vec<usize>,
    fallback: String,
}

/// ROI labels are written unquoted into CSV files.
pub fn is_valid_label(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_lowercase() || b.is_ascii_digit() || b == b'_')
}

impl RoiLayout {
    pub fn new(scene_width: u32, scene_height: u32, regions: Vec<Region>, fallback: impl Into<String>) -> Result<Self> {
        let fallback = fallback.into();
        if scene_width == 0 || scene_height == 0 {
            return Err(Error::Config("scene has zero size".into()));
        }
        if !is_valid_label(&fallback) {
            return Err(Error::Config(format!("fallback label {fallback:?} must match [a-z0-9_]+")));
        }
        let mut names = HashSet::new();
        let mut priorities = HashSet::new();
        for r in &regions {
            if !is_valid_label(&r.name) {
                return Err(Error::Config(format!("region {:?}: name must match [a-z0-9_]+", r.name)));
            }
            if r.name == fallback {
                return Err(Error::Config(format!("region {:?}: name collides with the fallback label", r.name)));
            }
            if !names.insert(r.name.as_str()) {
                return Err(Error::Config(format!("region {:?}: duplicate name", r.name)));
            }
            if !priorities.insert(r.priority) {
                return Err(Error::Config(format!("region {:?}: duplicate priority {}", r.name, r.priority)));
            }
            if r.rect.is_empty() {
                return Err(Error::Config(format!("region {:?}: empty rectangle", r.name)));
            }
            if !r.rect.fits_within(scene_width, scene_height) {
                return Err(Error::Config(format!(
                    "region {:?}: rect {:?} extends past the {scene_width}x{scene_height} scene",
                    r.name, r.rect
                )));
            }
        }
        let mut by_priority: Vec<usize> = (0..regions.len()).collect();
        by_priority.sort_by_key(|&i| std::cmp::Reverse(regions[i].priority));
        Ok(RoiLayout {
            scene_width,
            scene_height,
            regions,
            by_priority,
            fallback,
        })
    }

    /// The bundled VALORANT HUD layout on a 1920x1080 scene.
    pub fn valorant_default() -> Self {
        AnalysisConfig::default().roi
    }

    pub fn scene_width(&self) -> u32 {
        self.scene_width
    }

    pub fn scene_height(&self) -> u32 {
        self.scene_height
    }

    pub fn regions(&self) -> &[Region] {
        &self.regions
    }

    pub fn fallback(&self) -> &str {
        &self.fallback
    }

    pub fn region(&self, name: &str) -> Option<&Region> {
        self.regions.iter().find(|r| r.name == name)
    }

    /// Region names in declaration order, then the fallback.
    pub fn labels(&self) -> Vec<&str> {
        self.regions
            .iter()
            .map(|r| r.name.as_str())
            .chain(std::iter::once(self.fallback.as_str()))
            .collect()
    }

    pub fn in_bounds(&self, x: f64, y: f64) -> bool {
        x >= 0.0 && y >= 0.0 && x < self.scene_width as f64 && y < self.scene_height as f64
    }

    /// Label for a scene point.
    pub fn classify(&self, x: f64, y: f64) -> Result<&str> {
        if !self.in_bounds(x, y) {
            return Err(Error::OutOfBounds {
                x: x.floor() as i64,
                y: y.floor() as i64,
                width: self.scene_width,
                height: self.scene_height,
            });
        }
        Ok(self.label_at(x, y))
    }

    fn label_at(&self, x: f64, y: f64) -> &str {
        self.by_priority
            .iter()
            .map(|&i| &self.regions[i])
            .find(|r| r.rect.contains(x, y))
            .map_or(self.fallback.as_str(), |r| r.name.as_str())
    }

    /// Label shared by every point of the square of half-width `margin`
    /// around (x, y), or `None` if the square straddles a region boundary.
    pub fn stable_label(&self, x: f64, y: f64, margin: f64) -> Option<&str> {
        let (x0, x1, y0, y1) = (x - margin, x + margin, y - margin, y + margin);
        if x0 < 0.0 || y0 < 0.0 || x1 >= self.scene_width as f64 || y1 >= self.scene_height as f64 {
            return None;
        }
        for r in &self.regions {
            let (rx0, ry0) = (r.rect.x as f64, r.rect.y as f64);
            let (rx1, ry1) = (r.rect.right() as f64, r.rect.bottom() as f64);
            let inside = x0 >= rx0 && x1 < rx1 && y0 >= ry0 && y1 < ry1;
            let outside = x1 < rx0 || x0 >= rx1 || y1 < ry0 || y0 >= ry1;
            if !inside && !outside {
                return None;
            }
        }
        Some(self.label_at(x, y))
    }
}

/// Parses an analysis config document and returns its ROI layout.
pub fn load_roi_layout(config: &str) -> Result<RoiLayout> {
    Ok(AnalysisConfig::from_toml_str(config)?.roi)
}

/// Labels every valid sample; invalid samples are left unlabeled.
pub fn annotate_trace(mut trace: GazeTrace, layout: &RoiLayout) -> Result<GazeTrace> {
    let scene = (layout.scene_width, layout.scene_height);
    let found = (trace.scene_width(), trace.scene_height());
    if scene != found {
        return Err(Error::dims("trace scene vs ROI layout", scene, found));
    }
    for s in trace.samples_mut() {
        s.roi = s.pos.map(|p| layout.label_at(p.x as f64, p.y as f64).to_owned());
    }
    Ok(trace)
}
