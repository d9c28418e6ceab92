use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Integer pixel position in scene coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PixelPos {
    pub x: u32,
    pub y: u32,
}

impl PixelPos {
    pub const fn new(x: u32, y: u32) -> Self {
        PixelPos { x, y }
    }
}

/// One frame's gaze reading. `pos` is `None` when no marker was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GazeSample {
    pub frame_id: u64,
    pub pos: Option<PixelPos>,
    pub roi: Option<String>,
}

impl GazeSample {
    pub fn valid(frame_id: u64, x: u32, y: u32) -> Self {
        GazeSample {
            frame_id,
            pos: Some(PixelPos::new(x, y)),
            roi: None,
        }
    }

    pub fn invalid(frame_id: u64) -> Self {
        GazeSample {
            frame_id,
            pos: None,
            roi: None,
        }
    }

    pub fn is_valid(&self) -> bool {
        self.pos.is_some()
    }

    pub fn with_roi(mut self, label: impl Into<String>) -> Self {
        self.roi = Some(label.into());
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Group {
    MiddleSkill,
    HighSkill,
    #[default]
    Unspecified,
}

impl Group {
    pub fn as_str(&self) -> &'static str {
        match self {
            Group::MiddleSkill => "middle_skill",
            Group::HighSkill => "high_skill",
            Group::Unspecified => "unspecified",
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Group {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace(['-', ' '], "_").as_str() {
            "middle_skill" | "middleskill" | "middle" => Ok(Group::MiddleSkill),
            "high_skill" | "highskill" | "high" => Ok(Group::HighSkill),
            "" | "unspecified" => Ok(Group::Unspecified),
            _ => Err(Error::InvalidArgument(format!("unknown group {s:?}"))),
        }
    }
}

/// Who and what a trace was recorded from.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceMeta {
    pub participant_id: String,
    pub group: Group,
    pub trial_id: String,
    /// Nominal sampling rate of the eye tracker, in Hz.
    pub nominal_rate: f64,
}

impl Default for TraceMeta {
    fn default() -> Self {
        TraceMeta {
            participant_id: String::new(),
            group: Group::Unspecified,
            trial_id: String::new(),
            nominal_rate: 90.0,
        }
    }
}

/// Per-frame gaze samples of one session, ordered by frame id.
#[derive(Debug, Clone, PartialEq)]
pub struct GazeTrace {
    samples: Vec<GazeSample>,
    scene_width: u32,
    scene_height: u32,
    pub meta: TraceMeta,
}

impl GazeTrace {
    /// Checks frame ordering and that valid samples lie inside the scene.
    pub fn new(samples: Vec<GazeSample>, scene_width: u32, scene_height: u32, meta: TraceMeta) -> Result<Self> {
        for pair in samples.windows(2) {
            if pair[1].frame_id <= pair[0].frame_id {
                return Err(Error::InvalidArgument(format!(
                    "frame ids not strictly increasing: {} then {}",
                    pair[0].frame_id, pair[1].frame_id
                )));
            }
        }
        for s in &samples {
            if let Some(p) = s.pos {
                if p.x >= scene_width || p.y >= scene_height {
                    return Err(Error::OutOfBounds {
                        x: p.x as i64,
                        y: p.y as i64,
                        width: scene_width,
                        height: scene_height,
                    });
                }
            }
        }
        Ok(GazeTrace {
            samples,
            scene_width,
            scene_height,
            meta,
        })
    }

    pub fn empty(scene_width: u32, scene_height: u32, meta: TraceMeta) -> Self {
        GazeTrace {
            samples: Vec::new(),
            scene_width,
            scene_height,
            meta,
        }
    }

    pub fn samples(&self) -> &[GazeSample] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<GazeSample> {
        self.samples
    }

    pub fn scene_width(&self) -> u32 {
        self.scene_width
    }

    pub fn scene_height(&self) -> u32 {
        self.scene_height
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn n_valid(&self) -> usize {
        self.samples.iter().filter(|s| s.is_valid()).count()
    }

    /// Valid positions in frame order.
    pub fn valid_positions(&self) -> impl Iterator<Item = PixelPos> + '_ {
        self.samples.iter().filter_map(|s| s.pos)
    }

    /// Labels are free-form; only coordinates and ordering are invariant.
    pub(crate) fn samples_mut(&mut self) -> &mut [GazeSample] {
        &mut self.samples
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_unordered_frames() {
        let s = vec![GazeSample::invalid(3), GazeSample::invalid(3)];
        assert!(GazeTrace::new(s, 10, 10, TraceMeta::default()).is_err());
    }

    #[test]
    fn rejects_out_of_scene_samples() {
        let s = vec![GazeSample::valid(0, 10, 0)];
        assert!(matches!(
            GazeTrace::new(s, 10, 10, TraceMeta::default()),
            Err(Error::OutOfBounds { .. })
        ));
    }

    #[test]
    fn group_round_trips_through_text() {
        for g in [Group::MiddleSkill, Group::HighSkill, Group::Unspecified] {
            assert_eq!(g.as_str().parse::<Group>().unwrap(), g);
        }
        assert_eq!("HighSkill".parse::<Group>().unwrap(), Group::HighSkill);
        assert!("pro".parse::<Group>().is_err());
    }
}
