//! The analysis config file: one TOML document holding the scene size, the
//! recording layout, marker thresholds and the ROI list.
//!
//! Every section except `[scene]` and `[roi]` may be omitted, in which case
//! the defaults for a 1920x2160 stacked recording apply. The bundled default
//! is available as [`DEFAULT_CONFIG_TOML`].

use serde::{Deserialize, Serialize};

use crate::detect::MarkerSpec;
use crate::error::{Error, Result};
use crate::ingest::RecordingLayout;
use crate::roi::{Region, RoiLayout, DEFAULT_FALLBACK};

pub const DEFAULT_CONFIG_TOML: &str = include_str!("../config/valorant.toml");

#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisConfig {
    pub layout: RecordingLayout,
    pub marker: MarkerSpec,
    pub roi: RoiLayout,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    scene: RawScene,
    #[serde(default)]
    layout: Option<RecordingLayout>,
    #[serde(default)]
    marker: Option<MarkerSpec>,
    roi: RawRoi,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScene {
    width: u32,
    height: u32,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRoi {
    #[serde(default = "default_fallback")]
    fallback: String,
    #[serde(default)]
    regions: Vec<Region>,
}

fn default_fallback() -> String {
    DEFAULT_FALLBACK.to_owned()
}

impl AnalysisConfig {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let raw: RawConfig = toml::from_str(text).map_err(|e| Error::Config(e.message().trim().to_owned() + &span_hint(text, e.span())))?;
        let layout = raw.layout.unwrap_or_default();
        let scene = (raw.scene.width, raw.scene.height);
        if layout.scene_dims() != scene {
            return Err(Error::Config(format!(
                "[scene] is {}x{} but the layout's panes are {}x{}",
                scene.0,
                scene.1,
                layout.scene_dims().0,
                layout.scene_dims().1
            )));
        }
        let roi = RoiLayout::new(scene.0, scene.1, raw.roi.regions, raw.roi.fallback)?;
        Ok(AnalysisConfig {
            layout,
            marker: raw.marker.unwrap_or_default(),
            roi,
        })
    }

    pub fn from_file(path: impl AsRef<std::path::Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_toml_str(&text).map_err(|e| match e {
            Error::Config(msg) => Error::Config(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    /// Serializes back to a config document that [`from_toml_str`] accepts.
    ///
    /// [`from_toml_str`]: AnalysisConfig::from_toml_str
    pub fn to_toml_string(&self) -> String {
        let (width, height) = (self.roi.scene_width(), self.roi.scene_height());
        let raw = RawConfig {
            scene: RawScene { width, height },
            layout: Some(self.layout),
            marker: Some(self.marker),
            roi: RawRoi {
                fallback: self.roi.fallback().to_owned(),
                regions: self.roi.regions().to_vec(),
            },
        };
        toml::to_string(&raw).expect("config serializes")
    }
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig::from_toml_str(DEFAULT_CONFIG_TOML).expect("bundled config is valid")
    }
}

fn span_hint(text: &str, span: Option<std::ops::Range<usize>>) -> String {
    match span {
        Some(s) => format!(" (line {})", text[..s.start.min(text.len())].lines().count().max(1)),
        None => String::new(),
    }
}
