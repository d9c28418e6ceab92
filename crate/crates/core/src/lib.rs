//! Gaze analytics for screen-recorded gameplay.
//!
//! The pipeline reads recordings whose frames stack the game view next to an
//! eye-tracker overlay pane, finds the coloured gaze marker in each frame,
//! labels every gaze point with a screen region (ROI), and reduces each
//! session to dispersion, centre-distance and dwell metrics. The
//! [`stats`] module holds the group comparison, correlation and power
//! routines used to analyse those metrics, and [`synth`] renders synthetic
//! sessions with known ground truth for end-to-end checks.
//!
//! ```
//! use gazekit::{annotate_trace, extract_trace, session_metrics, synth, TraceMeta};
//! use gazekit::geometry::Point;
//!
//! let spec = synth::SynthSpec::gaussian(50, Point::new(960.0, 540.0), 80.0, 40.0).with_seed(1);
//! let (truth_trace, _) = synth::gen_trace(&spec)?;
//! let frames = synth::rendered_source(&truth_trace, &spec)?;
//! let config = spec.analysis_config();
//!
//! let trace = extract_trace(frames, &config.layout, &config.marker, TraceMeta::default())?;
//! let trace = annotate_trace(trace, &config.roi)?;
//! let m = session_metrics(&trace, &config.roi)?;
//! assert_eq!(m.n_valid, 50);
//! # Ok::<(), gazekit::Error>(())
//! ```

pub mod config;
pub mod detect;
mod error;
pub mod geometry;
pub mod ingest;
pub mod io_csv;
pub mod metrics;
pub mod roi;
pub mod stats;
pub mod synth;
pub mod trace;

pub use config::{AnalysisConfig, DEFAULT_CONFIG_TOML};
pub use detect::{detect_marker, extract_trace, MarkerSpec};
pub use error::{Error, Result};
pub use ingest::{open_image_dir, open_raw_stream, split_panes, Frame, FrameSource, RecordingLayout};
pub use metrics::{kda, roi_percentages, session_metrics, MatchStats, SessionMetrics};
pub use roi::{annotate_trace, load_roi_layout, Region, RoiLayout};
pub use trace::{GazeSample, GazeTrace, Group, PixelPos, TraceMeta};
