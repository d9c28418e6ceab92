//! Synthetic sessions with known ground truth.
//!
//! [`gen_trace`] draws a gaze trace from a [`SynthSpec`], and the renderers
//! paint it back into full recording frames: structured noise in the game
//! pane and a filled marker disk on black in the gaze pane. Feeding those
//! frames to [`extract_trace`](crate::detect::extract_trace) should recover
//! the trace, which makes the pair an end-to-end oracle for the pipeline.
//!
//! Dropout frames and mixture labels are allocated by counting (floor of
//! share times n, leftovers to the largest remainders), so ground-truth
//! counts are exact rather than merely expected.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::ops::Range;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use image::codecs::png::{CompressionType, FilterType, PngEncoder};
use image::{ImageEncoder, RgbImage};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution as _, Normal};
use rayon::prelude::*;

use crate::config::AnalysisConfig;
use crate::detect::{ChannelRange, MarkerSpec};
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::ingest::{FrameSource, RecordingLayout};
use crate::roi::RoiLayout;
use crate::trace::{GazeSample, GazeTrace, TraceMeta};

/// Identity of the pseudo-random generator behind every synthetic session.
pub const GENERATOR: &str = "rand_chacha 0.9 ChaCha8Rng::seed_from_u64";

const MAX_ATTEMPTS: usize = 100_000;
// Half-width of the square around a mixture point that must stay inside the
// chosen region, so rounding to a pixel cannot change the label.
const LABEL_MARGIN: f64 = 1.0;

/// Where synthetic gaze points come from.
#[derive(Debug, Clone, PartialEq)]
pub enum GazeDistribution {
    /// Independent normal coordinates, resampled until the marker fits.
    Gaussian { mean: Point, sd_x: f64, sd_y: f64 },
    /// A label drawn per frame with the given shares, then a point uniform
    /// inside that ROI.
    RoiMixture(Vec<(String, f64)>),
}

/// Look of the rendered gaze marker.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MarkerStyle {
    pub radius: u32,
    pub color: [u8; 3],
}

impl Default for MarkerStyle {
    fn default() -> Self {
        MarkerStyle {
            radius: 6,
            color: [0, 255, 0],
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SynthSpec {
    pub n_frames: usize,
    pub distribution: GazeDistribution,
    /// Share of frames rendered without a marker.
    pub dropout: f64,
    /// Frame ranges forced to have no marker, on top of `dropout`.
    pub gaps: Vec<Range<u64>>,
    pub seed: u64,
    pub layout: RecordingLayout,
    pub roi_layout: RoiLayout,
    pub marker: MarkerStyle,
}

impl SynthSpec {
    /// Gaussian session over the default recording and ROI layouts.
    pub fn gaussian(n_frames: usize, mean: Point, sd_x: f64, sd_y: f64) -> Self {
        SynthSpec::with_distribution(n_frames, GazeDistribution::Gaussian { mean, sd_x, sd_y })
    }

    pub fn roi_mixture<S: Into<String>>(n_frames: usize, weights: impl IntoIterator<Item = (S, f64)>) -> Self {
        let weights = weights.into_iter().map(|(k, w)| (k.into(), w)).collect();
        SynthSpec::with_distribution(n_frames, GazeDistribution::RoiMixture(weights))
    }

    fn with_distribution(n_frames: usize, distribution: GazeDistribution) -> Self {
        SynthSpec {
            n_frames,
            distribution,
            dropout: 0.0,
            gaps: Vec::new(),
            seed: 0,
            layout: RecordingLayout::default(),
            roi_layout: RoiLayout::valorant_default(),
            marker: MarkerStyle::default(),
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_dropout(mut self, dropout: f64) -> Self {
        self.dropout = dropout;
        self
    }

    pub fn with_gap(mut self, frames: Range<u64>) -> Self {
        self.gaps.push(frames);
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidArgument(m));
        if !(self.dropout >= 0.0 && self.dropout < 1.0) {
            return bad(format!("dropout must lie in [0, 1), got {}", self.dropout));
        }
        let scene = self.layout.scene_dims();
        let roi_scene = (self.roi_layout.scene_width(), self.roi_layout.scene_height());
        if scene != roi_scene {
            return Err(Error::dims("ROI layout vs recording scene", scene, roi_scene));
        }
        let r = self.marker.radius;
        if 2 * r as u64 + 1 > scene.0.min(scene.1) as u64 {
            return bad(format!("marker radius {r} does not fit a {}x{} scene", scene.0, scene.1));
        }
        if !marker_spec_for(self.marker.color).matches(self.marker.color) {
            return bad("marker colour cannot be thresholded".into());
        }
        match &self.distribution {
            GazeDistribution::Gaussian { mean, sd_x, sd_y } => {
                if !(mean.x.is_finite() && mean.y.is_finite()) {
                    return bad(format!("Gaussian mean ({}, {}) is not finite", mean.x, mean.y));
                }
                if !(*sd_x >= 0.0 && *sd_y >= 0.0 && sd_x.is_finite() && sd_y.is_finite()) {
                    return bad(format!("standard deviations must be finite and >= 0, got {sd_x} and {sd_y}"));
                }
            }
            GazeDistribution::RoiMixture(weights) => {
                if weights.is_empty() {
                    return bad("ROI mixture has no labels".into());
                }
                let labels = self.roi_layout.labels();
                for (i, (label, w)) in weights.iter().enumerate() {
                    if !labels.contains(&label.as_str()) {
                        return bad(format!("ROI mixture label {label:?} is not in the ROI layout"));
                    }
                    if weights[..i].iter().any(|(l, _)| l == label) {
                        return bad(format!("ROI mixture label {label:?} listed twice"));
                    }
                    if !(*w >= 0.0 && w.is_finite()) {
                        return bad(format!("weight for {label:?} must be >= 0, got {w}"));
                    }
                }
                let sum: f64 = weights.iter().map(|(_, w)| w).sum();
                if (sum - 1.0).abs() > 1e-9 {
                    return bad(format!("ROI mixture weights sum to {sum}, not 1"));
                }
            }
        }
        Ok(())
    }

    /// Analysis config matching this session: its layouts plus a marker
    /// threshold that accepts the rendered colour.
    pub fn analysis_config(&self) -> AnalysisConfig {
        AnalysisConfig {
            layout: self.layout,
            marker: marker_spec_for(self.marker.color),
            roi: self.roi_layout.clone(),
        }
    }

    fn in_gap(&self, id: u64) -> bool {
        self.gaps.iter().any(|g| g.contains(&id))
    }
}

/// The default green threshold if it accepts `color`, otherwise a band of
/// +-40 around each channel.
fn marker_spec_for(color: [u8; 3]) -> MarkerSpec {
    let default = MarkerSpec::default();
    if default.matches(color) {
        return default;
    }
    let band = |c: u8| ChannelRange::new(c.saturating_sub(40), c.saturating_add(40)).expect("ordered band");
    MarkerSpec::new(band(color[0]), band(color[1]), band(color[2]), default.min_blob_area(), None)
        .expect("band spec is valid")
}

/// Per-frame truth behind a synthetic trace.
#[derive(Debug, Clone, PartialEq)]
pub struct TruthFrame {
    pub frame_id: u64,
    /// Exact sampled point; `None` for dropped frames.
    pub point: Option<Point>,
    /// Intended ROI label of the point.
    pub label: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GroundTruth {
    pub generator: String,
    pub seed: u64,
    pub frames: Vec<TruthFrame>,
}

pub const GROUND_TRUTH_HEADER: [&str; 5] = ["frame_id", "valid", "x", "y", "label"];

impl GroundTruth {
    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        self.frames.iter().filter_map(|f| f.point)
    }

    pub fn n_valid(&self) -> usize {
        self.points().count()
    }

    /// Sample standard deviation of the exact points along each axis.
    pub fn sample_sd(&self) -> Result<(f64, f64)> {
        let (xs, ys): (Vec<f64>, Vec<f64>) = self.points().map(|p| (p.x, p.y)).unzip();
        if xs.len() < 2 {
            return Err(Error::InsufficientData {
                what: "ground-truth SD",
                required: 2,
                found: xs.len(),
            });
        }
        Ok((crate::metrics::sample_sd(&xs), crate::metrics::sample_sd(&ys)))
    }

    pub fn mean(&self) -> Option<Point> {
        let n = self.n_valid();
        if n == 0 {
            return None;
        }
        let (sx, sy) = self.points().fold((0.0, 0.0), |(a, b), p| (a + p.x, b + p.y));
        Some(Point::new(sx / n as f64, sy / n as f64))
    }

    /// Number of valid frames per intended label.
    pub fn label_counts(&self) -> std::collections::BTreeMap<String, usize> {
        let mut counts = std::collections::BTreeMap::new();
        for label in self.frames.iter().filter_map(|f| f.label.as_ref()) {
            *counts.entry(label.clone()).or_default() += 1;
        }
        counts
    }

    /// CSV with a leading `#` comment naming the generator and seed, then
    /// `frame_id,valid,x,y,label` with exact (shortest round-trip) coordinates.
    pub fn write_csv_to<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "# generator={} seed={}", self.generator, self.seed)?;
        writeln!(out, "{}", GROUND_TRUTH_HEADER.join(","))?;
        for f in &self.frames {
            match f.point {
                Some(p) => writeln!(out, "{},1,{},{},{}", f.frame_id, p.x, p.y, f.label.as_deref().unwrap_or(""))?,
                None => writeln!(out, "{},0,,,", f.frame_id)?,
            }
        }
        out.flush()
    }

    pub fn write_csv(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        let file = File::create(path).map_err(|e| Error::io(path, e))?;
        self.write_csv_to(BufWriter::new(file)).map_err(|e| Error::io(path, e))
    }
}

/// Split `n` items by `shares` (summing to 1): floors first, then one extra
/// each to the largest remainders, earlier entries winning ties.
pub fn largest_remainder(n: usize, shares: &[f64]) -> Vec<usize> {
    let exact: Vec<f64> = shares.iter().map(|s| s * n as f64).collect();
    let mut counts: Vec<usize> = exact.iter().map(|e| e.floor() as usize).collect();
    let assigned: usize = counts.iter().sum();
    let mut order: Vec<usize> = (0..shares.len()).collect();
    order.sort_by(|&i, &j| (exact[j] - exact[j].floor()).total_cmp(&(exact[i] - exact[i].floor())).then(i.cmp(&j)));
    for &i in order.iter().cycle().take(n.saturating_sub(assigned)) {
        counts[i] += 1;
    }
    counts
}

/// Draws a trace and its ground truth. Trace samples are the exact points
/// rounded to pixels and carry no ROI labels yet.
pub fn gen_trace(spec: &SynthSpec) -> Result<(GazeTrace, GroundTruth)> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let n = spec.n_frames;

    let open: Vec<usize> = (0..n).filter(|&i| !spec.in_gap(i as u64)).collect();
    let n_drop = largest_remainder(n, &[spec.dropout, 1.0 - spec.dropout])[0].min(open.len());
    let mut valid = vec![false; n];
    for &i in &open {
        valid[i] = true;
    }
    for k in rand::seq::index::sample(&mut rng, open.len(), n_drop) {
        valid[open[k]] = false;
    }
    let n_valid = valid.iter().filter(|&&v| v).count();

    let (w, h) = spec.layout.scene_dims();
    let r = spec.marker.radius as f64;
    // inclusive bounds for the marker centre
    let (lo_x, hi_x, lo_y, hi_y) = (r, w as f64 - 1.0 - r, r, h as f64 - 1.0 - r);
    let fits = |x: f64, y: f64| x >= lo_x && x <= hi_x && y >= lo_y && y <= hi_y;

    let mut points: Vec<(Point, String)> = Vec::with_capacity(n_valid);
    match &spec.distribution {
        GazeDistribution::Gaussian { mean, sd_x, sd_y } => {
            let nx = Normal::new(mean.x, *sd_x).map_err(|e| Error::InvalidArgument(e.to_string()))?;
            let ny = Normal::new(mean.y, *sd_y).map_err(|e| Error::InvalidArgument(e.to_string()))?;
            for _ in 0..n_valid {
                let p = (0..MAX_ATTEMPTS)
                    .map(|_| (nx.sample(&mut rng), ny.sample(&mut rng)))
                    .find(|&(x, y)| fits(x, y))
                    .ok_or(Error::NoConvergence("Gaussian sample inside the scene"))?;
                let label = spec.roi_layout.classify(p.0, p.1)?.to_owned();
                points.push((Point::new(p.0, p.1), label));
            }
        }
        GazeDistribution::RoiMixture(weights) => {
            let shares: Vec<f64> = weights.iter().map(|(_, w)| *w).collect();
            let counts = largest_remainder(n_valid, &shares);
            let mut labels: Vec<usize> = counts.iter().enumerate().flat_map(|(i, &c)| std::iter::repeat(i).take(c)).collect();
            labels.shuffle(&mut rng);
            for i in labels {
                let label = &weights[i].0;
                let (x0, x1, y0, y1) = match spec.roi_layout.region(label) {
                    Some(reg) => (
                        (reg.rect.x as f64).max(lo_x),
                        (reg.rect.right() as f64 - 1.0).min(hi_x),
                        (reg.rect.y as f64).max(lo_y),
                        (reg.rect.bottom() as f64 - 1.0).min(hi_y),
                    ),
                    None => (lo_x, hi_x, lo_y, hi_y),
                };
                if x0 > x1 || y0 > y1 {
                    return Err(Error::InvalidArgument(format!("ROI {label:?} has no room for the marker")));
                }
                let p = (0..MAX_ATTEMPTS)
                    .map(|_| (rng.random_range(x0..=x1), rng.random_range(y0..=y1)))
                    .find(|&(x, y)| spec.roi_layout.stable_label(x, y, LABEL_MARGIN) == Some(label.as_str()))
                    .ok_or_else(|| Error::InvalidArgument(format!("could not place a point inside ROI {label:?}")))?;
                points.push((Point::new(p.0, p.1), label.clone()));
            }
        }
    }

    let mut points = points.into_iter();
    let mut samples = Vec::with_capacity(n);
    let mut frames = Vec::with_capacity(n);
    for (i, &v) in valid.iter().enumerate() {
        let id = i as u64;
        if v {
            let (p, label) = points.next().expect("one point per valid frame");
            samples.push(GazeSample::valid(id, p.x.round() as u32, p.y.round() as u32));
            frames.push(TruthFrame {
                frame_id: id,
                point: Some(p),
                label: Some(label),
            });
        } else {
            samples.push(GazeSample::invalid(id));
            frames.push(TruthFrame {
                frame_id: id,
                point: None,
                label: None,
            });
        }
    }
    let meta = TraceMeta {
        participant_id: "synthetic".into(),
        trial_id: format!("seed{}", spec.seed),
        ..TraceMeta::default()
    };
    let trace = GazeTrace::new(samples, w, h, meta)?;
    let truth = GroundTruth {
        generator: GENERATOR.into(),
        seed: spec.seed,
        frames,
    };
    Ok((trace, truth))
}

// Muted palette for the game pane. Includes white; none of these has a
// channel pattern a green marker threshold accepts.
const NOISE_PALETTE: [[u8; 3]; 8] = [
    [255, 255, 255],
    [30, 30, 35],
    [120, 110, 100],
    [200, 60, 50],
    [60, 90, 180],
    [230, 220, 90],
    [90, 150, 160],
    [180, 180, 185],
];

/// Renders traces into recording frames.
#[derive(Clone)]
pub struct Renderer {
    layout: RecordingLayout,
    marker: MarkerStyle,
    noise: Arc<RgbImage>,
}

impl Renderer {
    pub fn new(spec: &SynthSpec) -> Self {
        let pane = spec.layout.game_pane();
        let mut rng = ChaCha8Rng::seed_from_u64(spec.seed ^ 0x006e_6f69_7365);
        // 8x8 blocks of palette colours with per-pixel jitter
        let (bw, bh) = (pane.w.div_ceil(8), pane.h.div_ceil(8));
        let blocks: Vec<[u8; 3]> = (0..bw * bh).map(|_| NOISE_PALETTE[rng.random_range(0..NOISE_PALETTE.len())]).collect();
        let mut noise = RgbImage::new(pane.w, pane.h);
        for (x, y, px) in noise.enumerate_pixels_mut() {
            let base = blocks[((y / 8) * bw + x / 8) as usize];
            let jitter: u8 = rng.random_range(0..8);
            px.0 = base.map(|c| c.saturating_sub(jitter));
        }
        Renderer {
            layout: spec.layout,
            marker: spec.marker,
            noise: Arc::new(noise),
        }
    }

    /// Fails if any valid sample would put part of the disk outside the
    /// gaze pane.
    pub fn check(&self, trace: &GazeTrace) -> Result<()> {
        let (w, h) = self.layout.scene_dims();
        if (trace.scene_width(), trace.scene_height()) != (w, h) {
            return Err(Error::dims("trace scene vs recording layout", (w, h), (trace.scene_width(), trace.scene_height())));
        }
        let r = self.marker.radius;
        for s in trace.samples() {
            if let Some(p) = s.pos {
                if p.x < r || p.y < r || p.x + r >= w || p.y + r >= h {
                    return Err(Error::InvalidArgument(format!(
                        "frame {}: marker of radius {r} at ({}, {}) leaves the {w}x{h} gaze pane",
                        s.frame_id, p.x, p.y
                    )));
                }
            }
        }
        Ok(())
    }

    /// One full canvas for `sample`.
    pub fn render(&self, sample: &GazeSample) -> RgbImage {
        let mut img = RgbImage::new(self.layout.canvas_width(), self.layout.canvas_height());
        let game = self.layout.game_pane();
        let stride = img.width() as usize * 3;
        let row_len = game.w as usize * 3;
        let shift = (sample.frame_id % game.h as u64) as u32;
        let buf: &mut [u8] = &mut img;
        for y in 0..game.h {
            let src_y = ((y + shift) % game.h) as usize;
            let src = &self.noise.as_raw()[src_y * row_len..(src_y + 1) * row_len];
            let start = (game.y + y) as usize * stride + game.x as usize * 3;
            buf[start..start + row_len].copy_from_slice(src);
        }
        if let Some(p) = sample.pos {
            let gaze = self.layout.gaze_pane();
            let r = self.marker.radius as i64;
            let (cx, cy) = ((gaze.x + p.x) as i64, (gaze.y + p.y) as i64);
            for dy in -r..=r {
                for dx in -r..=r {
                    if dx * dx + dy * dy <= r * r {
                        img.put_pixel((cx + dx) as u32, (cy + dy) as u32, image::Rgb(self.marker.color));
                    }
                }
            }
        }
        img
    }

    /// Lazily rendered frames for the whole trace, ready for extraction.
    pub fn source(&self, trace: &GazeTrace) -> Result<FrameSource> {
        self.check(trace)?;
        let me = self.clone();
        let samples = trace.samples().to_vec();
        let (w, h) = (self.layout.canvas_width(), self.layout.canvas_height());
        Ok(FrameSource::from_images(w, h, samples.into_iter().map(move |s| me.render(&s))))
    }
}

/// File name of frame `index` out of `n`: `f` plus the index zero-padded to
/// at least four digits.
pub fn frame_file_name(index: usize, n: usize) -> String {
    let digits = n.saturating_sub(1).to_string().len().max(4);
    format!("f{index:0digits$}.png")
}

/// Writes one PNG per sample of `trace` into `out_dir`, which is created if
/// needed. Returns the written paths in frame order.
pub fn render_frames(trace: &GazeTrace, spec: &SynthSpec, out_dir: impl AsRef<Path>) -> Result<Vec<PathBuf>> {
    let out_dir = out_dir.as_ref();
    let renderer = Renderer::new(spec);
    renderer.check(trace)?;
    std::fs::create_dir_all(out_dir).map_err(|e| Error::io(out_dir, e))?;
    let n = trace.len();
    trace
        .samples()
        .par_iter()
        .enumerate()
        .map(|(i, s)| {
            let path = out_dir.join(frame_file_name(i, n));
            let img = renderer.render(s);
            let file = File::create(&path).map_err(|e| Error::io(&path, e))?;
            let mut out = BufWriter::new(file);
            PngEncoder::new_with_quality(&mut out, CompressionType::Fast, FilterType::Sub)
                .write_image(img.as_raw(), img.width(), img.height(), image::ExtendedColorType::Rgb8)
                .map_err(|e| Error::Image {
                    path: path.clone(),
                    source: e,
                })?;
            out.flush().map_err(|e| Error::io(&path, e))?;
            Ok(path)
        })
        .collect()
}

/// Renders `trace` into an in-memory frame source.
pub fn rendered_source(trace: &GazeTrace, spec: &SynthSpec) -> Result<FrameSource> {
    Renderer::new(spec).source(trace)
}
