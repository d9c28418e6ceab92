//! Gaze-marker detection.
//!
//! The overlay software draws a small green tracking point where the player
//! is looking. Detection thresholds every pixel of the gaze pane against a
//! per-channel colour box, groups the hits into 4-connected blobs, and
//! reports the rounded centroid of the largest blob whose area is in range.

use image::RgbImage;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Rect;
use crate::ingest::{FrameSource, RecordingLayout};
use crate::trace::{GazeSample, GazeTrace, PixelPos, TraceMeta};

/// Inclusive range of accepted values for one colour channel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "[u8; 2]", into = "[u8; 2]")]
pub struct ChannelRange {
    min: u8,
    max: u8,
}

impl ChannelRange {
    pub fn new(min: u8, max: u8) -> Result<Self> {
        if min > max {
            return Err(Error::InvalidArgument(format!("channel range min {min} > max {max}")));
        }
        Ok(ChannelRange { min, max })
    }

    pub fn min(&self) -> u8 {
        self.min
    }

    pub fn max(&self) -> u8 {
        self.max
    }

    #[inline]
    fn accepts(&self, v: u8) -> bool {
        v >= self.min && v <= self.max
    }
}

impl TryFrom<[u8; 2]> for ChannelRange {
    type Error = Error;

    fn try_from([min, max]: [u8; 2]) -> Result<Self> {
        ChannelRange::new(min, max)
    }
}

impl From<ChannelRange> for [u8; 2] {
    fn from(r: ChannelRange) -> Self {
        [r.min, r.max]
    }
}

/// What counts as a marker pixel and how large a marker blob may be.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawMarkerSpec", into = "RawMarkerSpec")]
pub struct MarkerSpec {
    red: ChannelRange,
    green: ChannelRange,
    blue: ChannelRange,
    min_blob_area: u32,
    max_blob_area: Option<u32>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMarkerSpec {
    red: ChannelRange,
    green: ChannelRange,
    blue: ChannelRange,
    min_blob_area: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    max_blob_area: Option<u32>,
}

impl TryFrom<RawMarkerSpec> for MarkerSpec {
    type Error = Error;

    fn try_from(r: RawMarkerSpec) -> Result<Self> {
        MarkerSpec::new(r.red, r.green, r.blue, r.min_blob_area, r.max_blob_area)
    }
}

impl From<MarkerSpec> for RawMarkerSpec {
    fn from(m: MarkerSpec) -> Self {
        RawMarkerSpec {
            red: m.red,
            green: m.green,
            blue: m.blue,
            min_blob_area: m.min_blob_area,
            max_blob_area: m.max_blob_area,
        }
    }
}

impl Default for MarkerSpec {
    /// Saturated green: G >= 200, R <= 100, B <= 100, blobs of 4 px or more.
    fn default() -> Self {
        MarkerSpec {
            red: ChannelRange { min: 0, max: 100 },
            green: ChannelRange { min: 200, max: 255 },
            blue: ChannelRange { min: 0, max: 100 },
            min_blob_area: 4,
            max_blob_area: None,
        }
    }
}

impl MarkerSpec {
    pub fn new(
        red: ChannelRange,
        green: ChannelRange,
        blue: ChannelRange,
        min_blob_area: u32,
        max_blob_area: Option<u32>,
    ) -> Result<Self> {
        if min_blob_area < 1 {
            return Err(Error::InvalidArgument("min_blob_area must be at least 1".into()));
        }
        if let Some(max) = max_blob_area {
            if max < min_blob_area {
                return Err(Error::InvalidArgument(format!(
                    "max_blob_area {max} below min_blob_area {min_blob_area}"
                )));
            }
        }
        Ok(MarkerSpec {
            red,
            green,
            blue,
            min_blob_area,
            max_blob_area,
        })
    }

    pub fn red(&self) -> ChannelRange {
        self.red
    }

    pub fn green(&self) -> ChannelRange {
        self.green
    }

    pub fn blue(&self) -> ChannelRange {
        self.blue
    }

    pub fn min_blob_area(&self) -> u32 {
        self.min_blob_area
    }

    pub fn max_blob_area(&self) -> Option<u32> {
        self.max_blob_area
    }

    #[inline]
    pub fn matches(&self, px: [u8; 3]) -> bool {
        self.green.accepts(px[1]) && self.red.accepts(px[0]) && self.blue.accepts(px[2])
    }

    fn area_ok(&self, area: u64) -> bool {
        area >= self.min_blob_area as u64 && self.max_blob_area.map_or(true, |m| area <= m as u64)
    }

    /// Largest channel lower bound; a row whose bytes all fall below it
    /// cannot hold a marker pixel.
    fn row_floor(&self) -> u8 {
        self.red.min.max(self.green.min).max(self.blue.min)
    }
}

/// Borrowed rectangular window into a packed RGB8 buffer.
#[derive(Debug, Clone, Copy)]
pub struct RgbView<'a> {
    data: &'a [u8],
    stride: usize,
    x0: u32,
    y0: u32,
    width: u32,
    height: u32,
}

impl<'a> RgbView<'a> {
    pub fn new(image: &'a RgbImage) -> Self {
        RgbView {
            data: image.as_raw(),
            stride: image.width() as usize * 3,
            x0: 0,
            y0: 0,
            width: image.width(),
            height: image.height(),
        }
    }

    /// Window over `rect`, given in this view's coordinates.
    pub fn sub(&self, rect: Rect) -> Option<Self> {
        if !rect.fits_within(self.width, self.height) {
            return None;
        }
        Some(RgbView {
            data: self.data,
            stride: self.stride,
            x0: self.x0 + rect.x,
            y0: self.y0 + rect.y,
            width: rect.w,
            height: rect.h,
        })
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    fn row(&self, y: u32) -> &'a [u8] {
        let start = (self.y0 + y) as usize * self.stride + self.x0 as usize * 3;
        &self.data[start..start + self.width as usize * 3]
    }
}

/// Finds the marker in a gaze-pane image; see [`detect_marker_in`].
pub fn detect_marker(pane: &RgbImage, spec: &MarkerSpec) -> Option<PixelPos> {
    detect_marker_in(RgbView::new(pane), spec)
}

/// Returns the centroid, rounded half-up, of the largest 4-connected blob of
/// marker-coloured pixels whose area lies within the spec's bounds.
///
/// Blobs of equal area are ranked by their first pixel in raster order.
pub fn detect_marker_in(view: RgbView<'_>, spec: &MarkerSpec) -> Option<PixelPos> {
    let hits = marker_pixels(view, spec);
    if hits.is_empty() {
        return None;
    }

    let (mut min_x, mut max_x) = (u32::MAX, 0);
    for &(x, _) in &hits {
        min_x = min_x.min(x);
        max_x = max_x.max(x);
    }
    let min_y = hits[0].1;
    let max_y = hits[hits.len() - 1].1;
    let bw = (max_x - min_x + 1) as usize;
    let bh = (max_y - min_y + 1) as usize;

    const EMPTY: u8 = 0;
    const PENDING: u8 = 1;
    const DONE: u8 = 2;
    let mut cells = vec![EMPTY; bw * bh];
    for &(x, y) in &hits {
        cells[(y - min_y) as usize * bw + (x - min_x) as usize] = PENDING;
    }

    let mut best: Option<(u64, u64, u64)> = None;
    let mut stack = Vec::new();
    for &(x, y) in &hits {
        let start = (y - min_y) as usize * bw + (x - min_x) as usize;
        if cells[start] != PENDING {
            continue;
        }
        cells[start] = DONE;
        stack.push(start);
        let (mut area, mut sum_x, mut sum_y) = (0u64, 0u64, 0u64);
        while let Some(i) = stack.pop() {
            let (cx, cy) = (i % bw, i / bw);
            area += 1;
            sum_x += (cx as u32 + min_x) as u64;
            sum_y += (cy as u32 + min_y) as u64;
            let mut visit = |j: usize| {
                if cells[j] == PENDING {
                    cells[j] = DONE;
                    stack.push(j);
                }
            };
            if cx > 0 {
                visit(i - 1);
            }
            if cx + 1 < bw {
                visit(i + 1);
            }
            if cy > 0 {
                visit(i - bw);
            }
            if cy + 1 < bh {
                visit(i + bw);
            }
        }
        if spec.area_ok(area) && best.map_or(true, |(a, _, _)| area > a) {
            best = Some((area, sum_x, sum_y));
        }
    }

    best.map(|(area, sx, sy)| {
        let round = |sum: u64| ((2 * sum + area) / (2 * area)) as u32;
        PixelPos::new(round(sx), round(sy))
    })
}

/// Marker-coloured pixel coordinates in raster order.
fn marker_pixels(view: RgbView<'_>, spec: &MarkerSpec) -> Vec<(u32, u32)> {
    let floor = spec.row_floor();
    let mut hits = Vec::new();
    for y in 0..view.height {
        let row = view.row(y);
        if floor > 0 && row.iter().fold(0u8, |m, &b| m.max(b)) < floor {
            continue;
        }
        for (x, px) in row.chunks_exact(3).enumerate() {
            if spec.matches([px[0], px[1], px[2]]) {
                hits.push((x as u32, y));
            }
        }
    }
    hits
}

/// Runs detection over every frame of `source` and returns one sample per
/// frame in scene coordinates. Frames without a marker yield invalid samples.
///
/// Frames are detected in parallel batches and reassembled in frame order.
pub fn extract_trace(
    mut source: FrameSource,
    layout: &RecordingLayout,
    spec: &MarkerSpec,
    meta: TraceMeta,
) -> Result<GazeTrace> {
    let canvas = (layout.canvas_width(), layout.canvas_height());
    if (source.width(), source.height()) != canvas {
        return Err(Error::dims("frame source", canvas, (source.width(), source.height())));
    }
    let pane = layout.gaze_pane();
    let (scene_w, scene_h) = layout.scene_dims();
    debug_assert_eq!((pane.w, pane.h), (scene_w, scene_h));

    let batch = 2 * rayon::current_num_threads().max(1);
    let mut samples = Vec::with_capacity(source.len_hint().unwrap_or(0));
    loop {
        let frames = source.by_ref().take(batch).collect::<Result<Vec<_>>>()?;
        if frames.is_empty() {
            break;
        }
        let detected: Vec<_> = frames
            .par_iter()
            .map(|f| {
                let view = RgbView::new(&f.image).sub(pane).expect("pane inside canvas");
                match detect_marker_in(view, spec) {
                    Some(p) => GazeSample::valid(f.index, p.x, p.y),
                    None => GazeSample::invalid(f.index),
                }
            })
            .collect();
        samples.extend(detected);
    }
    GazeTrace::new(samples, scene_w, scene_h, meta)
}
