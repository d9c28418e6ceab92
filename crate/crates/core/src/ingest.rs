//! Frame sources and the dual-pane recording layout.
//!
//! Recordings are decoded outside the toolkit. Frames arrive either as a
//! directory of lossless images (one file per frame, zero-padded names) or as
//! packed RGB24 bytes on a stream, e.g. piped from
//! `ffmpeg -i session.mkv -f rawvideo -pix_fmt rgb24 -`.

use std::fmt;
use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};

use image::{imageops, RgbImage};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Rect;

/// File extensions treated as frames by [`open_image_dir`].
pub const FRAME_EXTENSIONS: &[&str] = &["png", "bmp", "ppm", "pnm"];

/// Where the game scene and the gaze overlay sit on the recorded canvas.
///
/// The overlay pane mirrors the game pane pixel for pixel, so both panes
/// must have the same size; the game pane's size is the scene size every
/// other module works in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawLayout", into = "RawLayout")]
pub struct RecordingLayout {
    canvas_width: u32,
    canvas_height: u32,
    game_pane: Rect,
    gaze_pane: Rect,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLayout {
    canvas_width: u32,
    canvas_height: u32,
    game_pane: Rect,
    gaze_pane: Rect,
}

impl TryFrom<RawLayout> for RecordingLayout {
    type Error = Error;

    fn try_from(raw: RawLayout) -> Result<Self> {
        RecordingLayout::new(raw.canvas_width, raw.canvas_height, raw.game_pane, raw.gaze_pane)
    }
}

impl From<RecordingLayout> for RawLayout {
    fn from(l: RecordingLayout) -> Self {
        RawLayout {
            canvas_width: l.canvas_width,
            canvas_height: l.canvas_height,
            game_pane: l.game_pane,
            gaze_pane: l.gaze_pane,
        }
    }
}

impl RecordingLayout {
    pub fn new(canvas_width: u32, canvas_height: u32, game_pane: Rect, gaze_pane: Rect) -> Result<Self> {
        if canvas_width == 0 || canvas_height == 0 {
            return Err(Error::Layout("canvas has zero size".into()));
        }
        for (name, pane) in [("game_pane", &game_pane), ("gaze_pane", &gaze_pane)] {
            if pane.is_empty() {
                return Err(Error::Layout(format!("{name} has zero size")));
            }
            if !pane.fits_within(canvas_width, canvas_height) {
                return Err(Error::Layout(format!(
                    "{name} {pane:?} extends past the {canvas_width}x{canvas_height} canvas"
                )));
            }
        }
        if game_pane.intersects(&gaze_pane) {
            return Err(Error::Layout("game_pane and gaze_pane overlap".into()));
        }
        if game_pane.w != gaze_pane.w || game_pane.h != gaze_pane.h {
            return Err(Error::Layout(format!(
                "panes differ in size: game {}x{}, gaze {}x{}",
                game_pane.w, game_pane.h, gaze_pane.w, gaze_pane.h
            )));
        }
        Ok(RecordingLayout {
            canvas_width,
            canvas_height,
            game_pane,
            gaze_pane,
        })
    }

    pub fn canvas_width(&self) -> u32 {
        self.canvas_width
    }

    pub fn canvas_height(&self) -> u32 {
        self.canvas_height
    }

    pub fn game_pane(&self) -> Rect {
        self.game_pane
    }

    pub fn gaze_pane(&self) -> Rect {
        self.gaze_pane
    }

    /// Width and height of the game scene coordinate space.
    pub fn scene_dims(&self) -> (u32, u32) {
        (self.game_pane.w, self.game_pane.h)
    }
}

impl Default for RecordingLayout {
    /// 1920x2160 canvas: game scene on top, gaze overlay below.
    fn default() -> Self {
        RecordingLayout {
            canvas_width: 1920,
            canvas_height: 2160,
            game_pane: Rect::new(0, 0, 1920, 1080),
            gaze_pane: Rect::new(0, 1080, 1920, 1080),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Frame {
    pub index: u64,
    pub image: RgbImage,
}

enum Inner {
    Dir(std::vec::IntoIter<PathBuf>),
    Raw(Box<dyn Read + Send>),
    Images(Box<dyn Iterator<Item = Result<RgbImage>> + Send>),
}

/// Sequential source of equally sized RGB frames, indexed from 0.
///
/// Iteration stops for good after the first error.
pub struct FrameSource {
    width: u32,
    height: u32,
    frame_rate_hint: Option<f64>,
    len: Option<usize>,
    next_index: u64,
    failed: bool,
    inner: Inner,
}

impl fmt::Debug for FrameSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FrameSource")
            .field("width", &self.width)
            .field("height", &self.height)
            .field("frame_rate_hint", &self.frame_rate_hint)
            .field("len", &self.len)
            .field("next_index", &self.next_index)
            .finish_non_exhaustive()
    }
}

impl FrameSource {
    fn with(width: u32, height: u32, len: Option<usize>, inner: Inner) -> Self {
        FrameSource {
            width,
            height,
            frame_rate_hint: None,
            len,
            next_index: 0,
            failed: false,
            inner,
        }
    }

    /// Wraps already decoded frames, e.g. frames rendered in memory.
    pub fn from_images<I>(width: u32, height: u32, images: I) -> Self
    where
        I: IntoIterator<Item = RgbImage>,
        I::IntoIter: Send + 'static,
    {
        FrameSource::from_fallible(width, height, images.into_iter().map(Ok))
    }

    pub fn from_fallible<I>(width: u32, height: u32, images: I) -> Self
    where
        I: Iterator<Item = Result<RgbImage>> + Send + 'static,
    {
        let len = match images.size_hint() {
            (lo, Some(hi)) if lo == hi => Some(lo),
            _ => None,
        };
        FrameSource::with(width, height, len, Inner::Images(Box::new(images)))
    }

    pub fn with_frame_rate_hint(mut self, fps: f64) -> Self {
        self.frame_rate_hint = Some(fps);
        self
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn frame_rate_hint(&self) -> Option<f64> {
        self.frame_rate_hint
    }

    /// Total number of frames, when known before iterating.
    pub fn len_hint(&self) -> Option<usize> {
        self.len
    }

    /// Frames handed out so far.
    pub fn frames_yielded(&self) -> u64 {
        self.next_index
    }

    fn next_image(&mut self) -> Option<Result<RgbImage>> {
        let (w, h) = (self.width, self.height);
        match &mut self.inner {
            Inner::Dir(files) => {
                let path = files.next()?;
                Some(load_frame(&path, w, h))
            }
            Inner::Raw(reader) => read_raw_frame(reader.as_mut(), w, h, self.next_index).transpose(),
            Inner::Images(images) => {
                let image = images.next()?;
                Some(image.and_then(|img| {
                    if img.dimensions() != (w, h) {
                        Err(Error::dims(format!("frame {}", self.next_index), (w, h), img.dimensions()))
                    } else {
                        Ok(img)
                    }
                }))
            }
        }
    }
}

impl Iterator for FrameSource {
    type Item = Result<Frame>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        match self.next_image()? {
            Ok(image) => {
                let index = self.next_index;
                self.next_index += 1;
                Some(Ok(Frame { index, image }))
            }
            Err(e) => {
                self.failed = true;
                Some(Err(e))
            }
        }
    }
}

fn load_frame(path: &Path, width: u32, height: u32) -> Result<RgbImage> {
    let reader = image::ImageReader::open(path)
        .map_err(|e| Error::io(path, e))?
        .with_guessed_format()
        .map_err(|e| Error::io(path, e))?;
    let img = reader
        .decode()
        .map_err(|source| Error::Image {
            path: path.to_owned(),
            source,
        })?
        .into_rgb8();
    if img.dimensions() != (width, height) {
        return Err(Error::dims(path.display().to_string(), (width, height), img.dimensions()));
    }
    Ok(img)
}

/// Reads one packed RGB24 frame; `Ok(None)` on a clean end of stream.
fn read_raw_frame(reader: &mut dyn Read, width: u32, height: u32, index: u64) -> Result<Option<RgbImage>> {
    let need = 3 * width as usize * height as usize;
    let mut buf = vec![0u8; need];
    let mut got = 0;
    while got < need {
        match reader.read(&mut buf[got..]) {
            Ok(0) => break,
            Ok(n) => got += n,
            Err(e) if e.kind() == io::ErrorKind::Interrupted => {}
            Err(e) => return Err(Error::Stream(e)),
        }
    }
    if got == 0 {
        return Ok(None);
    }
    if got < need {
        return Err(Error::TruncatedStream {
            frame_index: index,
            got,
            need,
        });
    }
    Ok(Some(RgbImage::from_raw(width, height, buf).expect("buffer sized for frame")))
}

/// Frames from a directory of image files, in byte-wise filename order.
///
/// Files without a frame extension ([`FRAME_EXTENSIONS`]) and
/// subdirectories are ignored. Each file's dimensions are checked when it is
/// read.
pub fn open_image_dir(path: impl AsRef<Path>, width: u32, height: u32) -> Result<FrameSource> {
    let path = path.as_ref();
    if width == 0 || height == 0 {
        return Err(Error::InvalidArgument("frame size must be nonzero".into()));
    }
    let mut files = Vec::new();
    for entry in fs::read_dir(path).map_err(|e| Error::io(path, e))? {
        let entry = entry.map_err(|e| Error::io(path, e))?;
        let file_path = entry.path();
        if !file_path.is_file() {
            continue;
        }
        let is_frame = file_path
            .extension()
            .and_then(|e| e.to_str())
            .is_some_and(|e| FRAME_EXTENSIONS.iter().any(|x| x.eq_ignore_ascii_case(e)));
        if is_frame {
            files.push(file_path);
        }
    }
    files.sort_by(|a, b| a.file_name().cmp(&b.file_name()));
    let len = files.len();
    Ok(FrameSource::with(width, height, Some(len), Inner::Dir(files.into_iter())))
}

/// Frames from a stream of concatenated packed RGB24 images.
pub fn open_raw_stream<R: Read + Send + 'static>(stream: R, width: u32, height: u32) -> Result<FrameSource> {
    if width == 0 || height == 0 {
        return Err(Error::InvalidArgument("frame size must be nonzero".into()));
    }
    Ok(FrameSource::with(width, height, None, Inner::Raw(Box::new(stream))))
}

/// Crops a canvas frame into its (game, gaze) panes.
pub fn split_panes(frame: &RgbImage, layout: &RecordingLayout) -> Result<(RgbImage, RgbImage)> {
    let canvas = (layout.canvas_width, layout.canvas_height);
    if frame.dimensions() != canvas {
        return Err(Error::dims("frame", canvas, frame.dimensions()));
    }
    let crop = |r: Rect| imageops::crop_imm(frame, r.x, r.y, r.w, r.h).to_image();
    Ok((crop(layout.game_pane), crop(layout.gaze_pane)))
}
