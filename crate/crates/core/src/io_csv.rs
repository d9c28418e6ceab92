//! CSV files the toolkit reads and writes.
//!
//! All files are UTF-8, comma separated, LF terminated, with a header row and
//! no quoting (labels and ids are restricted to characters that never need
//! it). Real numbers are written with six significant digits by
//! [`format_sig6`]. The exact column lists are the `*_HEADER` constants.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::metrics::{MatchStats, SessionMetrics};
use crate::roi::is_valid_label;
use crate::stats::TestResult;
use crate::trace::{GazeSample, GazeTrace, Group, TraceMeta};

pub const OUTPUT_HEADER: [&str; 4] = ["frame_id", "x", "y", "roi"];
pub const METRICS_HEADER: [&str; 15] = [
    "participant_id",
    "group",
    "trial_id",
    "n_valid",
    "valid_fraction",
    "sd_x",
    "sd_y",
    "mean_x",
    "mean_y",
    "dist_center",
    "pct_center",
    "pct_mini_map",
    "pct_info1",
    "pct_info2",
    "pct_other",
];
/// ROI labels behind the `pct_*` metrics columns, in column order.
pub const METRICS_ROI_LABELS: [&str; 5] = ["center", "mini_map", "info1", "info2", "other"];
pub const KDA_COLUMN: &str = "kda";
pub const LONG_HEADER: [&str; 4] = ["participant_id", "group", "variable", "value"];
pub const COMPARE_HEADER: [&str; 7] = ["variable", "method", "statistic", "df", "p", "effect_size", "route"];
pub const CORRELATE_HEADER: [&str; 9] = ["x", "y", "method", "r", "statistic", "df", "p", "n", "route"];
pub const MATCH_LOG_HEADER: [&str; 5] = ["participant_id", "trial_id", "kills", "deaths", "assists"];

/// Six significant digits, trailing zeros kept (C's `%#.6g`):
/// `0.5` -> `0.500000`, `1234567.0` -> `1.23457e+06`.
pub fn format_sig6(v: f64) -> String {
    if v.is_nan() {
        return "nan".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if v == 0.0 {
        return "0.00000".into();
    }
    let sci = format!("{v:.5e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..6).contains(&exp) {
        format!("{:.*}", (5 - exp) as usize, v)
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    }
}

fn format_opt(v: Option<f64>) -> String {
    v.map(format_sig6).unwrap_or_default()
}

fn csv_writer<W: Write>(w: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .quote_style(csv::QuoteStyle::Never)
        .from_writer(w)
}

fn csv_reader<R: Read>(r: R) -> csv::Reader<R> {
    csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(false)
        .trim(csv::Trim::None)
        .from_reader(r)
}

fn csv_err(source: &str, line: u64, message: impl Into<String>) -> Error {
    Error::Csv {
        path: source.to_owned(),
        line,
        message: message.into(),
    }
}

fn map_csv(source: &str, e: csv::Error) -> Error {
    let line = e.position().map_or(0, |p| p.line());
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::Stream(io),
        other => csv_err(source, line, format!("{other:?}")),
    }
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path).map(BufWriter::new).map_err(|e| Error::io(path, e))
}

fn open(path: &Path) -> Result<File> {
    File::open(path).map_err(|e| Error::io(path, e))
}

fn expect_header<R: Read>(reader: &mut csv::Reader<R>, source: &str, want: &[&str]) -> Result<()> {
    let got = reader.headers().map_err(|e| map_csv(source, e))?;
    if got.iter().ne(want.iter().copied()) {
        return Err(csv_err(
            source,
            1,
            format!("expected header `{}`, found `{}`", want.join(","), got.iter().collect::<Vec<_>>().join(",")),
        ));
    }
    Ok(())
}

/// Checks that the header starts with `want`; returns the full header.
fn expect_header_prefix<R: Read>(reader: &mut csv::Reader<R>, source: &str, want: &[&str]) -> Result<Vec<String>> {
    let got: Vec<String> = reader.headers().map_err(|e| map_csv(source, e))?.iter().map(str::to_owned).collect();
    if got.len() < want.len() || got.iter().zip(want).any(|(g, w)| g != w) {
        return Err(csv_err(source, 1, format!("expected header starting `{}`, found `{}`", want.join(","), got.join(","))));
    }
    Ok(got)
}

// ---------------------------------------------------------------- output.csv

/// Writes the per-frame gaze file: `frame_id,x,y,roi`, one row per sample,
/// with x, y and roi empty for frames without a detection.
pub fn write_output_csv_to<W: Write>(trace: &GazeTrace, out: W) -> io::Result<()> {
    let mut w = csv_writer(out);
    w.write_record(OUTPUT_HEADER)?;
    for s in trace.samples() {
        match (s.pos, &s.roi) {
            (Some(p), Some(roi)) => {
                w.write_record([s.frame_id.to_string(), p.x.to_string(), p.y.to_string(), roi.clone()])?;
            }
            (Some(_), None) => {
                return Err(io::Error::new(
                    io::ErrorKind::InvalidInput,
                    format!("frame {} has no ROI label; annotate the trace first", s.frame_id),
                ))
            }
            (None, _) => w.write_record([s.frame_id.to_string(), String::new(), String::new(), String::new()])?,
        }
    }
    w.flush()
}

pub fn write_output_csv(trace: &GazeTrace, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    if let Some(s) = trace.samples().iter().find(|s| s.is_valid() && s.roi.is_none()) {
        return Err(Error::Unannotated(s.frame_id));
    }
    if let Some(s) = trace.samples().iter().find(|s| s.roi.as_deref().is_some_and(|l| !is_valid_label(l))) {
        return Err(Error::InvalidArgument(format!(
            "frame {}: ROI label {:?} is not [a-z0-9_]+",
            s.frame_id,
            s.roi.as_deref().unwrap_or_default()
        )));
    }
    let mut file = create(path)?;
    write_output_csv_to(trace, &mut file).map_err(|e| Error::io(path, e))?;
    file.flush().map_err(|e| Error::io(path, e))
}

/// Parses a per-frame gaze file back into a trace over a scene of the given
/// size. ROI labels are kept verbatim.
pub fn read_output_csv_from<R: Read>(input: R, source: &str, scene_width: u32, scene_height: u32) -> Result<GazeTrace> {
    let mut reader = csv_reader(input);
    expect_header(&mut reader, source, &OUTPUT_HEADER)?;
    let mut samples = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| map_csv(source, e))?;
        let line = record.position().map_or(0, |p| p.line());
        let frame_id: u64 = record[0]
            .parse()
            .map_err(|_| csv_err(source, line, format!("frame_id {:?} is not a nonnegative integer", &record[0])))?;
        let fields = [&record[1], &record[2], &record[3]];
        let empty = fields.iter().filter(|f| f.is_empty()).count();
        let sample = match empty {
            3 => GazeSample::invalid(frame_id),
            0 => {
                let coord = |name: &str, v: &str| -> Result<u32> {
                    v.parse()
                        .map_err(|_| csv_err(source, line, format!("row {frame_id}: {name} {v:?} is not a nonnegative integer")))
                };
                GazeSample::valid(frame_id, coord("x", fields[0])?, coord("y", fields[1])?).with_roi(fields[2])
            }
            _ => {
                return Err(csv_err(
                    source,
                    line,
                    format!("row {frame_id}: x, y and roi must be all empty or all present"),
                ))
            }
        };
        samples.push(sample);
    }
    GazeTrace::new(samples, scene_width, scene_height, TraceMeta::default())
        .map_err(|e| csv_err(source, 0, e.to_string()))
}

pub fn read_output_csv(path: impl AsRef<Path>, scene_width: u32, scene_height: u32) -> Result<GazeTrace> {
    let path = path.as_ref();
    read_output_csv_from(open(path)?, &path.display().to_string(), scene_width, scene_height)
}

// ---------------------------------------------------------------- metrics

/// One row of the metrics file.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricsRecord {
    pub meta: TraceMeta,
    pub metrics: SessionMetrics,
    pub kda: Option<f64>,
}

/// Writes one row per session. A trailing `kda` column is added when any
/// record carries a KDA value; then every record must.
pub fn write_metrics_csv_to<W: Write>(records: &[MetricsRecord], out: W) -> Result<()> {
    if records.is_empty() {
        return Err(Error::InvalidArgument("no sessions to write".into()));
    }
    let with_kda = records.iter().any(|r| r.kda.is_some());
    if with_kda {
        if let Some(r) = records.iter().find(|r| r.kda.is_none()) {
            return Err(Error::InvalidArgument(format!(
                "no KDA for participant {} trial {}",
                r.meta.participant_id, r.meta.trial_id
            )));
        }
    }
    let mut w = csv_writer(out);
    let mut header: Vec<&str> = METRICS_HEADER.to_vec();
    if with_kda {
        header.push(KDA_COLUMN);
    }
    w.write_record(&header).map_err(|e| map_csv("metrics", e))?;
    for r in records {
        let m = &r.metrics;
        let mut row = vec![
            r.meta.participant_id.clone(),
            r.meta.group.to_string(),
            r.meta.trial_id.clone(),
            m.n_valid.to_string(),
            format_sig6(m.valid_fraction),
            format_sig6(m.sd_x),
            format_sig6(m.sd_y),
            format_sig6(m.mean_x),
            format_sig6(m.mean_y),
            format_sig6(m.dist_center),
        ];
        for label in METRICS_ROI_LABELS {
            row.push(format_sig6(m.roi_pct.get(label).copied().unwrap_or(0.0)));
        }
        if let Some(kda) = r.kda {
            row.push(format_sig6(kda));
        }
        w.write_record(&row).map_err(|e| map_csv("metrics", e))?;
    }
    w.flush().map_err(Error::Stream)
}

pub fn write_metrics_csv(records: &[MetricsRecord], path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let mut file = create(path)?;
    write_metrics_csv_to(records, &mut file).map_err(|e| match e {
        Error::Stream(io) => Error::io(path, io),
        other => other,
    })?;
    file.flush().map_err(|e| Error::io(path, e))
}

/// A metrics row read back: identifying columns plus every numeric column.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricsRow {
    pub participant_id: String,
    pub group: Group,
    pub trial_id: String,
    pub values: BTreeMap<String, f64>,
    /// Numeric column names in file order.
    pub columns: Vec<String>,
}

pub fn read_metrics_csv_from<R: Read>(input: R, source: &str) -> Result<Vec<MetricsRow>> {
    let mut reader = csv_reader(input);
    let header = expect_header_prefix(&mut reader, source, &METRICS_HEADER[..3])?;
    let columns: Vec<String> = header[3..].to_vec();
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| map_csv(source, e))?;
        let line = record.position().map_or(0, |p| p.line());
        let group: Group = record[1].parse().map_err(|e: Error| csv_err(source, line, e.to_string()))?;
        let mut values = BTreeMap::new();
        for (name, field) in columns.iter().zip(record.iter().skip(3)) {
            let v: f64 = field
                .parse()
                .map_err(|_| csv_err(source, line, format!("{name}: {field:?} is not a number")))?;
            values.insert(name.clone(), v);
        }
        rows.push(MetricsRow {
            participant_id: record[0].to_owned(),
            group,
            trial_id: record[2].to_owned(),
            values,
            columns: columns.clone(),
        });
    }
    Ok(rows)
}

pub fn read_metrics_csv(path: impl AsRef<Path>) -> Result<Vec<MetricsRow>> {
    let path = path.as_ref();
    read_metrics_csv_from(open(path)?, &path.display().to_string())
}

// ---------------------------------------------------------------- long format

/// One observation in the long-format table fed to the comparison tools.
#[derive(Debug, Clone, PartialEq)]
pub struct LongRow {
    pub participant_id: String,
    pub group: String,
    pub variable: String,
    pub value: f64,
}

/// Reshapes metrics rows into long format, one observation per numeric
/// column per session (`n_valid` excluded).
pub fn metrics_to_long(rows: &[MetricsRow]) -> Vec<LongRow> {
    let mut out = Vec::new();
    for r in rows {
        for col in r.columns.iter().filter(|c| c.as_str() != "n_valid") {
            out.push(LongRow {
                participant_id: r.participant_id.clone(),
                group: r.group.to_string(),
                variable: col.clone(),
                value: r.values[col],
            });
        }
    }
    out
}

pub fn write_long_csv_to<W: Write>(rows: &[LongRow], out: W) -> Result<()> {
    let mut w = csv_writer(out);
    w.write_record(LONG_HEADER).map_err(|e| map_csv("long", e))?;
    for r in rows {
        w.write_record([
            r.participant_id.as_str(),
            r.group.as_str(),
            r.variable.as_str(),
            &format_sig6(r.value),
        ])
        .map_err(|e| map_csv("long", e))?;
    }
    w.flush().map_err(Error::Stream)
}

pub fn write_long_csv(rows: &[LongRow], path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let mut file = create(path)?;
    write_long_csv_to(rows, &mut file).map_err(|e| match e {
        Error::Stream(io) => Error::io(path, io),
        other => other,
    })?;
    file.flush().map_err(|e| Error::io(path, e))
}

pub fn read_long_csv_from<R: Read>(input: R, source: &str) -> Result<Vec<LongRow>> {
    let mut reader = csv_reader(input);
    expect_header(&mut reader, source, &LONG_HEADER)?;
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| map_csv(source, e))?;
        let line = record.position().map_or(0, |p| p.line());
        let value: f64 = record[3]
            .parse()
            .map_err(|_| csv_err(source, line, format!("value {:?} is not a number", &record[3])))?;
        if !value.is_finite() {
            return Err(csv_err(source, line, format!("value {value} is not finite")));
        }
        rows.push(LongRow {
            participant_id: record[0].to_owned(),
            group: record[1].to_owned(),
            variable: record[2].to_owned(),
            value,
        });
    }
    Ok(rows)
}

pub fn read_long_csv(path: impl AsRef<Path>) -> Result<Vec<LongRow>> {
    let path = path.as_ref();
    read_long_csv_from(open(path)?, &path.display().to_string())
}

// ---------------------------------------------------------------- match log

#[derive(Debug, Clone, PartialEq)]
pub struct MatchLogRow {
    pub participant_id: String,
    pub trial_id: String,
    pub stats: MatchStats,
}

pub fn read_match_log_from<R: Read>(input: R, source: &str) -> Result<Vec<MatchLogRow>> {
    let mut reader = csv_reader(input);
    expect_header(&mut reader, source, &MATCH_LOG_HEADER)?;
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| map_csv(source, e))?;
        let line = record.position().map_or(0, |p| p.line());
        let count = |i: usize| -> Result<u32> {
            record[i].parse().map_err(|_| {
                csv_err(source, line, format!("{} {:?} is not a nonnegative integer", MATCH_LOG_HEADER[i], &record[i]))
            })
        };
        rows.push(MatchLogRow {
            participant_id: record[0].to_owned(),
            trial_id: record[1].to_owned(),
            stats: MatchStats::new(count(2)?, count(3)?, count(4)?),
        });
    }
    Ok(rows)
}

pub fn read_match_log(path: impl AsRef<Path>) -> Result<Vec<MatchLogRow>> {
    let path = path.as_ref();
    read_match_log_from(open(path)?, &path.display().to_string())
}

// ---------------------------------------------------------------- results

pub fn write_compare_results_to<W: Write>(rows: &[(String, TestResult)], out: W) -> Result<()> {
    let mut w = csv_writer(out);
    w.write_record(COMPARE_HEADER).map_err(|e| map_csv("results", e))?;
    for (variable, r) in rows {
        w.write_record([
            variable.clone(),
            r.method.to_string(),
            format_sig6(r.statistic),
            format_opt(r.df),
            format_sig6(r.p_value),
            format_opt(r.effect_size),
            r.route(),
        ])
        .map_err(|e| map_csv("results", e))?;
    }
    w.flush().map_err(Error::Stream)
}

pub fn write_correlate_results_to<W: Write>(rows: &[(String, String, TestResult)], out: W) -> Result<()> {
    let mut w = csv_writer(out);
    w.write_record(CORRELATE_HEADER).map_err(|e| map_csv("results", e))?;
    for (x, y, r) in rows {
        w.write_record([
            x.clone(),
            y.clone(),
            r.method.to_string(),
            format_opt(r.effect_size),
            format_sig6(r.statistic),
            format_opt(r.df),
            format_sig6(r.p_value),
            r.n.first().copied().unwrap_or(0).to_string(),
            r.route(),
        ])
        .map_err(|e| map_csv("results", e))?;
    }
    w.flush().map_err(Error::Stream)
}

/// Writes `bytes` produced by `fill` to `path`.
pub fn write_with(path: impl AsRef<Path>, fill: impl FnOnce(&mut Vec<u8>) -> Result<()>) -> Result<()> {
    let path = path.as_ref();
    let mut buf = Vec::new();
    fill(&mut buf)?;
    std::fs::write(path, buf).map_err(|e| Error::io(path, e))
}
