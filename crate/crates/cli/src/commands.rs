use std::collections::BTreeMap;
use std::fs::File;
use std::io;
use std::path::Path;

use gazekit::detect::ChannelRange;
use gazekit::geometry::Point;
use gazekit::io_csv::{
    metrics_to_long, read_match_log, read_metrics_csv_from, read_output_csv, write_compare_results_to,
    write_correlate_results_to, write_long_csv_to, write_metrics_csv_to, write_output_csv_to, MetricsRecord,
};
use gazekit::stats::{auto_compare, auto_correlate, linear_fit, power_two_sample_t, TestResult};
use gazekit::synth::{gen_trace, render_frames, GazeDistribution, MarkerStyle, SynthSpec};
use gazekit::{
    annotate_trace, extract_trace, open_image_dir, open_raw_stream, session_metrics, AnalysisConfig, Group, MarkerSpec,
    TraceMeta,
};

use crate::data::{group_values, load_observations, paired, per_participant, variables};
use crate::error::{io_err, CliError, CliResult};
use crate::output::{DirGuard, Outputs};
use crate::svg::{render, Scatter};
use crate::{
    CompareArgs, ConfigArg, CorrelateArgs, ExtractArgs, MarkerArgs, MetricsArgs, PowerArgs, ReportArgs, SynthArgs,
};

fn load_config(arg: &ConfigArg) -> CliResult<AnalysisConfig> {
    match &arg.config {
        Some(path) => Ok(AnalysisConfig::from_file(path)?),
        None => Ok(AnalysisConfig::default()),
    }
}

fn marker_overrides(base: &MarkerSpec, m: &MarkerArgs) -> CliResult<MarkerSpec> {
    let range = |cur: ChannelRange, min: Option<u8>, max: Option<u8>, name: &str| {
        ChannelRange::new(min.unwrap_or(cur.min()), max.unwrap_or(cur.max()))
            .map_err(|e| CliError::Usage(format!("--marker-{name}-*: {e}")))
    };
    MarkerSpec::new(
        range(base.red(), m.marker_r_min, m.marker_r_max, "r")?,
        range(base.green(), m.marker_g_min, m.marker_g_max, "g")?,
        range(base.blue(), m.marker_b_min, m.marker_b_max, "b")?,
        m.min_blob_area.unwrap_or(base.min_blob_area()),
        m.max_blob_area.or(base.max_blob_area()),
    )
    .map_err(|e| CliError::Usage(e.to_string()))
}

pub fn extract(a: ExtractArgs) -> CliResult {
    let config = load_config(&a.config)?;
    let marker = marker_overrides(&config.marker, &a.marker)?;
    let canvas = (config.layout.canvas_width(), config.layout.canvas_height());
    let (w, h) = (a.width.unwrap_or(canvas.0), a.height.unwrap_or(canvas.1));
    if (w, h) != canvas {
        return Err(CliError::Data(format!(
            "frames are {w}x{h} but the layout canvas is {}x{}",
            canvas.0, canvas.1
        )));
    }
    let source = match &a.input.frames {
        Some(dir) => open_image_dir(dir, w, h)?,
        None => open_raw_stream(io::stdin(), w, h)?,
    };
    let trace = extract_trace(source, &config.layout, &marker, TraceMeta::default())?;
    let trace = annotate_trace(trace, &config.roi)?;
    let mut bytes = Vec::new();
    write_output_csv_to(&trace, &mut bytes).map_err(|e| CliError::Data(e.to_string()))?;
    let mut out = Outputs::default();
    out.add(&a.out, bytes);
    out.commit()?;
    eprintln!(
        "{} frames, {} with a marker -> {}",
        trace.len(),
        trace.n_valid(),
        a.out.display()
    );
    Ok(())
}

struct Session {
    meta: TraceMeta,
    path: std::path::PathBuf,
}

fn read_sessions(path: &Path) -> CliResult<Vec<Session>> {
    let file = File::open(path).map_err(|e| io_err(path, e))?;
    let base = path.parent().unwrap_or(Path::new("."));
    let mut reader = csv::Reader::from_reader(file);
    let want = ["participant_id", "group", "trial_id", "path"];
    let header = reader.headers().map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
    if header.iter().ne(want) {
        return Err(CliError::Data(format!(
            "{}: expected header `{}`",
            path.display(),
            want.join(",")
        )));
    }
    let mut sessions = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
        let group: Group = record[1].parse()?;
        sessions.push(Session {
            meta: TraceMeta {
                participant_id: record[0].to_owned(),
                group,
                trial_id: record[2].to_owned(),
                ..TraceMeta::default()
            },
            path: base.join(&record[3]),
        });
    }
    if sessions.is_empty() {
        return Err(CliError::Data(format!("{}: no sessions listed", path.display())));
    }
    Ok(sessions)
}

pub fn metrics(a: MetricsArgs) -> CliResult {
    let config = load_config(&a.config)?;
    let sessions = match (&a.input.sessions, &a.input.input) {
        (Some(manifest), _) => read_sessions(manifest)?,
        (None, Some(input)) => vec![Session {
            meta: TraceMeta {
                participant_id: a.participant.clone(),
                group: a.group.parse()?,
                trial_id: a.trial.clone(),
                ..TraceMeta::default()
            },
            path: input.clone(),
        }],
        (None, None) => unreachable!("clap requires one input"),
    };
    let kda: Option<BTreeMap<(String, String), f64>> = match &a.match_log {
        Some(p) => Some(
            read_match_log(p)?
                .into_iter()
                .map(|r| ((r.participant_id, r.trial_id), r.stats.kda()))
                .collect(),
        ),
        None => None,
    };
    let (w, h) = config.layout.scene_dims();
    let mut records = Vec::new();
    for s in sessions {
        let mut trace = read_output_csv(&s.path, w, h)?;
        trace.meta = s.meta;
        let m = session_metrics(&trace, &config.roi)
            .map_err(|e| CliError::Data(format!("{}: {e}", s.path.display())))?;
        let key = (trace.meta.participant_id.clone(), trace.meta.trial_id.clone());
        let kda = match &kda {
            Some(map) => Some(*map.get(&key).ok_or_else(|| {
                CliError::Data(format!("match log has no row for participant {} trial {}", key.0, key.1))
            })?),
            None => None,
        };
        records.push(MetricsRecord {
            meta: trace.meta,
            metrics: m,
            kda,
        });
    }
    let mut bytes = Vec::new();
    write_metrics_csv_to(&records, &mut bytes)?;
    let mut out = Outputs::default();
    if let Some(long_path) = &a.long_out {
        let rows = read_metrics_csv_from(bytes.as_slice(), "metrics")?;
        let mut long = Vec::new();
        write_long_csv_to(&metrics_to_long(&rows), &mut long)?;
        out.add(long_path, long);
    }
    out.add(&a.out, bytes);
    out.commit()?;
    eprintln!("{} sessions -> {}", records.len(), a.out.display());
    Ok(())
}

fn pick_groups(requested: Option<Vec<String>>, present: &[String]) -> CliResult<(String, String)> {
    if let Some(g) = requested {
        if g.len() != 2 {
            return Err(CliError::Usage(format!("--groups takes exactly two names, got {}", g.len())));
        }
        return Ok((g[0].clone(), g[1].clone()));
    }
    let (mid, high) = (Group::MiddleSkill.to_string(), Group::HighSkill.to_string());
    if present.contains(&mid) && present.contains(&high) {
        return Ok((mid, high));
    }
    match present {
        [a, b] => Ok((a.clone(), b.clone())),
        _ => Err(CliError::Data(format!(
            "found groups {present:?}; choose two with --groups"
        ))),
    }
}

fn print_result(name: &str, r: &TestResult) {
    println!(
        "{name}: {} statistic={:.4} p={:.4}{}",
        r.method,
        r.statistic,
        r.p_value,
        r.effect_size.map(|e| format!(" effect={e:.4}")).unwrap_or_default()
    );
}

pub fn compare(a: CompareArgs) -> CliResult {
    let mut rows = load_observations(&a.input)?;
    if a.per_participant {
        rows = per_participant(&rows)?;
    }
    let mut present: Vec<String> = rows.iter().map(|r| r.group.clone()).collect();
    present.sort();
    present.dedup();
    let (ga, gb) = pick_groups(a.groups, &present)?;
    let vars = a.variables.unwrap_or_else(|| variables(&rows));
    if vars.is_empty() {
        return Err(CliError::Data(format!("{}: no observations", a.input.display())));
    }
    let mut results = Vec::new();
    for v in vars {
        let (xa, xb) = (group_values(&rows, &v, &ga), group_values(&rows, &v, &gb));
        if xa.is_empty() && xb.is_empty() {
            return Err(CliError::Data(format!("variable {v:?} not found")));
        }
        let r = auto_compare(&xa, &xb, a.alpha)
            .map_err(|e| CliError::Data(format!("{v} ({ga} n={} vs {gb} n={}): {e}", xa.len(), xb.len())))?;
        print_result(&v, &r);
        results.push((v, r));
    }
    let mut bytes = Vec::new();
    write_compare_results_to(&results, &mut bytes)?;
    let mut out = Outputs::default();
    out.add(&a.out, bytes);
    out.commit()
}

pub fn correlate(a: CorrelateArgs) -> CliResult {
    let rows = load_observations(&a.input)?;
    let all = variables(&rows);
    for v in &a.y {
        if !all.contains(v) {
            return Err(CliError::Data(format!("variable {v:?} not found")));
        }
    }
    let xs = a
        .x
        .unwrap_or_else(|| all.iter().filter(|v| !a.y.contains(v)).cloned().collect());
    let mut results = Vec::new();
    for x in &xs {
        for y in &a.y {
            let pairs = paired(&rows, x, y)?;
            if pairs.is_empty() {
                return Err(CliError::Data(format!("no participant has both {x:?} and {y:?}")));
            }
            let (vx, vy): (Vec<f64>, Vec<f64>) = pairs.iter().map(|p| (p.2, p.3)).unzip();
            let r = auto_correlate(&vx, &vy, a.alpha).map_err(|e| CliError::Data(format!("{x} vs {y}: {e}")))?;
            print_result(&format!("{x} vs {y}"), &r);
            results.push((x.clone(), y.clone(), r));
        }
    }
    let mut bytes = Vec::new();
    write_correlate_results_to(&results, &mut bytes)?;
    let mut out = Outputs::default();
    out.add(&a.out, bytes);
    out.commit()
}

pub fn power(a: PowerArgs) -> CliResult {
    let r = power_two_sample_t(a.d, a.n1, a.n2, a.alpha).map_err(|e| CliError::Usage(e.to_string()))?;
    println!("delta={:.4}", r.delta);
    println!("t_crit={:.4}", r.t_crit);
    println!("df={}", r.df);
    println!("power={:.4}", r.power);
    Ok(())
}

fn parse_mixture(items: &[String]) -> CliResult<Vec<(String, f64)>> {
    items
        .iter()
        .map(|item| {
            let (label, w) = item
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("--mixture entry {item:?} is not LABEL=WEIGHT")))?;
            let w: f64 = w
                .parse()
                .map_err(|_| CliError::Usage(format!("--mixture weight {w:?} is not a number")))?;
            Ok((label.to_owned(), w))
        })
        .collect()
}

pub fn synth(a: SynthArgs) -> CliResult {
    let config = load_config(&a.config)?;
    let (w, h) = config.layout.scene_dims();
    let distribution = match &a.mixture {
        Some(items) => GazeDistribution::RoiMixture(parse_mixture(items)?),
        None => GazeDistribution::Gaussian {
            mean: Point::new(a.mean_x.unwrap_or(w as f64 / 2.0), a.mean_y.unwrap_or(h as f64 / 2.0)),
            sd_x: a.sd_x,
            sd_y: a.sd_y,
        },
    };
    let spec = SynthSpec {
        n_frames: a.n_frames,
        distribution,
        dropout: a.dropout,
        gaps: Vec::new(),
        seed: a.seed,
        layout: config.layout,
        roi_layout: config.roi.clone(),
        marker: MarkerStyle {
            radius: a.radius,
            ..MarkerStyle::default()
        },
    };
    spec.validate().map_err(|e| CliError::Usage(e.to_string()))?;
    let (trace, truth) = gen_trace(&spec)?;

    let guard = DirGuard::create(&a.out)?;
    render_frames(&trace, &spec, a.out.join("frames"))?;
    let mut gt = Vec::new();
    truth.write_csv_to(&mut gt).map_err(|e| io_err(&a.out, e))?;
    let mut out = Outputs::default();
    out.add(a.out.join("ground_truth.csv"), gt);
    out.add(a.out.join("config.toml"), spec.analysis_config().to_toml_string().into_bytes());
    out.commit()?;
    guard.disarm();
    eprintln!(
        "{} frames ({} with a marker) -> {}",
        trace.len(),
        trace.n_valid(),
        a.out.display()
    );
    Ok(())
}

pub fn report(a: ReportArgs) -> CliResult {
    let rows = load_observations(&a.input)?;
    let pairs = paired(&rows, &a.x, &a.y)?;
    if pairs.len() < 2 {
        return Err(CliError::Data(format!(
            "need at least 2 participants with both {:?} and {:?}, found {}",
            a.x,
            a.y,
            pairs.len()
        )));
    }
    let (xs, ys): (Vec<f64>, Vec<f64>) = pairs.iter().map(|p| (p.2, p.3)).unzip();
    let fit = linear_fit(&xs, &ys)?;
    let r = gazekit::stats::pearson_r(&xs, &ys).ok().and_then(|t| t.effect_size);
    let points: Vec<(String, f64, f64)> = pairs.into_iter().map(|(_, g, x, y)| (g, x, y)).collect();
    let svg = render(&Scatter {
        x_label: &a.x,
        y_label: &a.y,
        points: &points,
        fit: Some(fit),
        r,
    });
    let mut out = Outputs::default();
    out.add(&a.out, svg.into_bytes());
    out.commit()?;
    println!("{} vs {}: slope={:.6} intercept={:.6}", a.y, a.x, fit.slope, fit.intercept);
    Ok(())
}
