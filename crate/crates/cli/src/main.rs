//! `gazekit` command-line tool.
//!
//! Exit statuses: 0 success, 1 usage error, 2 data error, 3 I/O error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod data;
mod error;
mod output;
mod svg;

#[derive(Parser)]
#[command(name = "gazekit", version, about = "Gaze-marker extraction, ROI metrics and group statistics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Detect the gaze marker in every frame and write output.csv.
    Extract(ExtractArgs),
    /// Compute per-session metrics from output.csv files.
    Metrics(MetricsArgs),
    /// Compare two groups on every variable (t-test or Wilcoxon).
    Compare(CompareArgs),
    /// Correlate variables per participant (Pearson or Spearman).
    Correlate(CorrelateArgs),
    /// Post-hoc power of a two-sample t-test.
    Power(PowerArgs),
    /// Render a synthetic session with ground truth.
    Synth(SynthArgs),
    /// SVG scatter plot with a least-squares line.
    Report(ReportArgs),
}

#[derive(Args)]
struct ConfigArg {
    /// Analysis config (TOML). Defaults to the built-in 1920x2160 layout.
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct FrameInput {
    /// Directory of frame images (png, bmp, ppm), read in file-name order.
    #[arg(long, value_name = "DIR")]
    frames: Option<PathBuf>,
    /// Read raw RGB24 frames from standard input.
    #[arg(long)]
    stdin: bool,
}

#[derive(Args)]
struct MarkerArgs {
    #[arg(long, value_name = "0-255")]
    marker_r_min: Option<u8>,
    #[arg(long, value_name = "0-255")]
    marker_r_max: Option<u8>,
    #[arg(long, value_name = "0-255")]
    marker_g_min: Option<u8>,
    #[arg(long, value_name = "0-255")]
    marker_g_max: Option<u8>,
    #[arg(long, value_name = "0-255")]
    marker_b_min: Option<u8>,
    #[arg(long, value_name = "0-255")]
    marker_b_max: Option<u8>,
    /// Smallest marker blob, in pixels.
    #[arg(long, value_name = "PX")]
    min_blob_area: Option<u32>,
    /// Largest marker blob, in pixels.
    #[arg(long, value_name = "PX")]
    max_blob_area: Option<u32>,
}

#[derive(Args)]
struct ExtractArgs {
    #[command(flatten)]
    input: FrameInput,
    #[command(flatten)]
    config: ConfigArg,
    /// Frame width; must match the layout canvas.
    #[arg(long)]
    width: Option<u32>,
    /// Frame height; must match the layout canvas.
    #[arg(long)]
    height: Option<u32>,
    #[command(flatten)]
    marker: MarkerArgs,
    #[arg(long, default_value = "output.csv", value_name = "FILE")]
    out: PathBuf,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SessionInput {
    /// CSV listing sessions: participant_id,group,trial_id,path.
    #[arg(long, value_name = "FILE")]
    sessions: Option<PathBuf>,
    /// A single output.csv.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct MetricsArgs {
    #[command(flatten)]
    input: SessionInput,
    #[command(flatten)]
    config: ConfigArg,
    /// Participant id for --input.
    #[arg(long, default_value = "p1")]
    participant: String,
    /// Group for --input (middle_skill, high_skill).
    #[arg(long, default_value = "unspecified")]
    group: String,
    /// Trial id for --input.
    #[arg(long, default_value = "t1")]
    trial: String,
    /// Match log (participant_id,trial_id,kills,deaths,assists); adds a kda column.
    #[arg(long, value_name = "FILE")]
    match_log: Option<PathBuf>,
    #[arg(long, default_value = "metrics.csv", value_name = "FILE")]
    out: PathBuf,
    /// Also write the metrics in long format.
    #[arg(long, value_name = "FILE")]
    long_out: Option<PathBuf>,
}

fn parse_alpha(s: &str) -> Result<f64, String> {
    let a: f64 = s.parse().map_err(|_| format!("{s:?} is not a number"))?;
    if a > 0.0 && a < 1.0 {
        Ok(a)
    } else {
        Err(format!("alpha must lie in (0, 1), got {a}"))
    }
}

#[derive(Args)]
struct CompareArgs {
    /// Metrics or long-format CSV.
    #[arg(long, value_name = "FILE")]
    input: PathBuf,
    /// The two groups to compare, in order. Defaults to middle_skill,high_skill
    /// or the only two groups present.
    #[arg(long, value_delimiter = ',', value_name = "A,B")]
    groups: Option<Vec<String>>,
    /// Variables to test (default: all).
    #[arg(long, value_delimiter = ',', value_name = "VARS")]
    variables: Option<Vec<String>>,
    /// Average each participant's sessions first.
    #[arg(long)]
    per_participant: bool,
    #[arg(long, default_value = "0.05", value_parser = parse_alpha)]
    alpha: f64,
    #[arg(long, default_value = "compare.csv", value_name = "FILE")]
    out: PathBuf,
}

#[derive(Args)]
struct CorrelateArgs {
    /// Metrics or long-format CSV.
    #[arg(long, value_name = "FILE")]
    input: PathBuf,
    /// Variables on the x side (default: every variable except the y ones).
    #[arg(long, value_delimiter = ',', value_name = "VARS")]
    x: Option<Vec<String>>,
    /// Variables on the y side.
    #[arg(long, value_delimiter = ',', value_name = "VARS", required = true)]
    y: Vec<String>,
    #[arg(long, default_value = "0.05", value_parser = parse_alpha)]
    alpha: f64,
    #[arg(long, default_value = "correlate.csv", value_name = "FILE")]
    out: PathBuf,
}

#[derive(Args)]
struct PowerArgs {
    /// Cohen's d.
    #[arg(long, allow_negative_numbers = true)]
    d: f64,
    #[arg(long)]
    n1: usize,
    #[arg(long)]
    n2: usize,
    #[arg(long, default_value = "0.05", value_parser = parse_alpha)]
    alpha: f64,
}

#[derive(Args)]
struct SynthArgs {
    #[command(flatten)]
    config: ConfigArg,
    #[arg(long, default_value_t = 900)]
    n_frames: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Gaussian mean x (default: scene centre).
    #[arg(long)]
    mean_x: Option<f64>,
    /// Gaussian mean y (default: scene centre).
    #[arg(long)]
    mean_y: Option<f64>,
    #[arg(long, default_value_t = 100.0)]
    sd_x: f64,
    #[arg(long, default_value_t = 60.0)]
    sd_y: f64,
    /// ROI mixture instead of a Gaussian, e.g. center=0.7,mini_map=0.3.
    #[arg(long, value_delimiter = ',', value_name = "LABEL=WEIGHT")]
    mixture: Option<Vec<String>>,
    /// Share of frames without a marker.
    #[arg(long, default_value_t = 0.0)]
    dropout: f64,
    /// Marker disk radius in pixels.
    #[arg(long, default_value_t = 6)]
    radius: u32,
    /// Output directory: frames/, ground_truth.csv and config.toml.
    #[arg(long, value_name = "DIR")]
    out: PathBuf,
}

#[derive(Args)]
struct ReportArgs {
    /// Metrics or long-format CSV.
    #[arg(long, value_name = "FILE")]
    input: PathBuf,
    #[arg(long, value_name = "VAR")]
    x: String,
    #[arg(long, value_name = "VAR")]
    y: String,
    #[arg(long, default_value = "report.svg", value_name = "FILE")]
    out: PathBuf,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Extract(a) => commands::extract(a),
        Command::Metrics(a) => commands::metrics(a),
        Command::Compare(a) => commands::compare(a),
        Command::Correlate(a) => commands::correlate(a),
        Command::Power(a) => commands::power(a),
        Command::Synth(a) => commands::synth(a),
        Command::Report(a) => commands::report(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("gazekit: {}", e.to_string().replace('\n', " "));
            ExitCode::from(e.code())
        }
    }
}
