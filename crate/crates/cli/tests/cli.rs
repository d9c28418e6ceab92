use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const SMALL_CONFIG: &str = r#"
[scene]
width = 320
height = 240

[layout]
canvas_width = 320
canvas_height = 480
game_pane = { x = 0, y = 0, w = 320, h = 240 }
gaze_pane = { x = 0, y = 240, w = 320, h = 240 }

[roi]
fallback = "other"

[[roi.regions]]
name = "center"
rect = { x = 110, y = 70, w = 100, h = 100 }
priority = 2

[[roi.regions]]
name = "mini_map"
rect = { x = 0, y = 0, w = 60, h = 60 }
priority = 1
"#;

fn gazekit(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gazekit"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("run gazekit")
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

/// Long-format table: two groups, `n_a` and `n_b` participants, two variables.
fn long_table(n_a: usize, n_b: usize) -> String {
    let mut s = String::from("participant_id,group,variable,value\n");
    for (group, n, shift) in [("middle_skill", n_a, 0.0), ("high_skill", n_b, 1.5)] {
        for i in 0..n {
            let x = shift + (i as f64 * 0.37).sin() + i as f64 * 0.1;
            let y = 2.0 * x + (i as f64 * 1.3).cos();
            s += &format!("{group}{i},{group},sd_x,{x}\n{group}{i},{group},kda,{y}\n");
        }
    }
    s
}

#[test]
fn power_prints_the_four_quantities() {
    let dir = tempfile::tempdir().unwrap();
    let o = gazekit(dir.path(), &["power", "--d", "1.04", "--n1", "11", "--n2", "10"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = String::from_utf8(o.stdout).unwrap();
    let keys: Vec<&str> = text.lines().map(|l| l.split('=').next().unwrap()).collect();
    assert_eq!(keys, ["delta", "t_crit", "df", "power"]);
    assert!(text.contains("df=19\n"));
    assert!(text.contains("t_crit=2.0930\n"));
}

#[test]
fn usage_errors_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(gazekit(dir.path(), &["nope"]).status.code(), Some(1));
    assert_eq!(gazekit(dir.path(), &["power", "--d", "1"]).status.code(), Some(1));
    let o = gazekit(dir.path(), &["power", "--d", "1", "--n1", "5", "--n2", "5", "--alpha", "1.5"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(gazekit(dir.path(), &["--help"]).status.code(), Some(0));
}

#[test]
fn missing_input_is_an_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let o = gazekit(dir.path(), &["compare", "--input", "absent.csv"]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
    assert!(!dir.path().join("compare.csv").exists());
}

#[test]
fn empty_frame_dir_gives_header_only_output() {
    let dir = tempfile::tempdir().unwrap();
    fs::create_dir(dir.path().join("frames")).unwrap();
    let o = gazekit(dir.path(), &["extract", "--frames", "frames"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(fs::read_to_string(dir.path().join("output.csv")).unwrap(), "frame_id,x,y,roi\n");
}

#[test]
fn extract_rejects_a_size_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    fs::create_dir(dir.path().join("frames")).unwrap();
    let o = gazekit(dir.path(), &["extract", "--frames", "frames", "--width", "1920", "--height", "1080"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!dir.path().join("output.csv").exists());
}

#[test]
fn too_few_observations_is_a_data_error_and_writes_nothing() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("long.csv"), long_table(6, 2)).unwrap();
    let o = gazekit(dir.path(), &["compare", "--input", "long.csv"]);
    assert_eq!(o.status.code(), Some(2), "{}", stderr(&o));
    assert!(stderr(&o).contains("n=2"));
    assert!(!dir.path().join("compare.csv").exists());
}

#[test]
fn failed_run_leaves_no_partial_outputs() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("out.csv"), "frame_id,x,y,roi\n0,1,2,center\n1,,3,\n").unwrap();
    let o = gazekit(
        dir.path(),
        &["metrics", "--input", "out.csv", "--out", "m.csv", "--long-out", "l.csv"],
    );
    assert_eq!(o.status.code(), Some(2), "{}", stderr(&o));
    assert!(!dir.path().join("m.csv").exists());
    assert!(!dir.path().join("l.csv").exists());

    // synth with a bad mixture label removes the directory it created
    let o = gazekit(dir.path(), &["synth", "--n-frames", "3", "--mixture", "nowhere=1", "--out", "s"]);
    assert_ne!(o.status.code(), Some(0));
    assert!(!dir.path().join("s").exists());
}

#[test]
fn analysis_outputs_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("long.csv"), long_table(7, 6)).unwrap();
    let run = |tag: &str| {
        let c = format!("c{tag}.csv");
        let r = format!("r{tag}.csv");
        let s = format!("p{tag}.svg");
        for args in [
            vec!["compare", "--input", "long.csv", "--out", &c],
            vec!["correlate", "--input", "long.csv", "--y", "kda", "--out", &r],
            vec!["report", "--input", "long.csv", "--x", "sd_x", "--y", "kda", "--out", &s],
        ] {
            let o = gazekit(dir.path(), &args);
            assert!(o.status.success(), "{args:?}: {}", stderr(&o));
        }
        [c, r, s].map(|f| fs::read(dir.path().join(f)).unwrap())
    };
    let (a, b) = (run("1"), run("2"));
    assert_eq!(a, b);

    let compare = String::from_utf8(a[0].clone()).unwrap();
    assert!(compare.starts_with("variable,method,statistic,df,p,effect_size,route\n"));
    assert_eq!(compare.lines().count(), 3);
    let svg = String::from_utf8(a[2].clone()).unwrap();
    assert!(svg.contains("<title>kda vs sd_x: slope="));
    assert!(svg.contains(r#"<regression method="ols""#));
}

#[test]
fn synth_extract_metrics_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("small.toml"), SMALL_CONFIG).unwrap();
    let o = gazekit(
        dir.path(),
        &[
            "synth", "--config", "small.toml", "--n-frames", "40", "--seed", "9", "--mixture",
            "center=0.75,mini_map=0.25", "--radius", "4", "--out", "session",
        ],
    );
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(fs::read_dir(dir.path().join("session/frames")).unwrap().count(), 40);

    let o = gazekit(
        dir.path(),
        &["extract", "--frames", "session/frames", "--config", "session/config.toml", "--out", "out.csv"],
    );
    assert!(o.status.success(), "{}", stderr(&o));
    let out = fs::read_to_string(dir.path().join("out.csv")).unwrap();
    let truth = fs::read_to_string(dir.path().join("session/ground_truth.csv")).unwrap();
    let labels: Vec<&str> = out.lines().skip(1).map(|l| l.rsplit(',').next().unwrap()).collect();
    let expected: Vec<&str> = truth.lines().skip(2).map(|l| l.rsplit(',').next().unwrap()).collect();
    assert_eq!(labels, expected);
    assert_eq!(labels.iter().filter(|l| **l == "center").count(), 30);

    fs::write(dir.path().join("sessions.csv"), "participant_id,group,trial_id,path\np1,high_skill,t1,out.csv\n")
        .unwrap();
    let o = gazekit(
        dir.path(),
        &["metrics", "--sessions", "sessions.csv", "--config", "session/config.toml"],
    );
    assert!(o.status.success(), "{}", stderr(&o));
    let metrics = fs::read_to_string(dir.path().join("metrics.csv")).unwrap();
    let mut lines = metrics.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    let col = |name: &str| row[header.iter().position(|h| *h == name).unwrap()];
    assert_eq!(&row[..5], ["p1", "high_skill", "t1", "40", "1.00000"]);
    assert_eq!(col("pct_center"), "0.750000");
    assert_eq!(col("pct_mini_map"), "0.250000");
    assert_eq!(col("pct_other"), "0.00000");
}
