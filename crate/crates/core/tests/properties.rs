//! Property tests for geometric and metric invariants.

use gazekit::detect::detect_marker;
use gazekit::geometry::Rect;
use gazekit::io_csv::{read_output_csv_from, write_output_csv_to};
use gazekit::metrics::{dist_from_center, gaze_sd, mean_gaze};
use gazekit::{annotate_trace, kda, split_panes, GazeSample, GazeTrace, MarkerSpec, PixelPos, RecordingLayout, RoiLayout, TraceMeta};
use image::{Rgb, RgbImage};
use proptest::prelude::*;

fn trace_of(points: &[Option<(u32, u32)>], w: u32, h: u32) -> GazeTrace {
    let samples = points
        .iter()
        .enumerate()
        .map(|(i, p)| match p {
            Some((x, y)) => GazeSample::valid(i as u64, *x, *y),
            None => GazeSample::invalid(i as u64),
        })
        .collect();
    GazeTrace::new(samples, w, h, TraceMeta::default()).unwrap()
}

fn points(n: std::ops::Range<usize>) -> impl Strategy<Value = Vec<Option<(u32, u32)>>> {
    prop::collection::vec(prop::option::weighted(0.85, (0u32..900, 0u32..500)), n)
}

fn draw_disk(img: &mut RgbImage, cx: u32, cy: u32, r: u32) {
    let r = r as i64;
    for dy in -r..=r {
        for dx in -r..=r {
            if dx * dx + dy * dy <= r * r {
                img.put_pixel((cx as i64 + dx) as u32, (cy as i64 + dy) as u32, Rgb([10, 240, 20]));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn split_panes_reconstructs_the_canvas(w in 1u32..40, h in 1u32..30, seed in any::<u64>()) {
        let layout = RecordingLayout::new(w, 2 * h, Rect::new(0, 0, w, h), Rect::new(0, h, w, h)).unwrap();
        let canvas = RgbImage::from_fn(w, 2 * h, |x, y| {
            let v = seed.wrapping_mul(31).wrapping_add((x * 7919 + y * 104_729) as u64);
            Rgb([v as u8, (v >> 8) as u8, (v >> 16) as u8])
        });
        let (game, gaze) = split_panes(&canvas, &layout).unwrap();
        let mut rebuilt = RgbImage::new(w, 2 * h);
        image::imageops::replace(&mut rebuilt, &game, 0, 0);
        image::imageops::replace(&mut rebuilt, &gaze, 0, h as i64);
        prop_assert_eq!(rebuilt, canvas);
    }

    #[test]
    fn detection_is_translation_equivariant(
        cx in 15u32..95, cy in 15u32..60, dx in -8i32..8, dy in -8i32..8, r in 2u32..7,
    ) {
        let spec = MarkerSpec::default();
        let mut a = RgbImage::new(120, 80);
        draw_disk(&mut a, cx, cy, r);
        let (sx, sy) = ((cx as i32 + dx) as u32, (cy as i32 + dy) as u32);
        let mut b = RgbImage::new(120, 80);
        draw_disk(&mut b, sx, sy, r);
        let pa = detect_marker(&a, &spec).unwrap();
        let pb = detect_marker(&b, &spec).unwrap();
        prop_assert_eq!(pa, PixelPos::new(cx, cy));
        prop_assert!((pb.x as i64 - (pa.x as i64 + dx as i64)).abs() <= 1);
        prop_assert!((pb.y as i64 - (pa.y as i64 + dy as i64)).abs() <= 1);
        prop_assert_eq!(detect_marker(&b, &spec), Some(pb));
    }

    #[test]
    fn translation_moves_the_mean_only(pts in points(2..80), dx in 0u32..100, dy in 0u32..100) {
        let base = trace_of(&pts, 1000, 600);
        prop_assume!(base.n_valid() >= 2);
        let moved: Vec<_> = pts.iter().map(|p| p.map(|(x, y)| (x + dx, y + dy))).collect();
        let moved = trace_of(&moved, 1000, 600);
        let (sx, sy) = gaze_sd(&base).unwrap();
        let (mx, my) = gaze_sd(&moved).unwrap();
        prop_assert!((sx - mx).abs() <= 1e-9 * sx.max(1.0) && (sy - my).abs() <= 1e-9 * sy.max(1.0));
        let (m0, m1) = (mean_gaze(&base).unwrap(), mean_gaze(&moved).unwrap());
        prop_assert!((m1.x - m0.x - dx as f64).abs() < 1e-9 && (m1.y - m0.y - dy as f64).abs() < 1e-9);
    }

    #[test]
    fn scaling_scales_dispersion_and_distance(pts in points(2..60), k in 1u32..4) {
        let base = trace_of(&pts, 900, 500);
        prop_assume!(base.n_valid() >= 2);
        let scaled: Vec<_> = pts.iter().map(|p| p.map(|(x, y)| (x * k, y * k))).collect();
        let scaled = trace_of(&scaled, 900 * k, 500 * k);
        let kf = k as f64;
        let ((sx, sy), (tx, ty)) = (gaze_sd(&base).unwrap(), gaze_sd(&scaled).unwrap());
        prop_assert!((tx - kf * sx).abs() <= 1e-9 * tx.max(1.0));
        prop_assert!((ty - kf * sy).abs() <= 1e-9 * ty.max(1.0));
        let (d0, d1) = (dist_from_center(&base).unwrap(), dist_from_center(&scaled).unwrap());
        prop_assert!((d1 - kf * d0).abs() <= 1e-9 * d1.max(1.0));
    }

    #[test]
    fn invalid_samples_never_matter(pts in points(3..60)) {
        let with = trace_of(&pts, 1000, 600);
        prop_assume!(with.n_valid() >= 2);
        let only: Vec<_> = pts.iter().filter(|p| p.is_some()).copied().collect();
        let without = trace_of(&only, 1000, 600);
        prop_assert_eq!(gaze_sd(&with).unwrap(), gaze_sd(&without).unwrap());
        prop_assert_eq!(dist_from_center(&with).unwrap(), dist_from_center(&without).unwrap());
    }

    #[test]
    fn classify_is_total_and_annotation_keeps_samples(pts in prop::collection::vec(prop::option::of((0u32..1920, 0u32..1080)), 0..100)) {
        let layout = RoiLayout::valorant_default();
        let labels = layout.labels();
        let trace = trace_of(&pts, 1920, 1080);
        let annotated = annotate_trace(trace.clone(), &layout).unwrap();
        prop_assert_eq!(annotated.len(), trace.len());
        for (a, b) in annotated.samples().iter().zip(trace.samples()) {
            prop_assert_eq!(a.pos, b.pos);
            prop_assert_eq!(a.roi.is_some(), a.is_valid());
            if let Some(l) = &a.roi {
                prop_assert!(labels.contains(&l.as_str()));
            }
        }
    }

    #[test]
    fn output_csv_round_trips(pts in prop::collection::vec(prop::option::of((0u32..1920, 0u32..1080)), 0..100)) {
        let layout = RoiLayout::valorant_default();
        let trace = annotate_trace(trace_of(&pts, 1920, 1080), &layout).unwrap();
        let mut first = Vec::new();
        write_output_csv_to(&trace, &mut first).unwrap();
        let back = read_output_csv_from(first.as_slice(), "mem", 1920, 1080).unwrap();
        prop_assert_eq!(back.samples(), trace.samples());
        let mut second = Vec::new();
        write_output_csv_to(&back, &mut second).unwrap();
        prop_assert_eq!(first, second);
    }

    #[test]
    fn kda_is_monotone(k in 0u32..500, d in 1u32..500, a in 0u32..500) {
        prop_assert!(kda(k + 1, d, a) >= kda(k, d, a));
        prop_assert!(kda(k, d, a + 1) >= kda(k, d, a));
        prop_assert!(kda(k, d + 1, a) <= kda(k, d, a));
        prop_assert!(kda(k, d, a) >= 0.0);
    }
}
