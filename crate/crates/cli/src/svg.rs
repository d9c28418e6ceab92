//! Scatter plot with an OLS line, as a standalone SVG document.

use std::fmt::Write;

use gazekit::stats::LinearFit;

const W: f64 = 640.0;
const H: f64 = 480.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 20.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 60.0;
const COLORS: [&str; 4] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd"];

pub struct Scatter<'a> {
    pub x_label: &'a str,
    pub y_label: &'a str,
    /// (group, x, y)
    pub points: &'a [(String, f64, f64)],
    pub fit: Option<LinearFit>,
    pub r: Option<f64>,
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

fn range(vals: impl Iterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = vals.fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), v| (a.min(v), b.max(v)));
    if !lo.is_finite() {
        return (0.0, 1.0);
    }
    let pad = if hi > lo { (hi - lo) * 0.05 } else { lo.abs().max(1.0) * 0.5 };
    (lo - pad, hi + pad)
}

pub fn render(plot: &Scatter<'_>) -> String {
    let (x0, x1) = range(plot.points.iter().map(|p| p.1));
    let (y0, y1) = range(plot.points.iter().map(|p| p.2));
    let sx = |x: f64| LEFT + (x - x0) / (x1 - x0) * (W - LEFT - RIGHT);
    let sy = |y: f64| H - BOTTOM - (y - y0) / (y1 - y0) * (H - TOP - BOTTOM);

    let mut title = format!("{} vs {}", plot.y_label, plot.x_label);
    if let Some(fit) = plot.fit {
        let _ = write!(title, ": slope={:.6} intercept={:.6}", fit.slope, fit.intercept);
    }
    if let Some(r) = plot.r {
        let _ = write!(title, " r={r:.4}");
    }

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(s, "<title>{}</title>", escape(&title));
    if let Some(fit) = plot.fit {
        let _ = writeln!(
            s,
            r#"<metadata><regression method="ols" slope="{}" intercept="{}"/></metadata>"#,
            fit.slope, fit.intercept
        );
    }
    let _ = writeln!(s, r#"<rect x="0" y="0" width="{W}" height="{H}" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<path d="M{LEFT} {TOP} V{:.2} H{:.2}" fill="none" stroke="black"/>"#,
        H - BOTTOM,
        W - RIGHT
    );
    for (v, anchor_x, anchor) in [(x0, LEFT, "start"), (x1, W - RIGHT, "end")] {
        let _ = writeln!(
            s,
            r#"<text x="{anchor_x:.2}" y="{:.2}" text-anchor="{anchor}">{:.4}</text>"#,
            H - BOTTOM + 16.0,
            v
        );
    }
    for (v, y) in [(y0, H - BOTTOM), (y1, TOP + 10.0)] {
        let _ = writeln!(s, r#"<text x="{:.2}" y="{y:.2}" text-anchor="end">{v:.4}</text>"#, LEFT - 6.0);
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
        (LEFT + W - RIGHT) / 2.0,
        H - 16.0,
        escape(plot.x_label)
    );
    let _ = writeln!(
        s,
        r#"<text x="16" y="{:.2}" text-anchor="middle" transform="rotate(-90 16 {:.2})">{}</text>"#,
        (TOP + H - BOTTOM) / 2.0,
        (TOP + H - BOTTOM) / 2.0,
        escape(plot.y_label)
    );
    let _ = writeln!(s, r#"<text x="{LEFT}" y="24">{}</text>"#, escape(&title));

    let mut groups: Vec<&str> = plot.points.iter().map(|p| p.0.as_str()).collect();
    groups.sort_unstable();
    groups.dedup();
    for (gi, g) in groups.iter().enumerate() {
        let color = COLORS[gi % COLORS.len()];
        let _ = writeln!(s, r#"<g class="group" data-group="{}" fill="{color}">"#, escape(g));
        for p in plot.points.iter().filter(|p| p.0 == *g) {
            let _ = writeln!(s, r#"<circle cx="{:.2}" cy="{:.2}" r="4"/>"#, sx(p.1), sy(p.2));
        }
        let _ = writeln!(s, "</g>");
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" fill="{color}" text-anchor="end">{}</text>"#,
            W - RIGHT,
            TOP + 14.0 * gi as f64,
            escape(g)
        );
    }
    if let Some(fit) = plot.fit {
        let _ = writeln!(
            s,
            r#"<clipPath id="plot"><rect x="{LEFT}" y="{TOP}" width="{:.2}" height="{:.2}"/></clipPath>"#,
            W - LEFT - RIGHT,
            H - TOP - BOTTOM
        );
        let _ = writeln!(
            s,
            r#"<line class="regression" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black" stroke-dasharray="6 4" clip-path="url(#plot)"/>"#,
            sx(x0),
            sy(fit.at(x0)),
            sx(x1),
            sy(fit.at(x1))
        );
    }
    s.push_str("</svg>\n");
    s
}
