//! Minimal standalone SVG line plots: first column on x, every other column
//! as a polyline.

use std::fmt::Write;

use chebsig_core::io::Table;

use crate::report::Scale;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const MARGIN: f64 = 48.0;
const COLORS: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

fn extent(values: impl Iterator<Item = f64>) -> Option<(f64, f64)> {
    let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
    if !lo.is_finite() {
        return None;
    }
    Some(if hi > lo { (lo, hi) } else { (lo - 0.5, hi + 0.5) })
}

fn transform(v: f64, scale: Scale) -> Option<f64> {
    match scale {
        Scale::Linear => Some(v),
        Scale::Log => (v != 0.0).then(|| v.abs().log10()),
    }
}

pub fn line_plot(title: &str, table: &Table, y_scale: Scale) -> String {
    let cols = table.columns();
    let xs = &cols[0];
    let ys: Vec<Vec<Option<f64>>> =
        cols[1..].iter().map(|c| c.iter().map(|&v| transform(v, y_scale)).collect()).collect();
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        out,
        r#"<text x="{}" y="20" text-anchor="middle" font-family="sans-serif" font-size="14">{}</text>"#,
        WIDTH / 2.0,
        title
    );
    let xr = extent(xs.iter().copied());
    let yr = extent(ys.iter().flatten().flatten().copied());
    if let (Some((x0, x1)), Some((y0, y1))) = (xr, yr) {
        let px = |x: f64| MARGIN + (x - x0) / (x1 - x0) * (WIDTH - 2.0 * MARGIN);
        let py = |y: f64| HEIGHT - MARGIN - (y - y0) / (y1 - y0) * (HEIGHT - 2.0 * MARGIN);
        let _ = writeln!(
            out,
            r#"<rect x="{MARGIN}" y="{MARGIN}" width="{}" height="{}" fill="none" stroke="gray"/>"#,
            WIDTH - 2.0 * MARGIN,
            HEIGHT - 2.0 * MARGIN
        );
        for (label, x, y, anchor) in [
            (format!("{x0:.3}"), MARGIN, HEIGHT - MARGIN + 16.0, "start"),
            (format!("{x1:.3}"), WIDTH - MARGIN, HEIGHT - MARGIN + 16.0, "end"),
            (format!("{y0:.3}"), MARGIN - 4.0, HEIGHT - MARGIN, "end"),
            (format!("{y1:.3}"), MARGIN - 4.0, MARGIN + 10.0, "end"),
        ] {
            let _ = writeln!(
                out,
                r#"<text x="{x}" y="{y}" text-anchor="{anchor}" font-family="sans-serif" font-size="10">{label}</text>"#
            );
        }
        for (i, col) in ys.iter().enumerate() {
            let pts: Vec<String> = xs
                .iter()
                .zip(col)
                .filter_map(|(&x, y)| y.map(|y| format!("{:.2},{:.2}", px(x), py(y))))
                .collect();
            let color = COLORS[i % COLORS.len()];
            let _ = writeln!(
                out,
                r#"<polyline fill="none" stroke="{color}" stroke-width="1.2" points="{}"/>"#,
                pts.join(" ")
            );
            let _ = writeln!(
                out,
                r#"<text x="{}" y="{}" font-family="sans-serif" font-size="11" fill="{color}">{}</text>"#,
                WIDTH - MARGIN + 4.0,
                MARGIN + 14.0 * (i as f64 + 1.0),
                table.headers()[i + 1]
            );
        }
    }
    out.push_str("</svg>\n");
    out
}
