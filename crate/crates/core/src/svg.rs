//! SVG rendering of the three candidate solutions side by side.
//!
//! One length unit is one user unit. The y axis is flipped so the picture
//! matches the usual mathematical orientation.

use crate::dubins::sample_path;
use crate::error::Result;
use crate::instance::Instance;
use crate::sequence::CandidateSolution;
use std::fmt::Write;

const COLORS: [&str; 3] = ["#1f77b4", "#d62728", "#2ca02c"];

struct Bbox {
    min_x: f64,
    min_y: f64,
    max_x: f64,
    max_y: f64,
}

impl Bbox {
    fn new() -> Self {
        Self {
            min_x: f64::INFINITY,
            min_y: f64::INFINITY,
            max_x: f64::NEG_INFINITY,
            max_y: f64::NEG_INFINITY,
        }
    }

    fn add(&mut self, x: f64, y: f64) {
        self.min_x = self.min_x.min(x);
        self.min_y = self.min_y.min(y);
        self.max_x = self.max_x.max(x);
        self.max_y = self.max_y.max(y);
    }
}

/// Renders `candidates` (normally F1, F2, F3) as `<g>` groups placed left to
/// right, each with its path, the waypoints and a label.
pub fn render_candidates(instance: &Instance, candidates: &[CandidateSolution]) -> Result<String> {
    let rho = instance.rho();
    let step = rho / 8.0;
    let polylines = candidates
        .iter()
        .map(|c| sample_path(&c.path, step))
        .collect::<Result<Vec<_>>>()?;

    // work in flipped coordinates (y down)
    let mut bb = Bbox::new();
    for p in instance.points() {
        bb.add(p.x, -p.y);
    }
    for p in polylines.iter().flatten() {
        bb.add(p.x, -p.y);
    }
    let margin = 2.0 * rho;
    let width = bb.max_x - bb.min_x + 2.0 * margin;
    let height = bb.max_y - bb.min_y + 2.0 * margin;
    let label_band = 1.5 * rho;
    let dot = rho / 8.0;
    let font = rho * 0.6;
    let stroke = rho / 25.0;

    let mut out = String::new();
    let total_w = width * candidates.len().max(1) as f64;
    let total_h = height + label_band;
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {} {}" width="{}" height="{}">"#,
        num(total_w),
        num(total_h),
        num(total_w),
        num(total_h)
    )
    .unwrap();
    for (k, (cand, line)) in candidates.iter().zip(&polylines).enumerate() {
        let dx = k as f64 * width - bb.min_x + margin;
        let dy = label_band - bb.min_y + margin;
        let color = COLORS[k % COLORS.len()];
        writeln!(
            out,
            r#"  <g id="{label}" data-label="{label}" transform="translate({} {})">"#,
            num(dx),
            num(dy),
            label = cand.label
        )
        .unwrap();
        writeln!(
            out,
            r#"    <text x="{}" y="{}" font-size="{}" font-family="sans-serif">{} cost {:.3}</text>"#,
            num(bb.min_x),
            num(bb.min_y - margin - 0.5 * label_band),
            num(font),
            cand.label,
            cand.cost
        )
        .unwrap();
        let pts: Vec<String> = line.iter().map(|p| format!("{},{}", num(p.x), num(-p.y))).collect();
        writeln!(
            out,
            r#"    <polyline fill="none" stroke="{color}" stroke-width="{}" points="{}"/>"#,
            num(stroke),
            pts.join(" ")
        )
        .unwrap();
        for (i, p) in instance.points().iter().enumerate() {
            writeln!(
                out,
                r#"    <circle cx="{}" cy="{}" r="{}" fill="black"/>"#,
                num(p.x),
                num(-p.y),
                num(dot)
            )
            .unwrap();
            writeln!(
                out,
                r#"    <text x="{}" y="{}" font-size="{}" font-family="sans-serif">{}</text>"#,
                num(p.x + 1.5 * dot),
                num(-p.y - 1.5 * dot),
                num(0.7 * font),
                i + 1
            )
            .unwrap();
        }
        out.push_str("  </g>\n");
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn num(v: f64) -> String {
    let s = format!("{v:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.to_string()
    }
}
