//! Clock diagrams as ASCII text or SVG.
//!
//! Position 0 sits at twelve o'clock and positions increase clockwise at
//! 30° intervals.

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::fmt::Write as _;

use kinesphere::{coset_family, ClockPosition, Scale, TraceForm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Ascii,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum Show {
    Labels,
    Cosets,
    Diameters,
    Path,
}

#[derive(Debug, Clone)]
pub struct RenderSpec {
    pub format: Format,
    pub show: BTreeSet<Show>,
    /// Which coset family to draw: 4 for triangles, 3 for quadrangles, 6 for diameters.
    pub coset_step: usize,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            format: Format::Ascii,
            show: [Show::Labels, Show::Path].into_iter().collect(),
            coset_step: 4,
        }
    }
}

pub fn coset_family_name(step: usize) -> &'static str {
    match step {
        4 => "triangles",
        3 => "quadrangles",
        6 => "diameters",
        2 => "hexagons",
        1 => "whole clock",
        _ => "points",
    }
}

fn angle(p: ClockPosition) -> f64 {
    p.value() as f64 * PI / 6.0
}

fn label(scale: &Scale, p: ClockPosition) -> String {
    format!("{}:{}", p, scale.direction_at(p).token())
}

fn tokens(scale: &Scale, positions: impl IntoIterator<Item = ClockPosition>) -> String {
    positions
        .into_iter()
        .map(|p| scale.direction_at(p).token())
        .collect::<Vec<_>>()
        .join(" ")
}

fn numbers(positions: impl IntoIterator<Item = ClockPosition>) -> String {
    positions
        .into_iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

const WIDTH: usize = 64;
const HEIGHT: usize = 21;

/// A 12-spoke text clock followed by a legend. No line exceeds 80 columns.
pub fn render_ascii(scale: &Scale, forms: &[TraceForm], spec: &RenderSpec) -> String {
    let on_path: BTreeSet<ClockPosition> = if spec.show.contains(&Show::Path) {
        forms.iter().flat_map(|f| f.path().iter().copied()).collect()
    } else {
        BTreeSet::new()
    };

    let mut grid = vec![vec![' '; WIDTH]; HEIGHT];
    let (cx, cy) = (WIDTH as f64 / 2.0, HEIGHT as f64 / 2.0 - 0.5);
    let (rx, ry) = (24.0, 9.0);

    // Spokes.
    for p in ClockPosition::all() {
        let a = angle(p);
        for step in 2..8 {
            let t = step as f64 / 10.0;
            let x = (cx + rx * t * a.sin()).round() as usize;
            let y = (cy - ry * t * a.cos()).round() as usize;
            if grid[y][x] == ' ' {
                grid[y][x] = '.';
            }
        }
    }
    grid[cy.round() as usize][cx.round() as usize] = '+';

    for p in ClockPosition::all() {
        let mut text = if spec.show.contains(&Show::Labels) {
            label(scale, p)
        } else {
            p.to_string()
        };
        if on_path.contains(&p) {
            text = format!("[{text}]");
        }
        let a = angle(p);
        let x = cx + rx * a.sin();
        let y = (cy - ry * a.cos()).round() as usize;
        let len = text.chars().count();
        let start = (x - len as f64 / 2.0).round().clamp(0.0, (WIDTH - len) as f64) as usize;
        for (i, c) in text.chars().enumerate() {
            grid[y][start + i] = c;
        }
    }

    let mut out = format!("scale {}\n", scale.name());
    for row in grid {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    if spec.show.contains(&Show::Path) {
        for form in forms {
            let _ = writeln!(
                out,
                "path {}: {} = {}",
                form.name(),
                numbers(form.path().iter().copied()),
                tokens(scale, form.path().iter().copied())
            );
        }
    }
    if spec.show.contains(&Show::Cosets) {
        if let Ok(family) = coset_family(spec.coset_step) {
            let _ = writeln!(
                out,
                "{} ({}Z12):",
                coset_family_name(spec.coset_step),
                spec.coset_step
            );
            for coset in family {
                let _ = writeln!(
                    out,
                    "  {{{}}} {}",
                    numbers(coset.iter().copied()),
                    tokens(scale, coset)
                );
            }
        }
    }
    if spec.show.contains(&Show::Diameters) {
        let _ = writeln!(out, "diameters (6Z12):");
        for coset in coset_family(6).expect("6 divides 12") {
            let _ = writeln!(
                out,
                "  {{{}}} {}",
                numbers(coset.iter().copied()),
                tokens(scale, coset)
            );
        }
    }
    out
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

const PATH_COLORS: [&str; 4] = ["#c0392b", "#2471a3", "#1e8449", "#7d3c98"];

fn point(p: ClockPosition, radius: f64) -> (f64, f64) {
    let a = angle(p);
    (radius * a.sin(), -radius * a.cos())
}

/// SVG with exactly twelve `clock-node` circles.
pub fn render_svg(scale: &Scale, forms: &[TraceForm], spec: &RenderSpec) -> String {
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.6 -1.6 3.2 3.2\" width=\"480\" height=\"480\">\n",
    );
    let _ = writeln!(out, "  <title>scale {}</title>", escape(scale.name()));
    out.push_str("  <circle class=\"rim\" cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#bbb\" stroke-width=\"0.01\"/>\n");

    if spec.show.contains(&Show::Diameters) {
        out.push_str("  <g class=\"diameters\">\n");
        for p in (0..6).map(|v| ClockPosition::new(v).expect("in range")) {
            let (x1, y1) = point(p, 1.0);
            let (x2, y2) = point(p.shifted(6), 1.0);
            let _ = writeln!(
                out,
                "    <line class=\"diameter\" x1=\"{x1:.4}\" y1=\"{y1:.4}\" x2=\"{x2:.4}\" y2=\"{y2:.4}\" stroke=\"#999\" stroke-width=\"0.01\"/>"
            );
        }
        out.push_str("  </g>\n");
    }

    if spec.show.contains(&Show::Cosets) {
        if let Ok(family) = coset_family(spec.coset_step) {
            let _ = writeln!(out, "  <g class=\"cosets\" data-step=\"{}\">", spec.coset_step);
            for coset in family {
                let points: Vec<String> = coset
                    .iter()
                    .map(|&p| {
                        let (x, y) = point(p, 1.0);
                        format!("{x:.4},{y:.4}")
                    })
                    .collect();
                let _ = writeln!(
                    out,
                    "    <polygon class=\"coset\" points=\"{}\" fill=\"none\" stroke=\"#888\" stroke-width=\"0.012\"/>",
                    points.join(" ")
                );
            }
            out.push_str("  </g>\n");
        }
    }

    if spec.show.contains(&Show::Path) {
        for (i, form) in forms.iter().enumerate() {
            let points: Vec<String> = form
                .path()
                .iter()
                .map(|&p| {
                    let (x, y) = point(p, 1.0);
                    format!("{x:.4},{y:.4}")
                })
                .collect();
            let _ = writeln!(
                out,
                "  <polyline class=\"path\" data-name=\"{}\" points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"0.02\"/>",
                escape(form.name()),
                points.join(" "),
                PATH_COLORS[i % PATH_COLORS.len()]
            );
        }
    }

    out.push_str("  <g class=\"nodes\">\n");
    for p in ClockPosition::all() {
        let (x, y) = point(p, 1.0);
        let _ = writeln!(
            out,
            "    <circle class=\"clock-node\" data-position=\"{p}\" cx=\"{x:.4}\" cy=\"{y:.4}\" r=\"0.06\" fill=\"#fff\" stroke=\"#333\" stroke-width=\"0.01\"/>"
        );
    }
    out.push_str("  </g>\n");

    if spec.show.contains(&Show::Labels) {
        out.push_str(
            "  <g class=\"labels\" font-family=\"monospace\" font-size=\"0.11\" text-anchor=\"middle\">\n",
        );
        for p in ClockPosition::all() {
            let (x, y) = point(p, 1.25);
            let _ = writeln!(
                out,
                "    <text class=\"label\" x=\"{x:.4}\" y=\"{:.4}\">{}</text>",
                y + 0.04,
                escape(&label(scale, p))
            );
        }
        out.push_str("  </g>\n");
    }
    out.push_str("</svg>\n");
    out
}

pub fn render(scale: &Scale, forms: &[TraceForm], spec: &RenderSpec) -> String {
    match spec.format {
        Format::Ascii => render_ascii(scale, forms, spec),
        Format::Svg => render_svg(scale, forms, spec),
    }
}
