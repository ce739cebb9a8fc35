//! Deterministic SVG rendering: charts as labeled planar graphs with
//! typed vertex glyphs, movies as strips of slice diagrams (strands,
//! crossings and hooks per letter).
//!
//! Identical input and spec produce identical bytes; all coordinates
//! are formatted with fixed precision.

use std::fmt::Write as _;

use thiserror::Error;

use crate::chart_movie::{ChartMovie, EventKind, MovieError};
use crate::converters::{ChartGraph, ConvertError, EdgeLabel};
use crate::word_algebra::{LetterKind, Sign, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderTarget {
    Chart,
    MovieStrip,
}

/// Page geometry and styling.
#[derive(Clone, Debug)]
pub struct RenderSpec {
    pub target: RenderTarget,
    pub scale: f64,
    pub margin: f64,
    pub stroke_width: f64,
    pub font_size: f64,
    pub show_labels: bool,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            target: RenderTarget::Chart,
            scale: 320.0,
            margin: 24.0,
            stroke_width: 1.5,
            font_size: 11.0,
            show_labels: true,
        }
    }
}

#[derive(Debug, Error)]
pub enum RenderError {
    #[error(transparent)]
    Movie(#[from] MovieError),
    #[error(transparent)]
    Chart(#[from] ConvertError),
}

pub enum RenderInput<'a> {
    Chart(&'a ChartGraph),
    Movie(&'a ChartMovie),
}

/// Render a chart or a movie strip to one SVG document.
pub fn render_svg(input: RenderInput<'_>, spec: &RenderSpec) -> Result<String, RenderError> {
    match input {
        RenderInput::Chart(g) => render_chart(g, spec),
        RenderInput::Movie(m) => render_strip(m, spec),
    }
}

fn n2(v: f64) -> String {
    format!("{v:.2}")
}

struct Svg {
    body: String,
    width: f64,
    height: f64,
}

impl Svg {
    fn new(width: f64, height: f64) -> Svg {
        Svg {
            body: String::new(),
            width,
            height,
        }
    }

    fn line(&mut self, class: &str, x1: f64, y1: f64, x2: f64, y2: f64, w: f64) {
        let _ = writeln!(
            self.body,
            r#"<line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}" stroke-width="{}"/>"#,
            n2(x1),
            n2(y1),
            n2(x2),
            n2(y2),
            n2(w)
        );
    }

    fn polyline(&mut self, class: &str, pts: &[(f64, f64)], w: f64, color: &str) {
        let d: Vec<String> = pts
            .iter()
            .map(|(x, y)| format!("{},{}", n2(*x), n2(*y)))
            .collect();
        let _ = writeln!(
            self.body,
            r#"<polyline class="{class}" points="{}" fill="none" stroke="{color}" stroke-width="{}"/>"#,
            d.join(" "),
            n2(w)
        );
    }

    fn circle(&mut self, class: &str, x: f64, y: f64, r: f64, fill: &str) {
        let _ = writeln!(
            self.body,
            r#"<circle class="{class}" cx="{}" cy="{}" r="{}" fill="{fill}" stroke="black"/>"#,
            n2(x),
            n2(y),
            n2(r)
        );
    }

    fn rect(&mut self, class: &str, x: f64, y: f64, s: f64) {
        let _ = writeln!(
            self.body,
            r#"<rect class="{class}" x="{}" y="{}" width="{}" height="{}" fill="white" stroke="black"/>"#,
            n2(x - s / 2.0),
            n2(y - s / 2.0),
            n2(s),
            n2(s)
        );
    }

    fn xmark(&mut self, class: &str, x: f64, y: f64, r: f64) {
        let _ = writeln!(
            self.body,
            r#"<g class="{class}"><line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black"/><line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black"/></g>"#,
            n2(x - r),
            n2(y - r),
            n2(x + r),
            n2(y + r),
            n2(x - r),
            n2(y + r),
            n2(x + r),
            n2(y - r)
        );
    }

    fn text(&mut self, class: &str, x: f64, y: f64, size: f64, content: &str) {
        let _ = writeln!(
            self.body,
            r#"<text class="{class}" x="{}" y="{}" font-size="{}" font-family="monospace">{content}</text>"#,
            n2(x),
            n2(y),
            n2(size)
        );
    }

    fn finish(self) -> String {
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {} {}\" width=\"{}\" height=\"{}\">\n{}</svg>\n",
            n2(self.width),
            n2(self.height),
            n2(self.width),
            n2(self.height),
            self.body
        )
    }
}

fn glyph_class(kind: &EventKind) -> &'static str {
    match kind {
        EventKind::BlackG { .. } => "vertex-black",
        EventKind::White { .. } => "vertex-white",
        EventKind::XDot { .. }
        | EventKind::Saddle { .. }
        | EventKind::XTri { .. }
        | EventKind::XStar { .. } => "vertex-xmark",
        EventKind::Square8 { .. }
        | EventKind::Square5 { .. }
        | EventKind::Branch { .. }
        | EventKind::Square6 { .. }
        | EventKind::SquareStar { .. } => "vertex-square",
        EventKind::Crossing { .. } => "vertex-crossing",
        _ => "vertex-other",
    }
}

fn render_chart(graph: &ChartGraph, spec: &RenderSpec) -> Result<String, RenderError> {
    graph.validate()?;
    // coordinate-free charts are laid out by leveling them and drawing
    // the generated geometry
    if !graph.has_geometry() {
        let movie = crate::converters::chart_graph_to_movie(graph)?;
        let laid_out = crate::converters::movie_to_chart_graph(&movie)?;
        return render_chart(&laid_out, spec);
    }
    let s = spec.scale;
    let m = spec.margin;
    let page = s + 2.0 * m;
    // chart time runs upward; svg y runs downward
    let tx = |x: f64| m + x * s;
    let ty = |y: f64| m + (1.0 - y) * s;
    let mut svg = Svg::new(page, page);

    svg.line("frame", m, m, m + s, m, 0.5);
    svg.line("frame", m, m + s, m + s, m + s, 0.5);

    for e in &graph.edges {
        if e.path.len() < 2 {
            continue;
        }
        let pts: Vec<(f64, f64)> = e.path.iter().map(|(x, y)| (tx(*x), ty(*y))).collect();
        let (class, color) = match e.label {
            EdgeLabel::Crossing(_) => ("edge edge-g", "black"),
            EdgeLabel::Hook(_) => ("edge edge-e", "#777777"),
        };
        svg.polyline(class, &pts, spec.stroke_width, color);

        // orientation arrowhead at the middle of a crossing edge
        if let (EdgeLabel::Crossing(_), Some(forward)) = (e.label, e.forward) {
            let mid = pts.len() / 2;
            let (a, b) = if mid == 0 {
                (pts[0], pts[1])
            } else {
                (pts[mid - 1], pts[mid])
            };
            let (mut dx, mut dy) = (b.0 - a.0, b.1 - a.1);
            if !forward {
                dx = -dx;
                dy = -dy;
            }
            let len = (dx * dx + dy * dy).sqrt().max(1e-9);
            let (ux, uy) = (dx / len, dy / len);
            let (cx, cy) = ((a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0);
            let r = 4.0;
            let tip = (cx + ux * r, cy + uy * r);
            let left = (
                cx - ux * r * 0.6 - uy * r * 0.6,
                cy - uy * r * 0.6 + ux * r * 0.6,
            );
            let right = (
                cx - ux * r * 0.6 + uy * r * 0.6,
                cy - uy * r * 0.6 - ux * r * 0.6,
            );
            let _ = writeln!(
                svg.body,
                r#"<path class="arrow" d="M {} {} L {} {} L {} {} Z" fill="black"/>"#,
                n2(tip.0),
                n2(tip.1),
                n2(left.0),
                n2(left.1),
                n2(right.0),
                n2(right.1)
            );
        }

        if spec.show_labels {
            let mid = pts[pts.len() / 2];
            svg.text(
                "label label-edge",
                mid.0 + 3.0,
                mid.1 - 3.0,
                spec.font_size,
                &e.label.to_string(),
            );
        }
    }

    for v in &graph.vertices {
        let Some((x, y)) = v.at else { continue };
        let (x, y) = (tx(x), ty(y));
        match glyph_class(&v.kind) {
            "vertex-black" => svg.circle("vertex-black", x, y, 3.0, "black"),
            "vertex-white" => svg.circle("vertex-white", x, y, 3.5, "white"),
            "vertex-xmark" => svg.xmark("vertex-xmark", x, y, 3.5),
            "vertex-square" => svg.rect("vertex-square", x, y, 7.0),
            // a crossing is drawn by its edges alone
            _ => {}
        }
    }

    Ok(svg.finish())
}

/// One slice as a small tangle diagram: strand lines left to right,
/// one crossing or hook glyph per letter.
fn draw_slice(svg: &mut Svg, word: &Word, x0: f64, y0: f64, w: f64, h: f64, stroke: f64) {
    let n = word.degree();
    let strand_y = |k: usize| y0 + h * (k as f64 + 1.0) / (n as f64 + 1.0);
    let cols = word.len().max(1);
    let col_x = |t: usize| x0 + w * t as f64 / cols as f64;

    for (t, letter) in word.letters().iter().enumerate() {
        let (xa, xb) = (col_x(t), col_x(t + 1));
        let i = letter.index; // strands i, i+1 participate (1-based)
        for k in 1..=n {
            if k == i || k == i + 1 {
                continue;
            }
            svg.line("strand", xa, strand_y(k - 1), xb, strand_y(k - 1), stroke);
        }
        let (ya, yb) = (strand_y(i - 1), strand_y(i));
        match letter.kind {
            LetterKind::Crossing(sign) => {
                // the under strand is broken around the crossing point
                let (mid_x, mid_y) = ((xa + xb) / 2.0, (ya + yb) / 2.0);
                let (over, under_a, under_b) = match sign {
                    Sign::Pos => ((xa, ya, xb, yb), (xa, yb), (xb, ya)),
                    Sign::Neg => ((xa, yb, xb, ya), (xa, ya), (xb, yb)),
                };
                svg.line("strand over", over.0, over.1, over.2, over.3, stroke);
                let frac = 0.35;
                svg.line(
                    "strand under",
                    under_a.0,
                    under_a.1,
                    under_a.0 + (mid_x - under_a.0) * (1.0 - frac),
                    under_a.1 + (mid_y - under_a.1) * (1.0 - frac),
                    stroke,
                );
                svg.line(
                    "strand under",
                    under_b.0,
                    under_b.1,
                    under_b.0 + (mid_x - under_b.0) * (1.0 - frac),
                    under_b.1 + (mid_y - under_b.1) * (1.0 - frac),
                    stroke,
                );
            }
            LetterKind::Hook => {
                // two hooks: the left pair of ends joins, then the right
                let bulge = (xb - xa) * 0.3;
                let _ = writeln!(
                    svg.body,
                    r#"<path class="strand hook" d="M {} {} C {} {} {} {} {} {}" fill="none" stroke="black" stroke-width="{}"/>"#,
                    n2(xa),
                    n2(ya),
                    n2(xa + bulge),
                    n2(ya),
                    n2(xa + bulge),
                    n2(yb),
                    n2(xa),
                    n2(yb),
                    n2(stroke)
                );
                let _ = writeln!(
                    svg.body,
                    r#"<path class="strand hook" d="M {} {} C {} {} {} {} {} {}" fill="none" stroke="black" stroke-width="{}"/>"#,
                    n2(xb),
                    n2(ya),
                    n2(xb - bulge),
                    n2(ya),
                    n2(xb - bulge),
                    n2(yb),
                    n2(xb),
                    n2(yb),
                    n2(stroke)
                );
            }
        }
    }
    if word.is_empty() {
        for k in 0..n {
            svg.line("strand", x0, strand_y(k), x0 + w, strand_y(k), stroke);
        }
    }
}

fn render_strip(movie: &ChartMovie, spec: &RenderSpec) -> Result<String, RenderError> {
    movie.validate_ok()?;
    let slices = movie.slices()?;
    let cell_w = spec.scale * 0.45;
    let cell_h = spec.scale * 0.45;
    let gap = spec.margin;
    let count = slices.len();
    let page_w = spec.margin * 2.0 + count as f64 * cell_w + (count - 1) as f64 * gap;
    let page_h = spec.margin * 2.0 + cell_h + spec.font_size * 2.0;
    let mut svg = Svg::new(page_w, page_h);

    for (k, word) in slices.iter().enumerate() {
        let x0 = spec.margin + k as f64 * (cell_w + gap);
        let y0 = spec.margin;
        let _ = writeln!(
            svg.body,
            r##"<rect class="cell" x="{}" y="{}" width="{}" height="{}" fill="none" stroke="#bbbbbb"/>"##,
            n2(x0),
            n2(y0),
            n2(cell_w),
            n2(cell_h)
        );
        draw_slice(&mut svg, word, x0, y0, cell_w, cell_h, spec.stroke_width);
        if spec.show_labels {
            svg.text(
                "label label-slice",
                x0,
                y0 + cell_h + spec.font_size * 1.4,
                spec.font_size,
                &word.to_string(),
            );
        }
        if k + 1 < count {
            let ax = x0 + cell_w + gap * 0.25;
            let ay = y0 + cell_h / 2.0;
            svg.line("arrow", ax, ay, ax + gap * 0.5, ay, spec.stroke_width);
            let _ = writeln!(
                svg.body,
                r#"<path class="arrow" d="M {} {} l -4 -3 l 0 6 Z" fill="black"/>"#,
                n2(ax + gap * 0.5),
                n2(ay)
            );
        }
    }

    Ok(svg.finish())
}
