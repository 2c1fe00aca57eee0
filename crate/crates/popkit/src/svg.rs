//! SVG rendering of polygons, optionally several side by side.
//!
//! Coordinates are converted to decimals for display only. Labels are
//! 1-based (`p1` is vertex 0) so renders read like the usual figures.

use std::fmt::Write as _;

use popkit_core::Polygon;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SvgOptions {
    pub show_axes: bool,
    pub label_vertices: bool,
    /// Width and height of each panel in pixels.
    pub canvas_size: u32,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions { show_axes: true, label_vertices: true, canvas_size: 400 }
    }
}

/// `value` with six significant digits, trailing zeros trimmed.
pub fn format_decimal(value: f64) -> String {
    if value == 0.0 || !value.is_finite() {
        return "0".into();
    }
    let magnitude = value.abs().log10().floor() as i32;
    let decimals = (5 - magnitude).max(0) as usize;
    let mut s = format!("{value:.decimals$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

struct Frame {
    min_x: f64,
    max_y: f64,
    scale: f64,
    offset_x: f64,
    offset_y: f64,
}

impl Frame {
    /// Fit all polygons into a square panel, leaving 10% of the panel as
    /// margin on each side.
    fn fit(polygons: &[&Polygon], size: f64) -> Frame {
        let pts = polygons
            .iter()
            .flat_map(|p| p.vertices())
            .map(|v| (v.x.to_f64(), v.y.to_f64()));
        let (mut min_x, mut max_x, mut min_y, mut max_y) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
        for (x, y) in pts {
            min_x = min_x.min(x);
            max_x = max_x.max(x);
            min_y = min_y.min(y);
            max_y = max_y.max(y);
        }
        let extent = (max_x - min_x).max(max_y - min_y).max(f64::MIN_POSITIVE);
        let scale = 0.8 * size / extent;
        // centre the shorter dimension inside the 10% margin
        let offset_x = 0.1 * size + (extent - (max_x - min_x)) / 2.0 * scale;
        let offset_y = 0.1 * size + (extent - (max_y - min_y)) / 2.0 * scale;
        Frame { min_x, max_y, scale, offset_x, offset_y }
    }

    fn map(&self, x: f64, y: f64) -> (f64, f64) {
        (self.offset_x + (x - self.min_x) * self.scale, self.offset_y + (self.max_y - y) * self.scale)
    }

    fn fmt(&self, x: f64, y: f64) -> String {
        let (sx, sy) = self.map(x, y);
        format!("{},{}", format_decimal(sx), format_decimal(sy))
    }
}

fn panel(out: &mut String, polygon: &Polygon, frame: &Frame, options: &SvgOptions, dx: u32, caption: Option<&str>) {
    let size = options.canvas_size as f64;
    let _ = writeln!(out, r#"  <g transform="translate({dx},0)">"#);
    if options.show_axes {
        let (ox, oy) = frame.map(0.0, 0.0);
        if (0.0..=size).contains(&oy) {
            let _ = writeln!(
                out,
                r##"    <line class="axis" x1="0" y1="{y}" x2="{s}" y2="{y}" stroke="#999" stroke-width="1"/>"##,
                y = format_decimal(oy),
                s = format_decimal(size)
            );
        }
        if (0.0..=size).contains(&ox) {
            let _ = writeln!(
                out,
                r##"    <line class="axis" x1="{x}" y1="0" x2="{x}" y2="{s}" stroke="#999" stroke-width="1"/>"##,
                x = format_decimal(ox),
                s = format_decimal(size)
            );
        }
    }
    let mut d = String::new();
    for (i, v) in polygon.vertices().iter().enumerate() {
        let _ = write!(d, "{}{} ", if i == 0 { "M" } else { "L" }, frame.fmt(v.x.to_f64(), v.y.to_f64()));
    }
    d.push('Z');
    let _ = writeln!(
        out,
        r##"    <path class="polygon" d="{d}" fill="#cde" fill-opacity="0.5" stroke="#135" stroke-width="2" stroke-linejoin="round"/>"##
    );
    for (i, v) in polygon.vertices().iter().enumerate() {
        let (sx, sy) = frame.map(v.x.to_f64(), v.y.to_f64());
        let _ = writeln!(
            out,
            r##"    <circle class="vertex" cx="{}" cy="{}" r="3" fill="#135"/>"##,
            format_decimal(sx),
            format_decimal(sy)
        );
        if options.label_vertices {
            let _ = writeln!(
                out,
                r#"    <text class="label" x="{}" y="{}" font-family="sans-serif" font-size="12">p{}</text>"#,
                format_decimal(sx + 5.0),
                format_decimal(sy - 5.0),
                i + 1
            );
        }
    }
    if let Some(caption) = caption {
        let _ = writeln!(
            out,
            r#"    <text class="caption" x="{}" y="{}" font-family="sans-serif" font-size="12" text-anchor="middle">{}</text>"#,
            format_decimal(size / 2.0),
            format_decimal(size - 4.0),
            escape(caption)
        );
    }
    out.push_str("  </g>\n");
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

fn document(width: u32, height: u32, body: &str) -> String {
    format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n\
         {body}</svg>\n"
    )
}

pub fn render_svg(polygon: &Polygon, options: &SvgOptions) -> String {
    let frame = Frame::fit(&[polygon], options.canvas_size as f64);
    let mut body = String::new();
    panel(&mut body, polygon, &frame, options, 0, None);
    document(options.canvas_size, options.canvas_size, &body)
}

/// Panels left to right sharing one scale, e.g. a pop sequence.
pub fn render_strip(polygons: &[Polygon], captions: &[String], options: &SvgOptions) -> String {
    let refs: Vec<&Polygon> = polygons.iter().collect();
    let frame = Frame::fit(&refs, options.canvas_size as f64);
    let mut body = String::new();
    for (i, p) in polygons.iter().enumerate() {
        let caption = captions.get(i).map(String::as_str);
        panel(&mut body, p, &frame, options, i as u32 * options.canvas_size, caption);
    }
    document(options.canvas_size * polygons.len().max(1) as u32, options.canvas_size, &body)
}
