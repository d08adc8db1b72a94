//! SVG figures: triangles with overlays, the `f_v` curve, and the
//! min-perimeter phase map.
//!
//! Geometry is drawn in a y-up group flipped by an explicit transform;
//! text is placed outside that group so it is not mirrored.

use std::fmt::Write;

use crate::geom::{Point, Triangle};
use crate::sweep::SweepCell;

pub const DEFAULT_SCALE: f64 = 100.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    Input,
    Winner,
    Candidate,
}

#[derive(Debug, Clone)]
struct Item {
    pts: [Point; 3],
    kind: String,
    metric: Option<f64>,
    role: Role,
}

const CANDIDATE_COLORS: [&str; 8] = [
    "#4e79a7", "#f28e2b", "#59a14f", "#b07aa1", "#9c755f", "#76b7b2", "#edc948", "#ff9da7",
];

fn esc(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

#[derive(Debug, Clone)]
pub struct Scene {
    items: Vec<Item>,
    scale: f64,
    title: Option<String>,
}

impl Scene {
    pub fn new(scale: f64) -> Self {
        Self {
            items: Vec::new(),
            scale,
            title: None,
        }
    }

    pub fn title(mut self, t: impl Into<String>) -> Self {
        self.title = Some(t.into());
        self
    }

    pub fn add(&mut self, t: &Triangle, kind: impl Into<String>, metric: Option<f64>, role: Role) {
        self.items.push(Item {
            pts: t.vertices(),
            kind: kind.into(),
            metric,
            role,
        });
    }

    pub fn render(&self) -> String {
        let s = self.scale;
        let all = self.items.iter().flat_map(|i| i.pts);
        let (mut lo, mut hi) = (
            Point::new(f64::INFINITY, f64::INFINITY),
            Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
        );
        for p in all {
            lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        if !lo.is_finite() {
            lo = Point::default();
            hi = Point::new(1.0, 1.0);
        }
        let pad = 20.0;
        let top = if self.title.is_some() { 30.0 } else { 0.0 };
        let legend_h = 18.0 * self.items.len() as f64 + 10.0;
        let w = ((hi.x - lo.x) * s + 2.0 * pad).max(240.0);
        let h = (hi.y - lo.y) * s + 2.0 * pad + top + legend_h;
        let tx = pad - lo.x * s;
        let ty = top + pad + hi.y * s;
        // Pixel position of a model point, for labels.
        let px = |p: Point| (tx + p.x * s, ty - p.y * s);

        let mut out = String::new();
        let _ = writeln!(
            out,
            r##"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.2} {h:.2}">"##
        );
        let _ = writeln!(out, r##"<rect width="100%" height="100%" fill="white"/>"##);
        if let Some(t) = &self.title {
            let _ = writeln!(
                out,
                r##"<text x="{pad}" y="20" font-family="sans-serif" font-size="14">{}</text>"##,
                esc(t)
            );
        }
        let _ = writeln!(
            out,
            r##"<g transform="matrix({s} 0 0 {} {tx:.4} {ty:.4})">"##,
            -s
        );
        let mut color_idx = 0;
        let mut colors = Vec::with_capacity(self.items.len());
        for it in &self.items {
            let (stroke, fill, dash) = match it.role {
                Role::Input => ("#222222", "#dddddd", ""),
                Role::Winner => ("#c0392b", "none", ""),
                Role::Candidate => {
                    let c = CANDIDATE_COLORS[color_idx % CANDIDATE_COLORS.len()];
                    color_idx += 1;
                    (c, "none", r##" stroke-dasharray="4 3""##)
                }
            };
            colors.push(stroke);
            let pts: Vec<String> = it.pts.iter().map(|p| format!("{},{}", p.x, p.y)).collect();
            let metric = it
                .metric
                .map_or(String::new(), |m| format!(r##" data-metric="{m}""##));
            let width = if it.role == Role::Winner { 2.5 } else { 1.5 };
            let _ = writeln!(
                out,
                r##"<polygon points="{}" data-kind="{}"{metric} fill="{fill}" fill-opacity="0.6" stroke="{stroke}" stroke-width="{width}" vector-effect="non-scaling-stroke"{dash}/>"##,
                pts.join(" "),
                esc(&it.kind)
            );
        }
        let _ = writeln!(out, "</g>");
        if let Some(input) = self.items.iter().find(|i| i.role == Role::Input) {
            for (k, p) in input.pts.iter().enumerate() {
                let (x, y) = px(*p);
                let _ = writeln!(
                    out,
                    r##"<circle cx="{x:.2}" cy="{y:.2}" r="3" fill="#222222"/>"##
                );
                let _ = writeln!(
                    out,
                    r##"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="11">{k}</text>"##,
                    x + 4.0,
                    y - 4.0
                );
            }
        }
        let ly = top + 2.0 * pad + (hi.y - lo.y) * s;
        for (i, (it, c)) in self.items.iter().zip(&colors).enumerate() {
            let y = ly + 18.0 * i as f64;
            let metric = it
                .metric
                .map_or(String::new(), |m| format!(" = {}", crate::report::human(m)));
            let _ = writeln!(
                out,
                r##"<rect x="{pad}" y="{:.2}" width="12" height="12" fill="{c}"/>"##,
                y
            );
            let _ = writeln!(
                out,
                r##"<text x="{}" y="{:.2}" font-family="sans-serif" font-size="12">{}{}</text>"##,
                pad + 18.0,
                y + 11.0,
                esc(&it.kind),
                esc(&metric)
            );
        }
        out.push_str("</svg>\n");
        out
    }
}

/// Plot of `f_v` on `(1, x_max]` with the minimizer marked.
pub fn fv_curve_svg(v: f64, x_star: f64, x_max: f64) -> String {
    let f = |x: f64| crate::nonspecial::f_v(v, x);
    let (w, h, pad) = (480.0, 320.0, 40.0);
    let x_lo = 1.0 + 0.02 * (x_max - 1.0);
    let n = 300;
    let xs: Vec<f64> = (0..=n)
        .map(|i| x_lo + (x_max - x_lo) * i as f64 / n as f64)
        .collect();
    let y_min = f(x_star);
    let y_max = (y_min * 2.0).min(xs.iter().map(|&x| f(x)).fold(f64::NEG_INFINITY, f64::max));
    let sx = |x: f64| pad + (x - x_lo) / (x_max - x_lo) * (w - 2.0 * pad);
    let sy =
        |y: f64| h - pad - (y.min(y_max) - y_min * 0.95) / (y_max - y_min * 0.95) * (h - 2.0 * pad);
    let path: Vec<String> = xs
        .iter()
        .map(|&x| format!("{:.2},{:.2}", sx(x), sy(f(x))))
        .collect();
    let mut out = String::new();
    let _ = writeln!(
        out,
        r##"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"##
    );
    let _ = writeln!(out, r##"<rect width="100%" height="100%" fill="white"/>"##);
    let _ = writeln!(
        out,
        r##"<line x1="{pad}" y1="{0}" x2="{1}" y2="{0}" stroke="#888"/>"##,
        h - pad,
        w - pad
    );
    let _ = writeln!(
        out,
        r##"<line x1="{pad}" y1="{pad}" x2="{pad}" y2="{}" stroke="#888"/>"##,
        h - pad
    );
    let _ = writeln!(
        out,
        r##"<polyline points="{}" fill="none" stroke="#4e79a7" stroke-width="2" data-kind="f_v" data-metric="{v}"/>"##,
        path.join(" ")
    );
    let (mx, my) = (sx(x_star), sy(y_min));
    let _ = writeln!(
        out,
        r##"<circle cx="{mx:.2}" cy="{my:.2}" r="4" fill="#c0392b" data-kind="x*" data-metric="{x_star}"/>"##
    );
    let _ = writeln!(
        out,
        r##"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="12">x* = {}, f = {}</text>"##,
        mx + 6.0,
        my - 8.0,
        crate::report::human(x_star),
        crate::report::human(y_min)
    );
    let _ = writeln!(
        out,
        r##"<text x="{pad}" y="20" font-family="sans-serif" font-size="13">f_v(x), v = {}</text>"##,
        crate::report::human(v)
    );
    let _ = writeln!(
        out,
        r##"<text x="{}" y="{}" font-family="sans-serif" font-size="11">x = {}</text>"##,
        w - pad - 40.0,
        h - pad + 16.0,
        crate::report::human(x_max)
    );
    out.push_str("</svg>\n");
    out
}

/// Fill colour of a minimum-perimeter winner type.
pub fn type_color(ty: &str) -> &'static str {
    match ty {
        "AB'C" => "#4e79a7",
        "ABC'" => "#f28e2b",
        "ABCbar" => "#59a14f",
        "apex" => "#e15759",
        "ex2" => "#b07aa1",
        _ => "#bbbbbb",
    }
}

/// Phase map over `(alpha, beta)` in degrees, one rectangle per cell.
pub fn phase_map_svg(cells: &[SweepCell], grid: usize) -> String {
    let (w, h, pad) = (520.0, 460.0, 50.0);
    let sx = |a: f64| pad + a / 60.0 * (w - 2.0 * pad - 100.0);
    let sy = |b: f64| h - pad - b / 90.0 * (h - 2.0 * pad);
    let cw = (sx(60.0) - sx(0.0)) / grid as f64;
    let ch = (sy(0.0) - sy(90.0)) / grid as f64;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r##"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"##
    );
    let _ = writeln!(out, r##"<rect width="100%" height="100%" fill="white"/>"##);
    for c in cells {
        let _ = writeln!(
            out,
            r##"<rect x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="{}" data-kind="{}" data-metric="{}"/>"##,
            sx(c.alpha_deg) - cw / 2.0,
            sy(c.beta_deg) - ch / 2.0,
            cw,
            ch,
            type_color(&c.winner_type),
            esc(&c.winner_type),
            c.optimum
        );
    }
    let _ = writeln!(
        out,
        r##"<text x="{}" y="{}" font-family="sans-serif" font-size="12">alpha (deg)</text>"##,
        sx(25.0),
        h - 15.0
    );
    let _ = writeln!(
        out,
        r##"<text x="10" y="{}" font-family="sans-serif" font-size="12">beta</text>"##,
        sy(45.0)
    );
    let _ = writeln!(
        out,
        r##"<text x="{pad}" y="25" font-family="sans-serif" font-size="13">minimum-perimeter container type</text>"##
    );
    for (i, ty) in ["AB'C", "ABC'", "ABCbar", "apex", "ex2"].iter().enumerate() {
        let y = pad + 20.0 * i as f64;
        let x = w - pad - 80.0;
        let _ = writeln!(
            out,
            r##"<rect x="{x}" y="{y}" width="12" height="12" fill="{}"/>"##,
            type_color(ty)
        );
        let _ = writeln!(
            out,
            r##"<text x="{}" y="{}" font-family="sans-serif" font-size="12">{}</text>"##,
            x + 18.0,
            y + 11.0,
            esc(ty)
        );
    }
    out.push_str("</svg>\n");
    out
}
