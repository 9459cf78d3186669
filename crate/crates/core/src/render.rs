//! Deterministic SVG drawings of decompositions.

use std::fmt::Write;

use crate::constructions::Decomposition;

const SIZE: f64 = 800.0;
const MARGIN: f64 = 40.0;

#[derive(Clone, Debug, Default)]
pub struct RenderOptions {
    /// Draw only parts of this color.
    pub color: Option<usize>,
}

fn layout(d: &Decomposition) -> Vec<(f64, f64)> {
    let n = d.config.n();
    match d.config.points() {
        None => {
            // regular polygon, vertex 0 on top, clockwise on screen
            let r = (SIZE - 2.0 * MARGIN) / 2.0;
            (0..n)
                .map(|i| {
                    let t = -std::f64::consts::FRAC_PI_2 + 2.0 * std::f64::consts::PI * i as f64 / n as f64;
                    (SIZE / 2.0 + r * t.cos(), SIZE / 2.0 + r * t.sin())
                })
                .collect()
        }
        Some(pts) => {
            let (mut x0, mut x1, mut y0, mut y1) = (i64::MAX, i64::MIN, i64::MAX, i64::MIN);
            for p in pts {
                x0 = x0.min(p.x);
                x1 = x1.max(p.x);
                y0 = y0.min(p.y);
                y1 = y1.max(p.y);
            }
            let span = ((x1 - x0).max(y1 - y0)).max(1) as f64;
            let s = (SIZE - 2.0 * MARGIN) / span;
            pts.iter().map(|p| (MARGIN + (p.x - x0) as f64 * s, SIZE - MARGIN - (p.y - y0) as f64 * s)).collect()
        }
    }
}

fn hue(c: usize) -> String {
    format!("hsl({:.1},70%,42%)", (c as f64 * 137.507_764) % 360.0)
}

pub fn render_svg(d: &Decomposition, opts: &RenderOptions) -> String {
    let pos = layout(d);
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let mut shown = 0;
    for (i, part) in d.parts.iter().enumerate() {
        let color = d.coloring.as_ref().map(|c| c[i]);
        if opts.color.is_some() && color != opts.color {
            continue;
        }
        shown += 1;
        let stroke = color.map(hue).unwrap_or_else(|| "#444".into());
        let _ = writeln!(s, r#"<g stroke="{stroke}" stroke-width="1.5" data-part="{i}">"#);
        for e in part.edges() {
            let (a, b) = (pos[e.u], pos[e.v]);
            let _ = writeln!(s, r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#, a.0, a.1, b.0, b.1);
        }
        let _ = writeln!(s, "</g>");
    }
    for (i, p) in pos.iter().enumerate() {
        let _ = writeln!(s, r#"<circle cx="{:.2}" cy="{:.2}" r="3" fill="black" data-vertex="{i}"/>"#, p.0, p.1);
    }
    let palette = d.palette_size().map(|p| p.to_string()).unwrap_or_else(|| "none".into());
    let _ = writeln!(
        s,
        r#"<text x="10" y="20" font-family="monospace" font-size="14">{} parts shown, palette {palette}</text>"#,
        shown
    );
    s.push_str("</svg>\n");
    s
}
