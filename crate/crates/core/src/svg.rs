//! Minimal SVG drawing of a Newton polygon, its roof and the support.

use std::fmt::Write;

use crate::geometry::{LatticePolygon, Point, RoofChain};

/// Renders with one lattice unit per user unit. The view box covers the
/// bounding box of everything drawn plus a margin of one unit.
pub fn render(support: &[Point], ntp: &LatticePolygon, roof: &RoofChain) -> String {
    let all: Vec<Point> = support
        .iter()
        .chain(ntp.vertices())
        .chain(&roof.points)
        .copied()
        .chain([(0, 0)])
        .collect();
    let max_x = all.iter().map(|p| p.0).max().unwrap_or(0);
    let max_y = all.iter().map(|p| p.1).max().unwrap_or(0);
    // SVG y grows downward
    let tx = |(x, y): Point| (x, max_y - y);
    let (w, h) = (max_x + 2, max_y + 2);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="-1 -1 {w} {h}" width="{}" height="{}">"#,
        w * 40,
        h * 40
    );
    let _ = writeln!(s, r##"  <g id="grid" stroke="#ddd" stroke-width="0.02">"##);
    for x in 0..=max_x {
        let _ = writeln!(s, r#"    <line x1="{x}" y1="0" x2="{x}" y2="{max_y}"/>"#);
    }
    for y in 0..=max_y {
        let _ = writeln!(s, r#"    <line x1="0" y1="{y}" x2="{max_x}" y2="{y}"/>"#);
    }
    let _ = writeln!(s, "  </g>");

    let mut d = String::new();
    for (k, &p) in ntp.vertices().iter().enumerate() {
        let (x, y) = tx(p);
        let _ = write!(d, "{}{x} {y} ", if k == 0 { "M" } else { "L" });
    }
    d.push('Z');
    let _ = writeln!(
        s,
        r##"  <path id="ntp-hull" d="{d}" fill="#cde" fill-opacity="0.6" stroke="#246" stroke-width="0.05"/>"##
    );

    let pts: Vec<String> = roof
        .points
        .iter()
        .map(|&p| {
            let (x, y) = tx(p);
            format!("{x},{y}")
        })
        .collect();
    let _ = writeln!(
        s,
        r##"  <polyline id="ntp-roof" points="{}" fill="none" stroke="#c33" stroke-width="0.08"/>"##,
        pts.join(" ")
    );

    let mut sorted = support.to_vec();
    sorted.sort_unstable();
    let _ = writeln!(s, r#"  <g id="support" font-size="0.3">"#);
    for &p in &sorted {
        let (x, y) = tx(p);
        let _ = writeln!(s, r#"    <circle cx="{x}" cy="{y}" r="0.08"/>"#);
        let _ = writeln!(
            s,
            r#"    <text x="{}" y="{}">({},{})</text>"#,
            x as f64 + 0.12,
            y as f64 - 0.12,
            p.0,
            p.1
        );
    }
    let _ = writeln!(s, "  </g>");
    s.push_str("</svg>\n");
    s
}
