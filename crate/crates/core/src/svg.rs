//! SVG 1.1 rendering of a function graph with its chord set drawn as a bar
//! underneath, on the same horizontal scale.
//!
//! Coordinates are printed with three decimals, so the output is a pure
//! function of the input.

use std::fmt::Write;

use crate::interval::IntervalSet;
use crate::plfunc::PLFunction;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const MARGIN: f64 = 40.0;
const GRAPH_BOTTOM: f64 = 280.0;
const BAR_Y: f64 = 330.0;
const BAR_HEIGHT: f64 = 12.0;
const DOT_RADIUS: f64 = 4.0;

fn sx(x: f64) -> f64 {
    MARGIN + x * (WIDTH - 2.0 * MARGIN)
}

pub fn render(f: &PLFunction, set: &IntervalSet) -> String {
    let ys: Vec<f64> = f.points().iter().map(|p| p.y.to_f64()).collect();
    let mut lo = ys.iter().cloned().fold(0.0f64, f64::min);
    let mut hi = ys.iter().cloned().fold(0.0f64, f64::max);
    if hi - lo < 1e-12 {
        lo -= 1.0;
        hi += 1.0;
    }
    let sy = |y: f64| GRAPH_BOTTOM - (y - lo) / (hi - lo) * (GRAPH_BOTTOM - MARGIN);

    let mut out = String::new();
    let w = &mut out;
    writeln!(w, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    )
    .unwrap();
    writeln!(w, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    writeln!(
        w,
        r##"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="#999" stroke-width="1"/>"##,
        sx(0.0),
        sy(0.0),
        sx(1.0),
        sy(0.0)
    )
    .unwrap();
    let path: Vec<String> = f
        .points()
        .iter()
        .map(|p| format!("{:.3},{:.3}", sx(p.x.to_f64()), sy(p.y.to_f64())))
        .collect();
    writeln!(
        w,
        r#"<polyline class="graph" points="{}" fill="none" stroke="black" stroke-width="2"/>"#,
        path.join(" ")
    )
    .unwrap();
    writeln!(
        w,
        r##"<rect class="track" x="{:.3}" y="{BAR_Y:.3}" width="{:.3}" height="{BAR_HEIGHT:.3}" fill="#eee"/>"##,
        sx(0.0),
        sx(1.0) - sx(0.0)
    )
    .unwrap();
    for iv in set.intervals() {
        let (a, b) = (sx(iv.lo.to_f64()), sx(iv.hi.to_f64()));
        if iv.is_point() {
            writeln!(
                w,
                r##"<circle class="point" cx="{a:.3}" cy="{:.3}" r="{DOT_RADIUS:.3}" fill="#1f5fa8"/>"##,
                BAR_Y + BAR_HEIGHT / 2.0
            )
            .unwrap();
        } else {
            writeln!(
                w,
                r##"<rect class="interval" x="{a:.3}" y="{BAR_Y:.3}" width="{:.3}" height="{BAR_HEIGHT:.3}" fill="#1f5fa8"/>"##,
                b - a
            )
            .unwrap();
        }
    }
    for (x, label) in [(0.0, "0"), (1.0, "1")] {
        writeln!(
            w,
            r#"<text x="{:.3}" y="{:.3}" font-family="sans-serif" font-size="12" text-anchor="middle">{label}</text>"#,
            sx(x),
            BAR_Y + BAR_HEIGHT + 18.0
        )
        .unwrap();
    }
    writeln!(w, "</svg>").unwrap();
    out
}
