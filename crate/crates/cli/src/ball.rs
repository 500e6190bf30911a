//! Exports of the unit-ball boundary.
//!
//! CSV: header `x,y`, then one sample per row, counter-clockwise from the
//! positive x-axis. SVG: one closed `<polyline>` through the same samples
//! (y up), plus three `<line>` elements and a `<circle>` for a witness.

use std::fmt::Write;

use markov_core::norm::{ball_boundary_sample, stable_norm};
use markov_core::{LatticeVector, Result};

pub fn csv(max_q: u64) -> Result<String> {
    let mut out = String::from("x,y\n");
    for (x, y) in ball_boundary_sample(max_q)? {
        writeln!(out, "{x},{y}").unwrap();
    }
    Ok(out)
}

/// With a witness `(q, p)` the ball is scaled to the level set through it,
/// and the horizontal, vertical and anti-diagonal lines through `(q, p)`
/// are drawn.
pub fn svg(max_q: u64, witness: Option<LatticeVector>) -> Result<String> {
    let scale = match witness {
        Some(w) => stable_norm(w)?,
        None => 1.0,
    };
    let points: Vec<(f64, f64)> = ball_boundary_sample(max_q)?
        .into_iter()
        .map(|(x, y)| (x * scale, y * scale))
        .collect();
    let reach = 1.25
        * points
            .iter()
            .map(|(x, y)| x.abs().max(y.abs()))
            .fold(0.0, f64::max);
    let stroke = reach / 250.0;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="600" height="600" viewBox="{} {} {} {}">"#,
        -reach,
        -reach,
        2.0 * reach,
        2.0 * reach
    )
    .unwrap();
    out.push_str("<g transform=\"scale(1,-1)\">\n");
    let mut coords: Vec<String> = points.iter().map(|(x, y)| format!("{x},{y}")).collect();
    if let Some(first) = coords.first().cloned() {
        coords.push(first);
    }
    writeln!(
        out,
        r#"<polyline fill="none" stroke="black" stroke-width="{stroke}" points="{}"/>"#,
        coords.join(" ")
    )
    .unwrap();
    if let Some(w) = witness {
        let (q, p) = (w.a as f64, w.b as f64);
        let len = 2.0 * reach;
        for (dx, dy) in [(1.0, 0.0), (0.0, 1.0), (1.0, -1.0)] {
            writeln!(
                out,
                r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="red" stroke-width="{stroke}"/>"#,
                q - len * dx,
                p - len * dy,
                q + len * dx,
                p + len * dy
            )
            .unwrap();
        }
        writeln!(
            out,
            r#"<circle cx="{q}" cy="{p}" r="{}" fill="red"/>"#,
            3.0 * stroke
        )
        .unwrap();
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}
