//! Text and SVG pictures of a TFPL.
//!
//! Odd vertices are drawn as circles (`o`), even ones as squares (`#`).
//! Drifters are drawn as `!` in text and carry the class `drifter` in SVG.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::grid::{parity_of, Edge, Parity};
use crate::tfpl::Tfpl;

/// SVG units per lattice step.
pub const SCALE: i32 = 40;
const MARGIN: i32 = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Ascii,
    Svg,
}

pub fn render(f: &Tfpl, format: Format) -> String {
    match format {
        Format::Ascii => render_ascii(f),
        Format::Svg => render_svg(f),
    }
}

/// Row `y = N − 1` comes first; the last line holds the external edges.
pub fn render_ascii(f: &Tfpl) -> String {
    let n = f.size() as i32;
    let width = (4 * n + 1) as usize;
    let drifters = f.drifters();
    let mut lines = Vec::new();
    for y in (0..n).rev() {
        if y < n - 1 {
            let mut between = vec![b' '; width];
            for x in 0..=2 * n {
                let e = Edge::V(x, y);
                if f.has(e) {
                    between[(2 * x) as usize] = if drifters.contains(&e) { b'!' } else { b'|' };
                }
            }
            lines.push(between);
        }
        let mut row = vec![b' '; width];
        for x in y..=2 * n - y {
            row[(2 * x) as usize] = match parity_of(x, y) {
                Parity::Odd => b'o',
                Parity::Even => b'#',
            };
            if f.has(Edge::H(x, y)) {
                row[(2 * x + 1) as usize] = b'-';
            }
        }
        lines.push(row);
    }
    let mut stubs = vec![b' '; width];
    for x in 0..=2 * n {
        if f.has(Edge::X(x)) {
            stubs[(2 * x) as usize] = b'|';
        }
    }
    lines.push(stubs);
    let mut out = String::new();
    for l in lines {
        out.push_str(String::from_utf8(l).expect("ascii").trim_end());
        out.push('\n');
    }
    out
}

fn point(n: i32, x: i32, y: i32) -> (i32, i32) {
    (MARGIN + SCALE * x, MARGIN + SCALE * (n - 1 - y))
}

pub fn render_svg(f: &Tfpl) -> String {
    let n = f.size() as i32;
    let (w, h) = (2 * MARGIN + SCALE * 2 * n, 2 * MARGIN + SCALE * n);
    let drifters = f.drifters();
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    out.push_str("<style>line{stroke:black;stroke-width:4}line.drifter{stroke:red}");
    out.push_str(".odd{fill:white;stroke:black}.even{fill:black}</style>\n");
    for e in f.edges() {
        let (a, b) = e.endpoints();
        let p = point(n, a.0, a.1);
        let q = match b {
            Some(b) => point(n, b.0, b.1),
            None => (p.0, p.1 + SCALE / 2),
        };
        let class = if drifters.contains(&e) { "edge drifter" } else { "edge" };
        let _ = writeln!(
            out,
            r#"<line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            p.0, p.1, q.0, q.1
        );
    }
    for (x, y) in f.grid().vertices() {
        let (cx, cy) = point(n, x, y);
        match parity_of(x, y) {
            Parity::Odd => {
                let _ = writeln!(out, r#"<circle class="odd" cx="{cx}" cy="{cy}" r="6"/>"#);
            }
            Parity::Even => {
                let _ = writeln!(
                    out,
                    r#"<rect class="even" x="{}" y="{}" width="12" height="12"/>"#,
                    cx - 6,
                    cy - 6
                );
            }
        }
    }
    out.push_str("</svg>\n");
    out
}
