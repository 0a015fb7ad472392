//! SVG diagrams: each face as a regular polygon on one horizontal strip,
//! chords as straight segments coloured by curve, arcs dashed.

use std::f64::consts::PI;
use std::fmt::Write;

use curveforge::curve::Chord;
use curveforge::{ChordArc, ChordCurve, PolygonComplex};

const CELL: f64 = 260.0;
const RADIUS: f64 = 100.0;
const PALETTE: [&str; 10] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2",
    "#7f7f7f", "#bcbd22",
];

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn num(x: f64) -> String {
    let r = (x * 100.0).round() / 100.0;
    if r == 0.0 {
        "0".into()
    } else {
        format!("{r}")
    }
}

struct Layout<'a> {
    c: &'a PolygonComplex,
}

impl Layout<'_> {
    fn vertex(&self, face: usize, k: usize) -> (f64, f64) {
        let n = self.c.face_len(face) as f64;
        let cx = CELL * face as f64 + CELL / 2.0;
        let cy = CELL / 2.0;
        let a = PI / 2.0 + PI / n + 2.0 * PI * k as f64 / n;
        (cx + RADIUS * a.cos(), cy - RADIUS * a.sin())
    }

    fn point(&self, side: usize, t: f64) -> (f64, f64) {
        let s = self.c.side(side);
        let n = self.c.face_len(s.face);
        let (x0, y0) = self.vertex(s.face, s.pos);
        let (x1, y1) = self.vertex(s.face, (s.pos + 1) % n);
        (x0 + t * (x1 - x0), y0 + t * (y1 - y0))
    }

    fn chord_path(&self, ch: &Chord) -> String {
        let f = |p: &curveforge::Passage| {
            let t = *p.param.numer() as f64 / *p.param.denom() as f64;
            self.point(p.side, t)
        };
        let (a, b) = (f(&ch.from), f(&ch.to));
        format!("M {} {} L {} {}", num(a.0), num(a.1), num(b.0), num(b.1))
    }
}

/// Renders a complex with named curves and arcs.
pub fn render_svg(
    c: &PolygonComplex,
    curves: &[(String, ChordCurve)],
    arcs: &[(String, ChordArc)],
) -> String {
    let l = Layout { c };
    let width = CELL * c.face_count() as f64;
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">",
        num(width),
        num(CELL),
        num(width),
        num(CELL)
    );
    for (f, face) in c.faces().iter().enumerate() {
        let n = face.tokens.len();
        let pts: Vec<String> = (0..n)
            .map(|k| {
                let (x, y) = l.vertex(f, k);
                format!("{},{}", num(x), num(y))
            })
            .collect();
        let _ = writeln!(
            out,
            "<g class=\"face\" id=\"face-{}\">\n<polygon points=\"{}\" fill=\"none\" stroke=\"black\"/>",
            escape(&face.name),
            pts.join(" ")
        );
        let cx = CELL * f as f64 + CELL / 2.0;
        let cy = CELL / 2.0;
        for (pos, tok) in face.tokens.iter().enumerate() {
            let (mx, my) = l.point(c.side_at(f, pos), 0.5);
            let (dx, dy) = (mx - cx, my - cy);
            let d = (dx * dx + dy * dy).sqrt().max(1.0);
            let _ = writeln!(
                out,
                "<text x=\"{}\" y=\"{}\" font-size=\"11\" text-anchor=\"middle\">{}</text>",
                num(mx + 12.0 * dx / d),
                num(my + 12.0 * dy / d + 4.0),
                escape(&tok.to_string())
            );
        }
        out.push_str("</g>\n");
    }
    for (i, (name, cv)) in curves.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        for ch in cv.chords(c) {
            let _ = writeln!(
                out,
                "<path class=\"curve\" data-name=\"{}\" d=\"{}\" stroke=\"{color}\" fill=\"none\"/>",
                escape(name),
                l.chord_path(&ch)
            );
        }
    }
    for (name, arc) in arcs {
        for ch in arc.chords(c) {
            let _ = writeln!(
                out,
                "<path class=\"arc\" data-name=\"{}\" d=\"{}\" stroke=\"black\" stroke-dasharray=\"6 4\" fill=\"none\"/>",
                escape(name),
                l.chord_path(&ch)
            );
        }
    }
    out.push_str("</svg>\n");
    out
}
