use std::f64::consts::PI;
use std::fmt::Write as _;
use std::path::Path;

use num_traits::ToPrimitive;

use super::AnnularDrawing;
use crate::error::Error;
use crate::graph::{Digraph, Vertex};

const SIZE: f64 = 480.0;
const MARGIN: f64 = 40.0;

fn angle(ray: u8) -> f64 {
    2.0 * PI * f64::from(ray) / 3.0
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// SVG 1.1 text for the drawing, labelled from `g`.
pub fn render_svg(g: &Digraph, d: &AnnularDrawing) -> String {
    let c = SIZE / 2.0;
    let max_r = d
        .placement
        .values()
        .filter_map(|p| p.radius.to_f64())
        .fold(1.0, f64::max);
    let unit = (c - MARGIN) / max_r;
    let pos = |v: Vertex| {
        let p = &d.placement[&v];
        let r = p.radius.to_f64().unwrap_or(1.0) * unit;
        let a = angle(p.ray);
        (c + r * a.cos(), c - r * a.sin())
    };

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    out.push_str(
        "<defs><marker id=\"head\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\">\
         <path d=\"M0,0 L10,5 L0,10 z\" fill=\"#333\"/></marker></defs>\n",
    );
    for ray in 1..=3u8 {
        let a = angle(ray);
        let _ = writeln!(
            out,
            r##"<line x1="{c:.2}" y1="{c:.2}" x2="{:.2}" y2="{:.2}" stroke="#bbb" stroke-dasharray="4 3"/>"##,
            c + (c - 10.0) * a.cos(),
            c - (c - 10.0) * a.sin()
        );
    }
    for (u, v) in g.arcs() {
        let (x1, y1) = pos(u);
        let (x2, y2) = pos(v);
        // Control point on the bisector of the sector, pulled outwards so the
        // curve bends around the origin.
        let mid = angle(d.placement[&u].ray) + PI / 3.0;
        let r1 = ((x1 - c).powi(2) + (y1 - c).powi(2)).sqrt();
        let r2 = ((x2 - c).powi(2) + (y2 - c).powi(2)).sqrt();
        let rc = (r1 + r2) / 2.0 / (PI / 3.0).cos();
        let (cx, cy) = (c + rc * mid.cos(), c - rc * mid.sin());
        let _ = writeln!(
            out,
            r##"<path d="M{x1:.2},{y1:.2} Q{cx:.2},{cy:.2} {x2:.2},{y2:.2}" fill="none" stroke="#333" marker-end="url(#head)"/>"##
        );
    }
    for v in g.vertices() {
        let (x, y) = pos(v);
        let _ = writeln!(out, r##"<circle cx="{x:.2}" cy="{y:.2}" r="4" fill="#000"/>"##);
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="11">{}</text>"#,
            x + 6.0,
            y - 6.0,
            escape(g.label(v))
        );
    }
    out.push_str("</svg>\n");
    out
}

pub fn export_svg(g: &Digraph, d: &AnnularDrawing, path: impl AsRef<Path>) -> Result<(), Error> {
    std::fs::write(path, render_svg(g, d))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::annular::synthesize_drawing;
    use crate::fixtures;

    #[test]
    fn dots_and_arcs() {
        let t3 = fixtures::t3();
        let svg = render_svg(&t3, &synthesize_drawing(&t3).unwrap());
        assert_eq!(svg.matches("<circle").count(), 3);
        assert_eq!(svg.matches("marker-end").count(), 3);
        let fan = fixtures::fan2();
        let d = synthesize_drawing(&fan).unwrap();
        let svg = render_svg(&fan, &d);
        assert_eq!(svg.matches("<circle").count(), 4);
        assert_eq!(svg, render_svg(&fan, &d));
    }

    #[test]
    fn writes_files() {
        let t3 = fixtures::t3();
        let d = synthesize_drawing(&t3).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t3.svg");
        export_svg(&t3, &d, &path).unwrap();
        assert!(std::fs::read_to_string(&path).unwrap().starts_with("<?xml"));
        assert!(matches!(export_svg(&t3, &d, dir.path().join("no/such/dir.svg")), Err(Error::Io(_))));
    }
}
