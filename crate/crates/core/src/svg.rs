//! SVG rendering of an instance with an optional transversal.

use std::fmt::Write;

use crate::geom::Point2;
use crate::instance::Instance;

const SIZE: f64 = 600.0;
const PALETTE: [&str; 8] = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#17becf"];

/// One `<path>` per body, the curve as a `<circle>`, one `<circle
/// class="transversal">` per transversal point and a square for `z`.
pub fn render_svg(instance: &Instance, transversal: &[Point2], z: Option<Point2>) -> String {
    let c = &instance.curve;
    let mut lo = Point2::new(c.center.x - c.radius, c.center.y - c.radius);
    let mut hi = Point2::new(c.center.x + c.radius, c.center.y + c.radius);
    for v in instance.bodies.iter().flat_map(|b| b.vertices().iter()).chain(transversal).chain(z.iter()) {
        lo = Point2::new(lo.x.min(v.x), lo.y.min(v.y));
        hi = Point2::new(hi.x.max(v.x), hi.y.max(v.y));
    }
    let span = (hi.x - lo.x).max(hi.y - lo.y).max(1e-9);
    let margin = 0.05 * span;
    let scale = SIZE / (span + 2.0 * margin);
    // y axis points up in the figure
    let map = |p: Point2| ((p.x - lo.x + margin) * scale, (hi.y - p.y + margin) * scale);
    let mark = 0.008 * SIZE;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let (cx, cy) = map(c.center);
    let _ = writeln!(
        s,
        r#"<circle class="curve" cx="{cx:.3}" cy="{cy:.3}" r="{:.3}" fill="none" stroke="black" stroke-width="1.5"/>"#,
        c.radius * scale
    );
    for b in &instance.bodies {
        let mut d = String::new();
        for (i, &v) in b.vertices().iter().enumerate() {
            let (x, y) = map(v);
            let _ = write!(d, "{}{x:.3} {y:.3} ", if i == 0 { "M" } else { "L" });
        }
        d.push('Z');
        let color = PALETTE[b.id % PALETTE.len()];
        let _ = writeln!(
            s,
            r#"<path class="body" data-id="{}" d="{d}" fill="{color}" fill-opacity="0.18" stroke="{color}" stroke-width="1"/>"#,
            b.id
        );
    }
    for &p in transversal {
        let (x, y) = map(p);
        let _ = writeln!(s, r#"<circle class="transversal" cx="{x:.3}" cy="{y:.3}" r="{mark:.3}" fill="black"/>"#);
    }
    if let Some(p) = z {
        let (x, y) = map(p);
        let _ = writeln!(
            s,
            r#"<rect class="heavy" x="{:.3}" y="{:.3}" width="{:.3}" height="{:.3}" fill="none" stroke="red" stroke-width="1.5"/>"#,
            x - mark,
            y - mark,
            2.0 * mark,
            2.0 * mark
        );
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{gallery7, GALLERY_DELTA};

    #[test]
    fn counts_elements() {
        let g = gallery7(GALLERY_DELTA).unwrap();
        let pts = [Point2::new(0.0, 0.0), Point2::new(0.5, 0.1)];
        let svg = render_svg(&g, &pts, Some(Point2::new(0.1, 0.1)));
        assert_eq!(svg.matches("<path ").count(), 7);
        assert_eq!(svg.matches(r#"class="transversal""#).count(), 2);
        assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    }
}
