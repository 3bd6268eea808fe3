//! Static SVG drawings of bodies and slices of dimension at most two.
//!
//! Canvas rule: a 480×480 viewport with a 60 px margin. The drawing box is the bounding box
//! of the vertices together with the origin, padded to a span of at least 1 in each
//! direction; one uniform scale (`360 / max span`) maps it into the viewport, with `y`
//! pointing up. Axes are drawn through the origin. Labels print exact coordinates.

use std::fmt::Write;

use okounkov_core::exactgeom::{fmt_rat, Polytope, Rat};

use crate::CliError;

const SIZE: f64 = 480.0;
const MARGIN: f64 = 60.0;

/// Picks two coordinates that carry the polytope's affine hull injectively, or the lone
/// coordinate in ambient dimension one.
fn plane(p: &Polytope) -> Result<Vec<usize>, CliError> {
    let n = p.ambient_dim();
    if n <= 2 {
        return Ok((0..n).collect());
    }
    let dim = p.dim();
    if dim > 2 {
        return Err(CliError::input(format!("cannot render a {dim}-dimensional body; at most 2 is supported")));
    }
    for i in 0..n {
        for j in i + 1..n {
            let proj = p.project(&[i, j]).map_err(CliError::from)?;
            if proj.dim() == dim {
                return Ok(vec![i, j]);
            }
        }
    }
    unreachable!("a polytope of dimension ≤ 2 projects injectively onto some coordinate plane")
}

fn label(v: &[Rat]) -> String {
    format!("({})", v.iter().map(fmt_rat).collect::<Vec<_>>().join(", "))
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub fn render_svg(p: &Polytope, title: &str) -> Result<String, CliError> {
    let mut out = String::new();
    writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#).unwrap();
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    writeln!(out, r#"<text x="{MARGIN}" y="30" font-family="monospace" font-size="14">{}</text>"#, escape(title)).unwrap();
    if p.is_empty() {
        writeln!(out, r#"<text x="{}" y="{}" font-family="monospace" font-size="18" text-anchor="middle">empty</text>"#, SIZE / 2.0, SIZE / 2.0).unwrap();
        out.push_str("</svg>\n");
        return Ok(out);
    }
    let coords = plane(p)?;
    let pts: Vec<(f64, f64)> = p
        .vertices()
        .iter()
        .map(|v| {
            let x = coords.first().map_or(0.0, |&i| to_f64(&v[i]));
            let y = coords.get(1).map_or(0.0, |&j| to_f64(&v[j]));
            (x, y)
        })
        .collect();
    let (mut x0, mut x1, mut y0, mut y1) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for &(x, y) in &pts {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let span = (x1 - x0).max(y1 - y0).max(1.0);
    let scale = (SIZE - 2.0 * MARGIN) / span;
    let sx = |x: f64| MARGIN + (x - x0) * scale;
    let sy = |y: f64| SIZE - MARGIN - (y - y0) * scale;

    writeln!(out, r##"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#888"/>"##, MARGIN / 2.0, sy(0.0), SIZE - MARGIN / 2.0, sy(0.0)).unwrap();
    writeln!(out, r##"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#888"/>"##, sx(0.0), MARGIN / 2.0, sx(0.0), SIZE - MARGIN / 2.0).unwrap();
    let names: Vec<String> = coords.iter().map(|i| format!("x{i}")).collect();
    if let Some(n) = names.first() {
        writeln!(out, r#"<text x="{:.2}" y="{:.2}" font-family="monospace" font-size="12">{n}</text>"#, SIZE - MARGIN / 2.0, sy(0.0) - 4.0).unwrap();
    }
    if let Some(n) = names.get(1) {
        writeln!(out, r#"<text x="{:.2}" y="{:.2}" font-family="monospace" font-size="12">{n}</text>"#, sx(0.0) + 4.0, MARGIN / 2.0).unwrap();
    }

    match pts.len() {
        1 => {}
        2 => {
            writeln!(out, r##"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#1f4e99" stroke-width="3"/>"##, sx(pts[0].0), sy(pts[0].1), sx(pts[1].0), sy(pts[1].1)).unwrap();
        }
        _ => {
            let ordered = around_centroid(&pts);
            let path: Vec<String> = ordered.iter().map(|&k| format!("{:.2},{:.2}", sx(pts[k].0), sy(pts[k].1))).collect();
            writeln!(out, r##"<polygon points="{}" fill="#9ab8e8" fill-opacity="0.6" stroke="#1f4e99" stroke-width="2"/>"##, path.join(" ")).unwrap();
        }
    }
    for (v, &(x, y)) in p.vertices().iter().zip(&pts) {
        writeln!(out, r##"<circle cx="{:.2}" cy="{:.2}" r="4" fill="#c0392b"/>"##, sx(x), sy(y)).unwrap();
        writeln!(out, r#"<text x="{:.2}" y="{:.2}" font-family="monospace" font-size="12">{}</text>"#, sx(x) + 6.0, sy(y) - 6.0, escape(&label(v))).unwrap();
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn to_f64(q: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

/// Vertex indices of a convex polygon in counterclockwise order.
fn around_centroid(pts: &[(f64, f64)]) -> Vec<usize> {
    let cx = pts.iter().map(|p| p.0).sum::<f64>() / pts.len() as f64;
    let cy = pts.iter().map(|p| p.1).sum::<f64>() / pts.len() as f64;
    let mut idx: Vec<usize> = (0..pts.len()).collect();
    idx.sort_by(|&a, &b| {
        let ta = (pts[a].1 - cy).atan2(pts[a].0 - cx);
        let tb = (pts[b].1 - cy).atan2(pts[b].0 - cx);
        ta.total_cmp(&tb)
    });
    idx
}

#[cfg(test)]
mod tests {
    use super::*;
    use okounkov_core::exactgeom::rat;

    fn hull(pts: &[&[i64]], dim: usize) -> Polytope {
        let pts: Vec<Vec<Rat>> = pts.iter().map(|p| p.iter().map(|&x| rat(x)).collect()).collect();
        Polytope::hull(&pts, dim).unwrap()
    }

    #[test]
    fn triangle_has_three_labeled_vertices() {
        let svg = render_svg(&hull(&[&[0, 0], &[1, 0], &[1, 1]], 2), "t").unwrap();
        assert_eq!(svg.matches("<circle").count(), 3);
        assert!(svg.contains("(1, 1)") && svg.contains("<polygon"));
    }

    #[test]
    fn point_is_a_single_marker() {
        let svg = render_svg(&hull(&[&[2, 3]], 2), "p").unwrap();
        assert_eq!(svg.matches("<circle").count(), 1);
        assert!(!svg.contains("<polygon"));
    }

    #[test]
    fn empty_is_annotated() {
        let svg = render_svg(&Polytope::empty(2), "e").unwrap();
        assert!(svg.contains(">empty<") && !svg.contains("<circle"));
    }

    #[test]
    fn flat_bodies_in_higher_dimension_render_and_full_ones_do_not() {
        let seg = hull(&[&[0, 0, 0, 0], &[1, 0, 0, 1]], 4);
        assert_eq!(render_svg(&seg, "s").unwrap().matches("<circle").count(), 2);
        let solid = hull(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]], 3);
        assert!(render_svg(&solid, "x").is_err());
    }
}
