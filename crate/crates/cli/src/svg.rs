//! SVG drawings of lattice polygons.
//!
//! One lattice unit is [`UNIT`] pixels, the y axis points up, and the view box
//! leaves one unit of margin around the bounding box. Output is a pure
//! function of the polygon and the options.

use std::fmt::Write as _;

use lattice_pick_core::decompose::{decompose, find_pocket, DecomposeError, DecompositionTree};
use lattice_pick_core::lattice::lattice_points;
use lattice_pick_core::polygon::{hull_interior_flags, hull_polygon};
use lattice_pick_core::{is_convex, LatticePoint, PointLocation, Polygon};
use num_bigint::BigInt;

pub const UNIT: i64 = 20;

const INTERIOR: &str = "#2ca02c";
const BOUNDARY: &str = "#1f77b4";
const POCKET: &str = "#ff7f0e";

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SvgOptions {
    pub hull: bool,
    pub pockets: bool,
    pub decomposition: bool,
    pub lattice: bool,
}

struct Frame {
    min_x: BigInt,
    max_y: BigInt,
}

impl Frame {
    fn x(&self, v: &BigInt) -> BigInt {
        (v - &self.min_x + 1) * UNIT
    }

    fn y(&self, v: &BigInt) -> BigInt {
        (&self.max_y - v + 1) * UNIT
    }

    fn points(&self, pts: &[LatticePoint]) -> String {
        pts.iter().map(|p| format!("{},{}", self.x(&p.x), self.y(&p.y))).collect::<Vec<_>>().join(" ")
    }
}

/// Pocket paths `[a, x1, .., xm, b]` of every pocket, first pocket first.
fn pocket_paths(poly: &Polygon) -> Vec<Vec<LatticePoint>> {
    let flags = hull_interior_flags(poly);
    let v = poly.vertices();
    let n = v.len();
    (0..n)
        .filter(|&i| !flags[i] && flags[(i + 1) % n])
        .map(|i| {
            let m = (1..n).take_while(|k| flags[(i + k) % n]).count();
            (0..=m + 1).map(|k| v[(i + k) % n].clone()).collect()
        })
        .collect()
}

fn leaves<'a>(t: &'a DecompositionTree, out: &mut Vec<&'a Polygon>) {
    match t.children() {
        None => out.push(t.polygon()),
        Some([a, b]) => {
            leaves(a, out);
            leaves(b, out);
        }
    }
}

pub fn render(poly: &Polygon, opts: SvgOptions) -> Result<String, DecomposeError> {
    let v = poly.vertices();
    let min_x = v.iter().map(|p| &p.x).min().expect("polygons are non-empty").clone();
    let max_x = v.iter().map(|p| &p.x).max().expect("polygons are non-empty").clone();
    let min_y = v.iter().map(|p| &p.y).min().expect("polygons are non-empty").clone();
    let max_y = v.iter().map(|p| &p.y).max().expect("polygons are non-empty").clone();
    let w = (&max_x - &min_x + 2) * UNIT;
    let h = (&max_y - &min_y + 2) * UNIT;
    let f = Frame { min_x, max_y };

    let mut s = String::new();
    writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {w} {h}" width="{w}" height="{h}">"#).unwrap();
    writeln!(s, r#"<rect width="{w}" height="{h}" fill="white"/>"#).unwrap();
    writeln!(s, r##"<polygon class="polygon" points="{}" fill="#eef2f8" stroke="none"/>"##, f.points(v)).unwrap();

    if opts.pockets && !is_convex(poly) {
        let first = find_pocket(poly)?.pocket_path;
        writeln!(s, r#"<g class="pockets">"#).unwrap();
        for path in pocket_paths(poly) {
            if path == first {
                writeln!(
                    s,
                    r#"<polygon points="{}" fill="{POCKET}" fill-opacity="0.6" stroke="{POCKET}" stroke-width="2"/>"#,
                    f.points(&path)
                )
                .unwrap();
            } else {
                writeln!(
                    s,
                    r#"<polygon points="{}" fill="none" stroke="{POCKET}" stroke-width="2" stroke-dasharray="2 4"/>"#,
                    f.points(&path)
                )
                .unwrap();
            }
        }
        writeln!(s, "</g>").unwrap();
    }

    if opts.decomposition {
        let tree = decompose(poly)?;
        let mut tris = Vec::new();
        leaves(&tree, &mut tris);
        writeln!(s, r##"<g class="decomposition" fill="none" stroke="#999999" stroke-width="0.75">"##).unwrap();
        for t in tris {
            writeln!(s, r#"<polygon points="{}"/>"#, f.points(t.vertices())).unwrap();
        }
        writeln!(s, "</g>").unwrap();
    }

    writeln!(s, r#"<polygon class="outline" points="{}" fill="none" stroke="black" stroke-width="2"/>"#, f.points(v))
        .unwrap();

    if opts.hull {
        let hull = hull_polygon(poly);
        writeln!(
            s,
            r##"<polygon class="hull" points="{}" fill="none" stroke="#555555" stroke-width="1.5" stroke-dasharray="8 5"/>"##,
            f.points(hull.vertices())
        )
        .unwrap();
    }

    if opts.lattice {
        writeln!(s, r#"<g class="lattice">"#).unwrap();
        for (p, loc) in lattice_points(poly) {
            let color = if loc == PointLocation::Inside { INTERIOR } else { BOUNDARY };
            writeln!(s, r#"<circle cx="{}" cy="{}" r="4" fill="{color}"/>"#, f.x(&p.x), f.y(&p.y)).unwrap();
        }
        writeln!(s, "</g>").unwrap();
    }

    s.push_str("</svg>\n");
    Ok(s)
}
