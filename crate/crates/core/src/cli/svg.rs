//! SVG pictures of the horizontal projection of the cells around an edge.
//! Exact positions are embedded numerically only here.

use std::f64::consts::PI;
use std::fmt::Write as _;

use crate::celldecomp::{build_decomposition, Cell, CellEdge, ClassKind, FaceLabel};
use crate::crgeom::{horizontal_affine, ModelTag};
use crate::exactnum::QOmega;
use crate::flipword::{FlipWord, Letter};
use crate::montri::build_triangulation;
use crate::realise::{assign_models, cell_placements, dev_vertices, DevKind, DevVertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SvgKind {
    /// Vertex constellation around a slab 41 edge.
    Slab41,
    /// Vertex constellations around an L 14 edge, both directions.
    L14,
    /// Rotated curvy triangles and slab sectors around an R 14 edge.
    R14,
}

type Pt = (f64, f64);

const SCALE: f64 = 60.0;
const ARC_SAMPLES: usize = 24;

fn num(x: f64) -> String {
    let x = if x.abs() < 5e-13 { 0.0 } else { x };
    format!("{x:.12}")
}

fn screen(p: Pt) -> String {
    let c = |v: f64| if v.abs() < 5e-4 { 0.0 } else { v };
    format!("{:.3},{:.3}", c(p.0 * SCALE), c(-p.1 * SCALE))
}

fn cmul(a: Pt, b: Pt) -> Pt {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

fn cadd(a: Pt, b: Pt) -> Pt {
    (a.0 + b.0, a.1 + b.1)
}

fn arc(center: Pt, from: f64, to: f64) -> Vec<Pt> {
    (0..=ARC_SAMPLES)
        .map(|i| {
            let s = from + (to - from) * i as f64 / ARC_SAMPLES as f64;
            (center.0 + s.cos(), center.1 + s.sin())
        })
        .collect()
}

/// Boundary of the curvy triangle with vertices 0, 1, -ω, anticlockwise.
fn base_region() -> Vec<Pt> {
    let minus_omega = (-QOmega::omega()).to_complex();
    let omega_bar = QOmega::omega_bar().to_complex();
    let mut pts = arc(minus_omega, -2.0 * PI / 3.0, -PI / 3.0);
    pts.extend(arc((0.0, 0.0), 0.0, PI / 3.0).into_iter().skip(1));
    pts.extend(arc(omega_bar, 0.0, -PI / 3.0).into_iter().skip(1));
    pts.pop();
    pts
}

/// A slab seen from its bigon side: the arc from 1 to -ω and the two bigon
/// rays, truncated.
fn slab_sector(k: u8) -> Vec<Pt> {
    let ray = |d: i64| {
        let s = PI * d as f64 / 6.0;
        (2.0 * s.cos(), 2.0 * s.sin())
    };
    let one = (1.0, 0.0);
    let minus_omega = (-QOmega::omega()).to_complex();
    let mut pts = vec![cadd(one, ray(-1))];
    pts.extend(arc((0.0, 0.0), 0.0, PI / 3.0));
    pts.push(cadd(minus_omega, ray(1 - 2 * k as i64)));
    pts
}

fn path(pts: &[Pt], close: bool) -> String {
    let mut d = String::new();
    for (i, p) in pts.iter().enumerate() {
        let _ = write!(d, "{}{} ", if i == 0 { "M" } else { "L" }, screen(*p));
    }
    if close {
        d.push('Z');
    }
    d.trim_end().to_string()
}

fn header(out: &mut String, title: &str) {
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"-240 -240 480 480\" width=\"480\" height=\"480\">\n",
    );
    let _ = writeln!(out, "  <title>{title}</title>");
    out.push_str("  <line class=\"axis\" x1=\"-240\" y1=\"0\" x2=\"240\" y2=\"0\" stroke=\"#ccc\"/>\n");
    out.push_str("  <line class=\"axis\" x1=\"0\" y1=\"-240\" x2=\"0\" y2=\"240\" stroke=\"#ccc\"/>\n");
    let e = screen((1.0, 0.0));
    let (x, y) = e.split_once(',').unwrap();
    let _ = writeln!(
        out,
        "  <circle class=\"edge\" data-label=\"edge\" data-x=\"{}\" data-y=\"{}\" cx=\"{x}\" cy=\"{y}\" r=\"5\" fill=\"none\" stroke=\"#c00\"/>",
        num(1.0),
        num(0.0)
    );
}

fn constellation(out: &mut String, prefix: &str, rows: &[DevVertex], colour: &str) {
    let pts: Vec<Pt> = rows.iter().map(|v| v.z.to_complex()).collect();
    let _ = writeln!(
        out,
        "  <path class=\"guide\" d=\"{}\" fill=\"none\" stroke=\"{colour}\" stroke-dasharray=\"4 3\"/>",
        path(&pts, false)
    );
    for (v, p) in rows.iter().zip(&pts) {
        let s = screen(*p);
        let (x, y) = s.split_once(',').unwrap();
        let _ = writeln!(
            out,
            "  <circle class=\"vertex\" data-label=\"{prefix}{}\" data-x=\"{}\" data-y=\"{}\" cx=\"{x}\" cy=\"{y}\" r=\"3\" fill=\"{colour}\"/>",
            v.label(),
            num(p.0),
            num(p.1)
        );
    }
}

fn r14_picture(out: &mut String, n: usize) {
    // R L^n R L has an R14 class at index 0 with gap n.
    let mut letters = vec![Letter::R];
    letters.extend(std::iter::repeat_n(Letter::L, n));
    letters.extend([Letter::R, Letter::L]);
    let w = FlipWord::from_letters(letters).expect("both letters present");
    let d = build_decomposition(&build_triangulation(&w));
    let r = assign_models(&d);
    let class = d
        .classes()
        .iter()
        .find(|c| c.kind == ClassKind::R14 && c.index == 0)
        .expect("R at index 0");
    let walk = d.walk((Cell::slab(0), CellEdge(1, 4)), FaceLabel::Inner);
    debug_assert_eq!(walk.members, class.members);
    let placed = cell_placements(&r, &walk).expect("all pairings assigned");
    // Work in the frame of R_j, whose projection is the base region.
    let base = placed[1].1.inverse().expect("invertible");
    for (cell, m) in &placed {
        let m = &base * m;
        let (a, b) = horizontal_affine(&m).expect("placements fix infinity");
        let (a, b) = (a.to_complex(), b.to_complex());
        let map = |p: Pt| cadd(cmul(a, p), b);
        if cell.is_slab() {
            let k = match r.model_of(*cell) {
                Some(ModelTag::Slab(k)) => k,
                _ => 0,
            };
            let pts: Vec<Pt> = slab_sector(k).into_iter().map(map).collect();
            let _ = writeln!(
                out,
                "  <path class=\"sector\" data-label=\"{cell}\" d=\"{}\" fill=\"#fde2b8\" stroke=\"#b07020\"/>",
                path(&pts, false)
            );
        } else {
            let pts: Vec<Pt> = base_region().into_iter().map(map).collect();
            let _ = writeln!(
                out,
                "  <path class=\"region\" data-label=\"{cell}\" d=\"{}\" fill=\"#cfe3f7\" fill-opacity=\"0.7\" stroke=\"#20508f\"/>",
                path(&pts, true)
            );
        }
    }
}

/// Renders the development picture for a class type and gap `n`.
pub fn emit_svg(kind: SvgKind, n: usize) -> String {
    let mut out = String::new();
    match kind {
        SvgKind::Slab41 => {
            header(&mut out, &format!("slab 41 edge, n = {n}"));
            constellation(&mut out, "", &dev_vertices(DevKind::Slab41, n), "#20508f");
        }
        SvgKind::L14 => {
            header(&mut out, &format!("L 14 edge, n = {n}"));
            constellation(
                &mut out,
                "anticlockwise/",
                &dev_vertices(DevKind::L14Anticlockwise, n),
                "#20508f",
            );
            constellation(&mut out, "clockwise/", &dev_vertices(DevKind::L14Clockwise, n), "#8f2050");
        }
        SvgKind::R14 => {
            header(&mut out, &format!("R 14 edge, n = {n}"));
            r14_picture(&mut out, n);
        }
    }
    out.push_str("</svg>\n");
    out
}

/// `(label, x, y)` for every labelled vertex of an emitted document.
pub fn labelled_points(svg: &str) -> Vec<(String, f64, f64)> {
    let attr = |line: &str, key: &str| -> Option<String> {
        let start = line.find(&format!("{key}=\""))? + key.len() + 2;
        let end = start + line[start..].find('"')?;
        Some(line[start..end].to_string())
    };
    svg.lines()
        .filter(|l| l.contains("class=\"vertex\""))
        .filter_map(|l| {
            Some((
                attr(l, "data-label")?,
                attr(l, "data-x")?.parse().ok()?,
                attr(l, "data-y")?.parse().ok()?,
            ))
        })
        .collect()
}
