//! Writes the three development pictures for a gap n into the current
//! directory.
//!
//! cargo run --example develop_svg -- 3

use ptb_cr::cli::{emit_svg, labelled_points, SvgKind};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(1);
    for (kind, name) in [(SvgKind::Slab41, "slab41"), (SvgKind::L14, "l14"), (SvgKind::R14, "r14")] {
        let svg = emit_svg(kind, n);
        let path = format!("{name}-n{n}.svg");
        std::fs::write(&path, &svg).expect("writable directory");
        println!("{path}: {} labelled vertices", labelled_points(&svg).len());
    }
}
