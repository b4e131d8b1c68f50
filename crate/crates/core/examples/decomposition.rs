//! Cells, face pairings and edge classes after inserting slabs.
//!
//! cargo run --example decomposition -- RL

use ptb_cr::celldecomp::{build_decomposition, member_string};
use ptb_cr::flipword::parse_word;
use ptb_cr::montri::build_triangulation;

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "RL".into());
    let w = parse_word(&text).expect("admissible word");
    let d = build_decomposition(&build_triangulation(&w));
    let cells: Vec<String> = d.cells().iter().map(ToString::to_string).collect();
    println!("cells: {}", cells.join(" "));
    for p in d.pairings() {
        println!("  {} -> {} by {}", p.source, p.target, p.label);
    }
    for c in d.classes() {
        let members: Vec<String> = c.members.iter().map(member_string).collect();
        println!("{:?} {} n={} valence {}: {}", c.kind, c.rep_string(), c.n, c.valence(), members.join(" "));
    }
}
