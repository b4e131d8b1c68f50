//! Layered triangulation of a bundle and the ribbon around each edge.
//!
//! cargo run --example triangulation -- RRLRL

use ptb_cr::flipword::parse_word;
use ptb_cr::montri::{build_triangulation, edge_classes, ribbon};

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "RRL".into());
    let w = parse_word(&text).expect("word over R and L with both letters");
    let t = build_triangulation(&w);
    println!("{} tetrahedra, types {:?}", t.m(), t.types());
    for g in t.gluings() {
        println!("  {} -> {} by {}", g.lower, g.upper, g.layering);
    }
    for c in edge_classes(&t) {
        let members: Vec<String> = c.members.iter().map(|(j, e)| format!("{j}:{e}")).collect();
        println!("bottom {} n={} valence {}: {}", c.bottom, c.n, c.valence, members.join(" "));
        println!("  ribbon {:?}", ribbon(&t, c.bottom));
    }
}
