//! Exact holonomy around every edge, with ramification orders.
//!
//! cargo run --example certify_edges -- RRLLRL

use ptb_cr::flipword::parse_word;
use ptb_cr::realise::{certify, MirrorPolicy};

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "RRLLRL".into());
    let w = parse_word(&text).expect("admissible word");
    let cert = certify(&w, MirrorPolicy::RotateToRFirst).expect("all pairings realised");
    for c in &cert.cells {
        println!("{} modelled on {}", c.cell, c.model);
    }
    for e in &cert.edges {
        let word: Vec<String> = e.holonomy_word.iter().map(ToString::to_string).collect();
        println!(
            "{:<8} {:?} n={} valence {:2} ramification {} trivial {}  {}",
            e.rep,
            e.kind,
            e.n,
            e.valence,
            e.ramification,
            e.trivial,
            word.join("·")
        );
    }
    println!("all trivial: {}", cert.all_trivial());
}
