//! Images of the fibre generators and the base loop.
//!
//! cargo run --example holonomy -- RRL

use ptb_cr::flipword::parse_word;
use ptb_cr::realise::{holonomy_rep, MirrorPolicy};

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "RRL".into());
    let w = parse_word(&text).expect("admissible word");
    // L-first words are rotated to their R-first form here.
    let h = holonomy_rep(&w, MirrorPolicy::RotateToRFirst).expect("representation");
    println!("M_alpha =\n{}", h.m_alpha);
    println!("M_beta =\n{}", h.m_beta);
    println!("M_tau =\n{}", h.m_tau);
    let [a, b, t] = h.cleared();
    println!("with denominators cleared:\n{a}\n{b}\n{t}");
}
