//! Arithmetic in Q(ω) and 3×3 matrices over it.
//!
//! cargo run --example exact_arithmetic

use ptb_cr::crgeom::{g_matrix, projective_order, GLabel};
use ptb_cr::exactnum::{herm, ProjVector, QOmega};

fn main() {
    let w = QOmega::omega();
    let z: QOmega = "3/2-2ω".parse().unwrap();
    println!("ω² = {}", &w * &w);
    println!("z = {z}, conj z = {}, N(z) = {}", z.conj(), z.norm());
    println!("1/z = {}", z.inv().unwrap());
    println!("i√3 = {}, squared = {}", QOmega::i_sqrt3(), &QOmega::i_sqrt3() * &QOmega::i_sqrt3());

    for label in [GLabel::G1, GLabel::G2, GLabel::G3, GLabel::G4] {
        let g = g_matrix(label);
        let lambda = g.is_unitary_similitude().expect("preserves the form");
        println!(
            "{label}: Gᴴ J G = {lambda}·J, projective order {:?}, det {}",
            projective_order(&g, 12),
            g.det()
        );
    }
    let p = ProjVector::from_ints([(0, 0), (0, 0), (1, 0)]);
    println!("⟨p, p⟩ = {} for p = {:?}", herm(&p, &p), p.coords().iter().map(|x| x.to_string()).collect::<Vec<_>>());
}
