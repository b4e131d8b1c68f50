//! From monodromy matrices to flip words and back.
//!
//! cargo run --example flip_words -- 5 2 2 1

use ptb_cr::flipword::{canonical_words, matrix_to_word, parse_word, word_to_matrix, Sl2z};

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let f = match args[..] {
        [a, b, c, d] => Sl2z::from_i64(a, b, c, d),
        _ => Sl2z::from_i64(0, -1, 1, 3),
    };
    match matrix_to_word(&f) {
        Ok(dec) => {
            println!("f = {f}");
            println!("word {} (negated: {})", dec.word, dec.negated);
            println!("conjugator {}", dec.conjugator);
            println!("check: {} = C·f·C⁻¹", word_to_matrix(&dec.word));
            println!("gaps {:?}, exponents {:?}", dec.word.gaps(), dec.word.exponents());
        }
        Err(e) => println!("{f}: {e}"),
    }

    let w = parse_word("LRRLR").unwrap();
    println!("{w} normalizes to {}", w.normalized());

    for len in 2..=10 {
        let n = canonical_words(len).iter().filter(|w| w.len() == len).count();
        println!("length {len:2}: {n} rotation classes");
    }
}
