//! Normal words per length for each preset.

use braided_sl2::boson::{gl2_instance, smash_basis_count, smash_instance};
use braided_sl2::scalar::Params;
use braided_sl2::sl2::sl2_presentation;

fn main() {
    let g = Params::Generic;
    let sl2 = sl2_presentation(&g);
    println!("sl2   {:?}", sl2.basis_counts(6));
    let smash = smash_instance(&g).unwrap();
    println!("smash {:?}", smash.basis_counts(5));
    println!("gl2   {:?}", gl2_instance(&g).unwrap().basis_counts(5));
    let words: Vec<String> = sl2.enumerate_basis(2).iter().map(|w| sl2.format_word(w)).collect();
    println!("sl2 words of length ≤ 2: {}", words.join(" "));
    for m in 0..=2 {
        println!("smash, |z-exponent| ≤ {m}, sl2 length ≤ 2: {}", smash_basis_count(&smash, m, 2));
    }
}
