//! Round trip of a presentation through the text format, then a variant
//! with one rule removed.

use braided_sl2::cli::{emit_presentation, parse_presentation};
use braided_sl2::scalar::Params;
use braided_sl2::sl2::sl2_presentation;

fn main() {
    let params = Params::Generic;
    let text = emit_presentation(&sl2_presentation(&params));
    print!("{text}");
    let back = parse_presentation("reloaded", &text, &params).unwrap();
    println!("reloaded: confluent = {}", back.check_confluence().is_confluent());

    let trimmed: String = text.lines().filter(|l| !l.starts_with("rule c*b")).map(|l| format!("{l}\n")).collect();
    let pres = parse_presentation("trimmed", &trimmed, &params).unwrap();
    let rep = pres.check_confluence();
    println!("without c*b: {} unresolved overlaps", rep.unresolved.len());

    match parse_presentation("bad", "gen a deg=0 wt=1\nrule a*a -> (a\n", &params) {
        Ok(_) => println!("unexpectedly parsed"),
        Err(e) => println!("error: {e}"),
    }
}
