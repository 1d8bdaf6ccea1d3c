//! Overlap checks for the bundled rewriting systems, and a broken one.

use braided_sl2::boson::{gl2_instance, smash_instance};
use braided_sl2::ncalg::Presentation;
use braided_sl2::scalar::Params;
use braided_sl2::sl2::sl2_presentation;

fn show(pres: &Presentation) {
    let rep = pres.check_confluence();
    println!("{}: {} overlaps, {} unresolved", pres.name(), rep.overlaps_checked, rep.unresolved.len());
    for u in rep.unresolved.iter().take(3) {
        println!("  {}: {} vs {}", u.overlap, u.left, u.right);
    }
}

fn main() {
    let g = Params::Generic;
    let sl2 = sl2_presentation(&g);
    show(&sl2);
    show(&smash_instance(&g).unwrap());
    show(&gl2_instance(&g).unwrap());

    // drop c·b → b·c
    let rules = sl2.rules().iter().filter(|r| sl2.format_word(&r.lhs) != "c*b").cloned().collect();
    let broken = Presentation::new("sl2 without cb", g, sl2.generators().to_vec(), rules).unwrap();
    show(&broken);
}
