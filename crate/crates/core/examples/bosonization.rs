//! kZ # O_{p,q}(SL2) against O_{p,q}(GL2): the maps on generators and the
//! isomorphism report.

use braided_sl2::boson::{f_images, g_images, gl2_instance, smash_instance, verify_bosonization_iso};
use braided_sl2::cli::parse_poly;
use braided_sl2::scalar::Params;

fn main() {
    let params = Params::Generic;
    let smash = smash_instance(&params).unwrap();
    let gl2 = gl2_instance(&params).unwrap();
    for (g, img) in gl2.generators().iter().zip(f_images(&gl2, &smash)) {
        println!("f({}) = {}", g.name, smash.format(&img));
    }
    for (g, img) in smash.generators().iter().zip(g_images(&smash, &gl2)) {
        println!("g({}) = {}", g.name, gl2.format(&img));
    }
    for s in ["b*z", "c*zinv", "zinv*z"] {
        println!("smash: {s} = {}", smash.format(&parse_poly(s, &smash).unwrap()));
    }
    let report = verify_bosonization_iso(&params).unwrap();
    println!("{report}");
    for note in &report.notes {
        println!("  note: {note}");
    }
}
