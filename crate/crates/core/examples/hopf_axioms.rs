//! Braided Hopf structure: coproduct, antipode, and the axiom reports.

use braided_sl2::hopf::Arity;
use braided_sl2::scalar::Params;
use braided_sl2::sl2::sl2_instance;

fn main() {
    let (pres, h) = sl2_instance(&Params::Generic).unwrap();
    for g in ["a", "b", "c", "d"] {
        let x = pres.g(g);
        let delta = h.apply_coproduct(&x, Arity::Two).unwrap();
        let s = h.antipode(&x).unwrap();
        let s2 = h.antipode_squared(&x).unwrap();
        println!("Δ({g}) = {:<22} S({g}) = {:<10} S²({g}) = {}", delta.format(&pres), pres.format(&s), pres.format(&s2));
    }
    let bialgebra = h.verify_bialgebra();
    let antipode = h.verify_antipode(3);
    println!("{bialgebra}");
    println!("{antipode}");
}
