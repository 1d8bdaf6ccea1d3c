//! The free resolution of the trivial module: composites vanish over k(p,q)
//! and the complex is exact on truncations at a point.

use braided_sl2::homology::{check_complex, check_exactness};
use braided_sl2::scalar::Params;
use braided_sl2::sl2::{sl2_presentation, trivial_resolution};

fn main() {
    let generic = sl2_presentation(&Params::Generic);
    let cx = trivial_resolution(&generic);
    for i in 1..=3 {
        println!("phi{i} = {}", cx.phi(i).format(&generic));
    }
    println!("{}", check_complex(&generic, &cx));
    println!("{}", cx.check_degrees(&generic));

    let pres = sl2_presentation(&Params::point(2, 3));
    let cx = trivial_resolution(&pres);
    match check_exactness(&pres, &cx, 5, 2) {
        Ok(r) => {
            println!("{r}");
            for e in r.entries.iter().take(4) {
                println!("  {}: {}", e.axiom, e.witness);
            }
        }
        Err(e) => println!("inconclusive: {e}"),
    }
}
