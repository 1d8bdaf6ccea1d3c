//! Normal forms in O_{p,q}(SL2), over k(p,q) and at a rational point.

use braided_sl2::cli::parse_poly;
use braided_sl2::scalar::Params;
use braided_sl2::sl2::sl2_presentation;

fn main() {
    for params in [Params::Generic, Params::point(2, 3)] {
        let pres = sl2_presentation(&params);
        println!("over {params}:");
        for input in ["b*a", "d*a", "a*d*a", "c*b*a", "(a + b)^2", "a*d - p^-1*b*c"] {
            let x = parse_poly(input, &pres).expect("valid expression");
            println!("  {input:<16} = {}", pres.format(&x));
        }
    }
}
