//! Products in the braided tensor square A ⊗ A.

use braided_sl2::braided::BraidedProduct;
use braided_sl2::cli::parse_expression;
use braided_sl2::scalar::{Bicharacter, Params};
use braided_sl2::sl2::sl2_presentation;

fn main() {
    let params = Params::Generic;
    let pres = sl2_presentation(&params);
    let bichar = Bicharacter::sl2(&params);
    let m = BraidedProduct::new(&pres, &bichar);
    let t = |s: &str| parse_expression(s, &pres).unwrap().lower_tensor(&pres).unwrap();
    for (x, y) in [("1 | b", "c | 1"), ("a | a", "d | d"), ("b | b", "c | c"), ("c | 1", "1 | b")] {
        let z = m.mul(&t(x), &t(y));
        println!("({x}) · ({y}) = {}", z.format(&pres));
    }
    println!("crossing twist ξ = {}", bichar.xi());
}
