//! Exact scalars: rational functions in p, q and their evaluation.

use braided_sl2::scalar::{bichar_pow, Bicharacter, ParamPoint, Params};

fn main() {
    let g = Params::Generic;
    let x = g.laurent(-1, 1);
    let y = (&g.one() - &g.q()).inv().unwrap();
    let z = &(&x + &y) * &(&g.p() - &g.one());
    println!("x = {x}\ny = {y}\n(x + y)(p - 1) = {z}");
    let pt = ParamPoint::from_fracs(2, 1, 3, 1).unwrap();
    println!("at p=2, q=3: x = {}, y = {}", x.evaluate(&pt).unwrap(), y.evaluate(&pt).unwrap());
    let pole = (&g.laurent(1, 1) - &g.one()).inv().unwrap();
    let on_stratum = ParamPoint::from_fracs(2, 1, 1, 2).unwrap();
    println!("1/(pq - 1) at p=2, q=1/2: {:?}", pole.evaluate(&on_stratum));
    let b = Bicharacter::sl2(&g);
    println!("ξ^(-1·1) = {}", bichar_pow(&b, -1, 1));
}
