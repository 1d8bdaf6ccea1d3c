//! Ext^*(εk, A): the top class and the right action of the generators on it.

use braided_sl2::homology::ext_coefficients_in_a;
use braided_sl2::scalar::Params;
use braided_sl2::sl2::{sl2_presentation, trivial_resolution};

fn main() {
    for (p, q) in [(2, 3), (1, 1)] {
        let pres = sl2_presentation(&Params::point(p, q));
        let res = ext_coefficients_in_a(&pres, &trivial_resolution(&pres), 5).expect("conclusive");
        println!("p={p}, q={q}: low dims {:?}, top cokernel dim {}", res.low_dims, res.coker_dim);
        for (g, l) in &res.classes {
            println!("  [{g}] = {l}·[1]");
        }
    }
}
