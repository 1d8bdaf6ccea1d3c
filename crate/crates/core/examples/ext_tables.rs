//! Ext^*(εk, ψk) at the stratum witnesses, plain and colinear.

use braided_sl2::homology::{ext_equivariant, ext_one_dimensional, sample_points};
use braided_sl2::scalar::Params;
use braided_sl2::sl2::{psi_character, sl2_presentation, trivial_resolution};

fn main() {
    for pt in sample_points() {
        let pres = sl2_presentation(&Params::Point(pt));
        let cx = trivial_resolution(&pres);
        let psi = psi_character(&pres);
        println!("{}", ext_one_dimensional(&pres, &cx, &psi));
        println!("{}", ext_equivariant(&pres, &cx, &psi));
    }
}
