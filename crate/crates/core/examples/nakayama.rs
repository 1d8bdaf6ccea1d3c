//! The Nakayama automorphism on generators, and its verification report.

use braided_sl2::homology::{nakayama_map, verify_nakayama, NakayamaConfig};
use braided_sl2::scalar::Params;
use braided_sl2::sl2::sl2_instance;

fn main() {
    for params in [Params::Generic, Params::point(3, 5)] {
        let (pres, h) = sl2_instance(&params).unwrap();
        let cfg = NakayamaConfig::sl2(&pres);
        for g in ["a", "b", "c", "d"] {
            let mu = nakayama_map(&cfg, &h, &pres.g(g)).unwrap();
            println!("mu({g}) = {}", pres.format(&mu));
        }
        println!("{}", verify_nakayama(&cfg, &h));
    }
}
