//! Hochschild cohomology with one-dimensional coefficients, through the
//! transported bimodule resolution and through the one-sided bridge.

use braided_sl2::homology::{
    hochschild_one_dimensional, hochschild_via_bridge, sample_points, transport_to_bimodule_resolution,
};
use braided_sl2::scalar::Params;
use braided_sl2::sl2::{counit_character, sl2_instance, trivial_resolution};

fn main() {
    let (pres, h) = sl2_instance(&Params::Generic).unwrap();
    let (maps, report) = transport_to_bimodule_resolution(&trivial_resolution(&pres), &h).unwrap();
    println!("D1 = {}", maps[0].format(&pres));
    println!("{report}");

    for pt in sample_points() {
        let (pres, h) = sl2_instance(&Params::Point(pt)).unwrap();
        let cx = trivial_resolution(&pres);
        let (maps, _) = transport_to_bimodule_resolution(&cx, &h).unwrap();
        let eps = counit_character(&pres);
        let direct = hochschild_one_dimensional(&pres, &cx, &maps, &eps, &eps);
        let bridge = hochschild_via_bridge(&pres, &cx, &eps);
        println!("{direct}   (bridge agrees: {})", direct.dims == bridge.dims);
    }
}
