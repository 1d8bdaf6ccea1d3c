use std::sync::Arc;

use braided_sl2::braided::{homogeneous_components, total_degrees, BraidedProduct, TensorPoly};
use braided_sl2::cli::parse_poly;
use braided_sl2::exactla::{kernel_basis, rank, solve_preimage, ScalarMatrix};
use braided_sl2::homology::{ext_equivariant, ext_one_dimensional, nakayama_map, sample_points, NakayamaConfig};
use braided_sl2::hopf::HopfData;
use braided_sl2::ncalg::{Homogeneity, NcPoly, Presentation, Word};
use braided_sl2::scalar::{rational, Bicharacter, ParamPoint, Params, RatFunc, Scalar};
use braided_sl2::sl2::{epsilon_t, sl2_instance, trivial_resolution};
use num::BigRational;
use proptest::prelude::*;

fn generic() -> &'static (Arc<Presentation>, HopfData) {
    static CELL: std::sync::OnceLock<(Arc<Presentation>, HopfData)> = std::sync::OnceLock::new();
    CELL.get_or_init(|| sl2_instance(&Params::Generic).unwrap())
}

fn laurent() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((-3i64..=3, -2i64..=2, -2i64..=2), 1..4).prop_map(|terms| {
        let g = Params::Generic;
        terms
            .into_iter()
            .fold(g.zero(), |acc, (c, i, j)| &acc + &(&g.int(c) * &g.laurent(i, j)))
    })
}

fn ratfunc() -> impl Strategy<Value = Scalar> {
    (laurent(), laurent()).prop_filter_map("zero denominator", |(n, d)| n.div(&d).ok())
}

fn numeric() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| Scalar::Numeric(rational(n, d)))
}

fn word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0u8..4, 0..=max_len).prop_map(Word)
}

/// Random element of the generic SL2 algebra, already reduced.
fn element(max_len: usize) -> impl Strategy<Value = NcPoly> {
    prop::collection::vec((word(max_len), -3i64..=3, -1i64..=1), 1..4).prop_map(|terms| {
        let g = Params::Generic;
        let x: NcPoly = terms
            .into_iter()
            .map(|(w, c, e)| (w, &g.int(c) * &g.laurent(e, 0)))
            .collect();
        generic().0.normal_form(&x).unwrap()
    })
}

fn point() -> impl Strategy<Value = ParamPoint> {
    (1i64..=5, 1i64..=3, 1i64..=5, 1i64..=3).prop_map(|(a, b, c, d)| ParamPoint::from_fracs(a, b, c, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms_generic(x in ratfunc(), y in ratfunc(), z in ratfunc()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert!((&x - &x).is_zero());
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn field_axioms_numeric(x in numeric(), y in numeric(), z in numeric()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(x in ratfunc(), y in ratfunc(), at in point()) {
        if let (Ok(ex), Ok(ey)) = (x.evaluate(&at), y.evaluate(&at)) {
            prop_assert_eq!((&x * &y).evaluate(&at).unwrap(), &ex * &ey);
            prop_assert_eq!((&x + &y).evaluate(&at).unwrap(), &ex + &ey);
        }
    }

    #[test]
    fn canonical_form_is_idempotent(x in ratfunc(), k in laurent()) {
        let Scalar::Generic(f) = &x else { unreachable!() };
        let again = RatFunc::new(f.numer().clone(), f.denom().clone());
        prop_assert_eq!(&again, f);
        // multiplying numerator and denominator by a common factor changes nothing
        if !k.is_zero() {
            let Scalar::Generic(kf) = &k else { unreachable!() };
            let blown = RatFunc::new(f.numer().mul(kf.numer()), f.denom().mul(kf.numer()));
            prop_assert_eq!(&blown, f);
        }
    }

    #[test]
    fn normal_form_idempotent_and_linear(x in element(4), y in element(4), c in laurent()) {
        let pres = &generic().0;
        prop_assert_eq!(pres.normal_form(&x).unwrap(), x.clone());
        let lin = pres.normal_form(&x.scale(&c).add(&y)).unwrap();
        prop_assert_eq!(lin, pres.normal_form(&x).unwrap().scale(&c).add(&pres.normal_form(&y).unwrap()));
        let xy = pres.mul(&x, &y);
        prop_assert_eq!(pres.normal_form(&xy).unwrap(), xy);
    }

    #[test]
    fn normal_form_preserves_degree(x in prop::collection::vec((word(5), -3i64..=3), 1..5)) {
        let pres = &generic().0;
        let g = Params::Generic;
        let x: NcPoly = x.into_iter().map(|(w, c)| (w, g.int(c))).collect();
        for (d, part) in homogeneous_components(pres, &x) {
            let nf = pres.normal_form(&part).unwrap();
            prop_assert!(nf.is_zero() || pres.degree(&nf) == Homogeneity::Degree(d));
        }
    }

    #[test]
    fn round_trip_through_the_printer(x in element(3)) {
        let pres = &generic().0;
        let printed = pres.format(&x);
        let back = parse_poly(&printed, pres).unwrap();
        prop_assert_eq!(&back, &x);
        prop_assert_eq!(pres.format(&back), printed);
    }

    #[test]
    fn nakayama_preserves_degree(w in word(4)) {
        let (pres, h) = generic();
        let x = pres.normal_form(&NcPoly::word(w.clone())).unwrap();
        let cfg = NakayamaConfig::sl2(pres);
        for (d, part) in homogeneous_components(pres, &x) {
            let mu = nakayama_map(&cfg, h, &part).unwrap();
            prop_assert!(mu.is_zero() || pres.degree(&mu) == Homogeneity::Degree(d));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn no_zero_divisors(x in element(3), y in element(3)) {
        prop_assume!(!x.is_zero() && !y.is_zero());
        prop_assert!(!generic().0.mul(&x, &y).is_zero());
    }
}

fn tuple(arity: usize) -> impl Strategy<Value = Vec<Word>> {
    prop::collection::vec(word(2), arity)
}

fn mono(pres: &Presentation, ws: &[Word]) -> TensorPoly {
    let slots: Vec<NcPoly> = ws.iter().map(|w| pres.normal_form(&NcPoly::word(w.clone())).unwrap()).collect();
    TensorPoly::pure(&slots)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn braided_product_associative(arity in 2usize..=3, seed in any::<u64>()) {
        let pres = &generic().0;
        let bichar = Bicharacter::sl2(pres.params());
        let m = BraidedProduct::new(pres, &bichar);
        let mut rng = <rand::rngs::StdRng as rand::SeedableRng>::seed_from_u64(seed);
        let mut pick = || -> TensorPoly {
            use rand::Rng;
            let ws: Vec<Word> = (0..arity)
                .map(|_| Word((0..rng.gen_range(0..=2)).map(|_| rng.gen_range(0..4u8)).collect()))
                .collect();
            mono(pres, &ws)
        };
        let (x, y, z) = (pick(), pick(), pick());
        prop_assert_eq!(m.mul(&m.mul(&x, &y), &z), m.mul(&x, &m.mul(&y, &z)));
        let one = TensorPoly::unit(arity, Params::Generic.one());
        prop_assert_eq!(m.mul(&one, &x), x.clone());
        prop_assert_eq!(m.mul(&x, &one), x.clone());
        let xy = m.mul(&x, &y);
        if !xy.is_zero() {
            let dx = *total_degrees(pres, &x).iter().next().unwrap();
            let dy = *total_degrees(pres, &y).iter().next().unwrap();
            prop_assert_eq!(total_degrees(pres, &xy).into_iter().collect::<Vec<_>>(), vec![dx + dy]);
        }
    }

    /// Arity 3 as A ⊗ (A ⊗ A): the last two slots braid among themselves, then past the first.
    #[test]
    fn arity_three_matches_nested_arity_two(u in tuple(3), v in tuple(3)) {
        let pres = &generic().0;
        let bichar = Bicharacter::sl2(pres.params());
        let m = BraidedProduct::new(pres, &bichar);
        let direct = m.mul(&mono(pres, &u), &mono(pres, &v));
        let inner = m.mul(&mono(pres, &u[1..]), &mono(pres, &v[1..]));
        let deg = |w: &Word| pres.word_degree(w);
        let twist = bichar.pow(deg(&u[1]) + deg(&u[2]), deg(&v[0]));
        let head = pres.normal_form(&NcPoly::word(u[0].concat(&v[0]))).unwrap();
        let nested = TensorPoly::pure(&[head, NcPoly::constant(Params::Generic.one())])
            .expand_slot(1, |_| Ok::<_, ()>(inner.clone()))
            .unwrap()
            .scale(&twist);
        prop_assert_eq!(direct, nested);
    }

    #[test]
    fn xi_one_is_untwisted(u in tuple(2), v in tuple(2), n in 1i64..=4) {
        let params = Params::Point(ParamPoint::from_fracs(n, 1, n, 1).unwrap());
        let (pres, _) = sl2_instance(&params).unwrap();
        let bichar = Bicharacter::sl2(&params);
        let m = BraidedProduct::new(&pres, &bichar);
        let twisted = m.mul(&mono(&pres, &u), &mono(&pres, &v));
        let slots: Vec<NcPoly> = (0..2)
            .map(|i| pres.normal_form(&NcPoly::word(u[i].concat(&v[i]))).unwrap())
            .collect();
        prop_assert_eq!(twisted, TensorPoly::pure(&slots));
    }

    #[test]
    fn linear_algebra_certificates(rows in 1usize..5, cols in 1usize..5, seed in any::<u64>()) {
        use rand::Rng;
        let mut rng = <rand::rngs::StdRng as rand::SeedableRng>::seed_from_u64(seed);
        let entry = |rng: &mut rand::rngs::StdRng| Scalar::Numeric(rational(rng.gen_range(-2..=2), rng.gen_range(1..=2)));
        let m = ScalarMatrix::from_rows(
            (0..rows).map(|_| (0..cols).map(|_| entry(&mut rng)).collect()).collect(),
        );
        let ker = kernel_basis(&m);
        for k in &ker {
            prop_assert!(m.mul_vec(k).unwrap().iter().all(Scalar::is_zero));
        }
        prop_assert_eq!(rank(&m) + ker.len(), cols);
        let v: Vec<Scalar> = (0..rows).map(|_| entry(&mut rng)).collect();
        if let Ok(x) = solve_preimage(&m, &v) {
            prop_assert_eq!(m.mul_vec(&x).unwrap(), v);
        }
    }

    #[test]
    fn ext_tables_are_consistent(i in 0usize..5, tn in 1i64..=7, td in 1i64..=7) {
        let pt = &sample_points()[i];
        let params = Params::Point(pt.clone());
        let (pres, _) = sl2_instance(&params).unwrap();
        let cx = trivial_resolution(&pres);
        let psi = epsilon_t(&pres, &params.constant(BigRational::new(tn.into(), td.into()))).unwrap();
        let plain = ext_one_dimensional(&pres, &cx, &psi);
        let colinear = ext_equivariant(&pres, &cx, &psi);
        prop_assert_eq!(plain.euler_characteristic(), 0);
        prop_assert_eq!(colinear.euler_characteristic(), 0);
        for k in 0..4 {
            prop_assert!(colinear.dims[k] <= plain.dims[k]);
        }
    }
}
