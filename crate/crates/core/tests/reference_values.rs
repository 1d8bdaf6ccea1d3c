//! Worked values for each layer, checked end to end through the public API.

use braided_sl2::boson::{gl2_instance, smash_basis_count, smash_instance};
use braided_sl2::braided::{homogeneous_components, BraidedProduct, TensorPoly};
use braided_sl2::cli::{parse_expression, parse_poly};
use braided_sl2::exactla::{kernel_basis, solve_many, ScalarMatrix};
use braided_sl2::homology::{
    check_complex, ext_coefficients_in_a, hochschild_via_bridge, nakayama_map, NakayamaConfig,
};
use braided_sl2::hopf::Arity;
use braided_sl2::ncalg::{Homogeneity, NcError, NcPoly, Presentation};
use braided_sl2::scalar::{bichar_pow, rational, Bicharacter, ParamPoint, Params, Scalar, ScalarError};
use braided_sl2::sl2::{
    counit_character, epsilon_t, psi_character, sl2_instance, sl2_presentation, trivial_resolution, PolyMatrix,
};

fn poly(pres: &Presentation, s: &str) -> NcPoly {
    parse_poly(s, pres).unwrap_or_else(|e| panic!("{s}: {e}"))
}

fn tensor(pres: &Presentation, s: &str) -> TensorPoly {
    parse_expression(s, pres).unwrap().lower_tensor(pres).unwrap()
}

#[test]
fn scalar_values() {
    let g = Params::Generic;
    let xi = g.laurent(-1, 1);
    assert!((&xi * &g.laurent(1, -1)).is_one());
    assert!((&xi + &(-&xi)).is_zero());
    let frac = g.one().div(&(&g.one() - &g.q())).unwrap();
    assert_eq!(&frac * &(&g.one() - &g.q()), g.one());

    let pt = ParamPoint::from_fracs(2, 1, 3, 1).unwrap();
    assert_eq!(xi.evaluate(&pt).unwrap(), Scalar::Numeric(rational(3, 2)));
    assert!(g.one().evaluate(&pt).unwrap().is_one());
    let pole = (&g.laurent(1, 1) - &g.one()).inv().unwrap();
    let on_stratum = ParamPoint::from_fracs(2, 1, 1, 2).unwrap();
    assert!(matches!(pole.evaluate(&on_stratum), Err(ScalarError::PoleAtPoint { .. })));

    let b = Bicharacter::sl2(&g);
    assert!(bichar_pow(&b, 0, 5).is_one());
    assert_eq!(bichar_pow(&b, -1, 1), g.laurent(1, -1));
    assert_eq!(bichar_pow(&b, -1, -1), xi);
}

#[test]
fn rewriting_values() {
    let pres = sl2_presentation(&Params::Generic);
    assert_eq!(poly(&pres, "b*a"), poly(&pres, "q*a*b"));
    assert_eq!(pres.format(&poly(&pres, "d*a")), "1 + q*b*c");
    assert!(poly(&pres, "a*d - p^-1*b*c - 1").is_zero());
    assert_eq!(poly(&pres, "c*(b*a)"), poly(&pres, "p*q*a*b*c"));
    let x = poly(&pres, "a + b*c");
    assert_eq!(pres.mul(&x, &pres.one()), x);

    let words: Vec<String> = pres.enumerate_basis(2).iter().map(|w| pres.format_word(w)).collect();
    assert_eq!(words.len(), 14);
    for banned in ["a*d", "d*a", "b*a", "c*b"] {
        assert!(!words.iter().any(|w| w == banned));
    }
}

#[test]
fn coordinates_and_degrees() {
    let g = Params::Generic;
    let pres = sl2_presentation(&g);
    let tr = pres.truncation(2);
    let x = poly(&pres, "1 + q*a*b");
    let v = tr.coordinates(&pres, &x).unwrap();
    for (w, c) in tr.words().iter().zip(&v) {
        match pres.format_word(w).as_str() {
            "1" => assert!(c.is_one()),
            "a*b" => assert_eq!(c, &g.q()),
            _ => assert!(c.is_zero()),
        }
    }
    assert_eq!(tr.element(&tr.coordinates(&pres, &poly(&pres, "d*a")).unwrap()), poly(&pres, "1 + q*b*c"));
    assert!(matches!(tr.coordinates(&pres, &poly(&pres, "a^3")), Err(NcError::OutOfTruncation(_))));

    assert_eq!(pres.degree(&poly(&pres, "b*c")), Homogeneity::Degree(0));
    assert_eq!(pres.degree(&poly(&pres, "c^2")), Homogeneity::Degree(2));
    assert_eq!(pres.degree(&poly(&pres, "a + c")), Homogeneity::NonHomogeneous);

    let comps = homogeneous_components(&pres, &poly(&pres, "a + c"));
    assert_eq!(comps.len(), 2);
    assert_eq!(comps[&0], pres.g("a"));
    assert_eq!(comps[&1], pres.g("c"));
    let comps = homogeneous_components(&pres, &poly(&pres, "1 + q*b*c"));
    assert_eq!(comps.keys().copied().collect::<Vec<_>>(), vec![0]);
    let comps = homogeneous_components(&pres, &poly(&pres, "b^2"));
    assert_eq!(comps.keys().copied().collect::<Vec<_>>(), vec![-2]);
}

#[test]
fn braided_products() {
    let g = Params::Generic;
    let pres = sl2_presentation(&g);
    let bichar = Bicharacter::sl2(&g);
    let m = BraidedProduct::new(&pres, &bichar);
    let lhs = m.mul(&tensor(&pres, "1 | b"), &tensor(&pres, "c | 1"));
    assert_eq!(lhs, tensor(&pres, "c | b").scale(&g.laurent(1, -1)));
    let aa_dd = m.mul(&tensor(&pres, "a | a"), &tensor(&pres, "d | d"));
    assert_eq!(aa_dd, tensor(&pres, "(1 + p^-1*b*c) | (1 + p^-1*b*c)"));
    let xy = tensor(&pres, "a*b | c");
    assert_eq!(m.mul(&TensorPoly::unit(2, g.one()), &xy), xy);
}

#[test]
fn coproduct_and_antipode() {
    let g = Params::Generic;
    let (pres, h) = sl2_instance(&g).unwrap();
    assert_eq!(h.apply_coproduct(&pres.g("a"), Arity::Two).unwrap(), tensor(&pres, "a | a").add(&tensor(&pres, "b | c")));
    assert_eq!(h.apply_coproduct(&pres.one(), Arity::Two).unwrap(), TensorPoly::unit(2, g.one()));

    // S² = diag(1, q², p⁻², 1) on (a, b, c, d)
    for (name, scale) in [("a", g.one()), ("b", g.laurent(0, 2)), ("c", g.laurent(-2, 0)), ("d", g.one())] {
        assert_eq!(h.antipode_squared(&pres.g(name)).unwrap(), pres.g(name).scale(&scale), "{name}");
    }
    for name in ["a", "b"] {
        let x = pres.g(name);
        assert_eq!(h.convolution(&x, 0).unwrap(), pres.scalar(h.counit(&x)));
    }

    // the antipode report at a shorter length is a prefix of the longer one
    let short = h.verify_antipode(2);
    let long = h.verify_antipode(3);
    assert!(short.passed() && long.passed());
    assert!(long.entries.len() > short.entries.len());
}

#[test]
fn characters_and_resolution() {
    let g = Params::Generic;
    let pres = sl2_presentation(&g);
    assert_eq!(epsilon_t(&pres, &g.one()).unwrap().values, counit_character(&pres).values);
    assert_eq!(psi_character(&pres).value(&pres, "d"), g.laurent(1, 1));
    let t = g.int(5);
    let eps5 = epsilon_t(&pres, &t).unwrap();
    assert!(eps5.eval(&poly(&pres, "a*d - p^-1*b*c")).is_one());

    let cx = trivial_resolution(&pres);
    assert_eq!(cx.phi(2).row(0), &[pres.g("b"), poly(&pres, "1 - q*a"), NcPoly::zero()][..]);
    assert!(check_complex(&pres, &cx).passed());
    assert!(cx.check_degrees(&pres).passed());

    // φ₃ entry pqa − 1 corrupted to pa − 1
    let mut bad = cx.clone();
    let mut phi3 = bad.maps[2].clone();
    phi3.set(0, 2, poly(&pres, "p*a - 1"));
    bad.maps[2] = phi3;
    let rep = check_complex(&pres, &bad);
    assert!(!rep.passed());
    assert_eq!(rep.failures().count(), 1);
}

#[test]
fn kernel_of_the_second_scalar_map() {
    let g = Params::Generic;
    let pres = sl2_presentation(&g);
    let cx = trivial_resolution(&pres);
    let m = ScalarMatrix::from_rows(cx.phi(2).evaluate(&psi_character(&pres)));
    let ker = kernel_basis(&m);
    assert_eq!(ker.len(), 1);
    assert!(ker[0][0].is_one() && ker[0][1].is_zero() && ker[0][2].is_zero());
    assert!(m.mul_vec(&ker[0]).unwrap().iter().all(Scalar::is_zero));
}

/// `x ↦ x·M` on `F_src^rows → F_tgt^cols` in coordinates.
fn truncated(pres: &Presentation, m: &PolyMatrix, src: usize, tgt: usize) -> ScalarMatrix {
    let (s, t) = (pres.truncation(src), pres.truncation(tgt));
    let zero = pres.params().zero();
    let mut columns = Vec::new();
    for j in 0..m.rows {
        for w in s.words() {
            let mut col = Vec::new();
            for k in 0..m.cols {
                let img = pres.mul(&NcPoly::word(w.clone()), m.get(j, k));
                col.extend(t.coordinates(pres, &img).unwrap());
            }
            columns.push(col);
        }
    }
    ScalarMatrix::from_columns(m.cols * t.len(), &columns, &zero)
}

#[test]
fn kernel_of_phi1_lifts_in_degree_five() {
    let pres = sl2_presentation(&Params::point(2, 3));
    let cx = trivial_resolution(&pres);
    let phi1 = truncated(&pres, cx.phi(1), 2, 3);
    let kernel = kernel_basis(&phi1);
    assert!(!kernel.is_empty());
    // embed F_2³ coordinates into F_6³
    let (small, big) = (pres.truncation(2), pres.truncation(6));
    let zero = pres.params().zero();
    let lifted: Vec<Vec<Scalar>> = kernel
        .iter()
        .map(|v| {
            let mut out = vec![zero.clone(); 3 * big.len()];
            for slot in 0..3 {
                for (i, w) in small.words().iter().enumerate() {
                    out[slot * big.len() + big.position(w).unwrap()] = v[slot * small.len() + i].clone();
                }
            }
            out
        })
        .collect();
    let phi2 = truncated(&pres, cx.phi(2), 5, 6);
    let pre = solve_many(&phi2, &lifted).unwrap();
    assert!(pre.iter().all(Option::is_some));
    for (x, v) in pre.iter().zip(&lifted) {
        assert_eq!(&phi2.mul_vec(x.as_ref().unwrap()).unwrap(), v);
    }
}

#[test]
fn dual_complex_membership() {
    let pres = sl2_presentation(&Params::point(2, 3));
    let cx = trivial_resolution(&pres);
    // φ₃*(0, 0, 1) is the third entry of φ₃
    assert_eq!(cx.phi(3).get(0, 2), &poly(&pres, "6*a - 1"));
    let out = ext_coefficients_in_a(&pres, &cx, 5).unwrap();
    assert_eq!(out.coker_dim, 1);
    assert_eq!(out.classes["a"], "1/6");
}

#[test]
fn bridge_columns() {
    for ((p, q), alpha_is_psi, want) in [
        ((2, 3), true, [0, 0, 1, 1]),
        ((1, 1), false, [1, 3, 3, 1]),
    ] {
        let pres = sl2_presentation(&Params::point(p, q));
        let cx = trivial_resolution(&pres);
        let alpha = if alpha_is_psi { psi_character(&pres) } else { counit_character(&pres) };
        assert_eq!(hochschild_via_bridge(&pres, &cx, &alpha).dims, want);
    }
}

#[test]
fn nakayama_values() {
    let g = Params::Generic;
    let (pres, h) = sl2_instance(&g).unwrap();
    let cfg = NakayamaConfig::sl2(&pres);
    let mu = |s: &str| nakayama_map(&cfg, &h, &poly(&pres, s)).unwrap();
    assert_eq!(mu("a"), poly(&pres, "p^-1*q^-1*a"));
    assert_eq!(mu("b"), pres.g("b"));
    assert_eq!(mu("c"), pres.g("c"));
    assert_eq!(mu("d"), poly(&pres, "p*q*d"));
    assert_eq!(mu("1"), pres.one());
    assert_eq!(pres.mul(&mu("b"), &mu("a")), pres.mul(&mu("a"), &mu("b")).scale(&g.q()));

    let at = Params::Point(ParamPoint::from_fracs(2, 1, 1, 2).unwrap());
    let (pres, h) = sl2_instance(&at).unwrap();
    let cfg = NakayamaConfig::sl2(&pres);
    for name in ["a", "b", "c", "d"] {
        assert_eq!(nakayama_map(&cfg, &h, &pres.g(name)).unwrap(), pres.g(name));
    }
}

#[test]
fn gl2_and_smash_values() {
    let g = Params::Generic;
    let gl2 = gl2_instance(&g).unwrap();
    assert_eq!(poly(&gl2, "b*a"), poly(&gl2, "p*a*b"));
    assert_eq!(poly(&gl2, "d*a"), poly(&gl2, "a*d + (q - p^-1)*b*c"));
    assert!(gl2.check_confluence().is_confluent());

    let smash = smash_instance(&g).unwrap();
    assert_eq!(poly(&smash, "b*z"), poly(&smash, "p*q^-1*z*b"));
    assert_eq!(poly(&smash, "z*zinv"), smash.one());
    assert!(smash.check_confluence().is_confluent());

    let sl2 = sl2_presentation(&Params::point(2, 3));
    let smash = smash_instance(&Params::point(2, 3)).unwrap();
    let counts = sl2.basis_counts(3);
    for m in 0..=3 {
        for n in 0..=3 {
            let want: usize = counts[..=n].iter().sum();
            assert_eq!(smash_basis_count(&smash, m, n), (2 * m + 1) * want, "m={m} n={n}");
        }
    }
}
