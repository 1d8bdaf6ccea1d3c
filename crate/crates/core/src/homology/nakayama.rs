//! The Nakayama automorphism `μ(x) = Σ ψ(x₁)·ξ^{−deg(x₂)(deg(x₂)+g)}·S²(x₂)`.

use crate::hopf::{Arity, HopfData};
use crate::ncalg::{Homogeneity, NcError, NcPoly, Presentation};
use crate::report::Report;
use crate::scalar::{ParamPoint, Params, Scalar};
use crate::sl2::{psi_character, sl2_instance, Character};

#[derive(Clone, Debug)]
pub struct NakayamaConfig {
    pub psi: Character,
    /// Exponent of the group-like in `kZ` (trivial for SL2).
    pub g: i64,
}

impl NakayamaConfig {
    /// `ψ = ε_{(pq)⁻¹}`, `g = 0`.
    pub fn sl2(pres: &Presentation) -> Self {
        NakayamaConfig {
            psi: psi_character(pres),
            g: 0,
        }
    }

    /// ψ must vanish on generators of nonzero degree.
    pub fn is_degree_compatible(&self, pres: &Presentation) -> bool {
        pres.generators()
            .iter()
            .zip(&self.psi.values)
            .all(|(g, v)| g.degree == 0 || v.is_zero())
    }
}

pub fn nakayama_map(cfg: &NakayamaConfig, h: &HopfData, x: &NcPoly) -> Result<NcPoly, NcError> {
    let pres = h.presentation();
    let d = h.apply_coproduct(x, Arity::Two)?;
    let mut out = NcPoly::zero();
    for (parts, c) in d.iter() {
        let lead = cfg.psi.eval(&NcPoly::word(parts[0].clone()));
        if lead.is_zero() {
            continue;
        }
        let k = pres.word_degree(&parts[1]);
        let twist = h.bichar().pow(-k, k + cfg.g);
        let s2 = h.antipode_squared(&NcPoly::word(parts[1].clone()))?;
        out.add_scaled(&s2, &(&(c * &lead) * &twist));
    }
    pres.normal_form(&out)
}

/// Extends generator images multiplicatively to a word-by-word map.
fn extend(pres: &Presentation, images: &[NcPoly], x: &NcPoly) -> Result<NcPoly, NcError> {
    let mut out = NcPoly::zero();
    for (w, c) in x.iter() {
        let mut acc = pres.one();
        for &g in w.letters() {
            acc = pres.multiply(&acc, &images[g as usize])?;
        }
        out.add_scaled(&acc, c);
    }
    pres.normal_form(&out)
}

fn diag(pres: &Presentation, a: &Scalar, d: &Scalar) -> Vec<NcPoly> {
    pres.generators()
        .iter()
        .map(|g| match g.name.as_str() {
            "a" => pres.g("a").scale(a),
            "d" => pres.g("d").scale(d),
            n => pres.g(n),
        })
        .collect()
}

fn generator_values(cfg: &NakayamaConfig, h: &HopfData) -> Result<Vec<NcPoly>, NcError> {
    let pres = h.presentation();
    pres.generators()
        .iter()
        .map(|g| nakayama_map(cfg, h, &pres.g(&g.name)))
        .collect()
}

/// Certifies the SL2 Nakayama automorphism.
pub fn verify_nakayama(cfg: &NakayamaConfig, h: &HopfData) -> Report {
    let pres = h.presentation();
    let params = pres.params();
    let mut report = Report::new(format!("Nakayama automorphism over {params}"));
    let run = |report: &mut Report| -> Result<(), NcError> {
        report.check("psi-degree-zero", cfg.psi.name.clone(), cfg.is_degree_compatible(pres), || {
            "psi is nonzero on a generator of nonzero degree".into()
        });
        let pq = params.laurent(1, 1);
        let pq_inv = params.laurent(-1, -1);
        let expected = diag(pres, &pq_inv, &pq);
        let values = generator_values(cfg, h)?;
        for (g, (v, e)) in pres.generators().iter().zip(values.iter().zip(&expected)) {
            report.check("formula", format!("mu({}) = {}", g.name, pres.format(e)), v == e, || pres.format(v));
        }
        for r in pres.rules() {
            let lhs = extend(pres, &values, &NcPoly::word(r.lhs.clone()))?;
            let rhs = extend(pres, &values, &r.rhs)?;
            let res = lhs.sub(&rhs);
            report.check(
                "relation",
                format!("{} = {}", pres.format_word(&r.lhs), pres.format(&r.rhs)),
                res.is_zero(),
                || pres.format(&res),
            );
        }
        for w in pres.enumerate_basis(3) {
            let x = NcPoly::word(w.clone());
            let formula = nakayama_map(cfg, h, &x)?;
            let mult = extend(pres, &values, &x)?;
            let name = pres.format_word(&w);
            let res = formula.sub(&mult);
            report.check("multiplicative", name.clone(), res.is_zero(), || pres.format(&res));
            let deg = pres.degree(&formula);
            let ok = formula.is_zero() || deg == Homogeneity::Degree(pres.word_degree(&w));
            report.check("degree", name, ok, || format!("{deg:?}"));
        }
        let inverse = diag(pres, &pq, &pq_inv);
        for (i, g) in pres.generators().iter().enumerate() {
            let x = pres.g(&g.name);
            let a = extend(pres, &inverse, &values[i])?;
            let b = extend(pres, &values, &inverse[i])?;
            report.check("inverse", format!("nu∘mu({0}), mu∘nu({0})", g.name), a == x && b == x, || {
                format!("{}, {}", pres.format(&a), pres.format(&b))
            });
        }
        // identity exactly on the pq = 1 stratum
        let is_id = values.iter().zip(pres.generators()).all(|(v, g)| *v == pres.g(&g.name));
        let on_stratum = match params {
            Params::Generic => false,
            Params::Point(pt) => pt.p() * pt.q() == num::BigRational::from_integer(1.into()),
        };
        report.check(
            "identity-iff-pq=1",
            format!("{params}: pq=1 is {on_stratum}"),
            is_id == on_stratum,
            || format!("mu is {}the identity", if is_id { "" } else { "not " }),
        );
        if matches!(params, Params::Generic) {
            let sample = ParamPoint::from_fracs(2, 1, 1, 2).expect("nonzero");
            let (spres, sh) = sl2_instance(&Params::Point(sample.clone())).expect("instance");
            let scfg = NakayamaConfig::sl2(&spres);
            let svals = generator_values(&scfg, &sh)?;
            let ok = svals.iter().zip(spres.generators()).all(|(v, g)| *v == spres.g(&g.name));
            report.check("identity-iff-pq=1", format!("{sample}: pq=1"), ok, || "mu is not the identity".into());
        }
        Ok(())
    };
    if let Err(e) = run(&mut report) {
        report.fail("rewriting", "nakayama", e.to_string());
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_images() {
        let (pres, h) = sl2_instance(&Params::Generic).unwrap();
        let cfg = NakayamaConfig::sl2(&pres);
        let g = Params::Generic;
        assert_eq!(nakayama_map(&cfg, &h, &pres.g("a")).unwrap(), pres.g("a").scale(&g.laurent(-1, -1)));
        assert_eq!(nakayama_map(&cfg, &h, &pres.g("b")).unwrap(), pres.g("b"));
        assert_eq!(nakayama_map(&cfg, &h, &pres.g("c")).unwrap(), pres.g("c"));
        assert_eq!(nakayama_map(&cfg, &h, &pres.g("d")).unwrap(), pres.g("d").scale(&g.laurent(1, 1)));
        assert_eq!(nakayama_map(&cfg, &h, &pres.one()).unwrap(), pres.one());
    }

    #[test]
    fn report_passes_generically() {
        let (pres, h) = sl2_instance(&Params::Generic).unwrap();
        let r = verify_nakayama(&NakayamaConfig::sl2(&pres), &h);
        assert!(r.passed(), "{r}");
    }
}
