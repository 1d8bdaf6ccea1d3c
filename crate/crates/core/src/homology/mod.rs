//! Complexes, truncated exactness, Ext and Hochschild tables, and the
//! Nakayama automorphism.

mod bimodule;
mod exactness;
mod nakayama;

use std::fmt;

use num::{BigRational, One};
use serde::Serialize;
use thiserror::Error;

use crate::exactla::{LaError, ScalarMatrix};
use crate::ncalg::{NcError, Presentation};
use crate::report::Report;
use crate::scalar::{format_rational, rational, ParamPoint, Params, Scalar};
use crate::sl2::{Character, FreeComplex, PolyMatrix};

pub use bimodule::{
    hochschild_one_dimensional, transport_to_bimodule_resolution, BimoduleElement, BimoduleMap, Transport,
};
pub use exactness::{check_exactness, ext_coefficients_in_a, ExtCoefficientsInA, Position};
pub use nakayama::{nakayama_map, verify_nakayama, NakayamaConfig};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("inconclusive at {position}, filtration degree {degree}: no preimage found with offset up to {max_offset}")]
    Inconclusive {
        position: String,
        degree: usize,
        max_offset: usize,
    },
    #[error("this computation needs a numeric parameter point")]
    NeedsPoint,
    #[error("offset must be at least 1")]
    BadOffset,
    #[error(transparent)]
    Rewrite(#[from] NcError),
    #[error(transparent)]
    Linear(#[from] LaError),
}

/// The five rational witnesses for the parameter strata.
pub const SAMPLE_POINTS: [((i64, i64), (i64, i64)); 5] = [
    ((2, 1), (3, 1)),
    ((1, 1), (3, 1)),
    ((3, 1), (1, 1)),
    ((2, 1), (1, 2)),
    ((1, 1), (1, 1)),
];

pub fn sample_points() -> Vec<ParamPoint> {
    SAMPLE_POINTS
        .iter()
        .map(|&((pn, pd), (qn, qd))| ParamPoint::from_fracs(pn, pd, qn, qd).expect("nonzero"))
        .collect()
}

/// Which row/column of the strata tables a point belongs to.
pub fn stratum(params: &Params) -> String {
    let Some(pt) = params.as_point() else {
        return "generic".into();
    };
    let one = BigRational::one();
    let (p1, q1) = (pt.p() == &one, pt.q() == &one);
    let pq1 = pt.p() * pt.q() == one;
    match (p1 && q1, pq1, p1 || q1) {
        (true, _, _) => "p=q=1",
        (false, true, _) => "pq=1, p≠1, q≠1",
        (false, false, true) => "pq≠1, 1∈{p,q}",
        (false, false, false) => "pq≠1, p≠1, q≠1",
    }
    .into()
}

/// Cohomology dimensions in degrees 0..=3.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtTable {
    pub dims: Vec<usize>,
    pub stratum: String,
    pub label: String,
}

#[derive(Serialize)]
struct DimRow {
    i: usize,
    dim: usize,
}

impl ExtTable {
    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<DimRow> = self.dims.iter().enumerate().map(|(i, &dim)| DimRow { i, dim }).collect();
        serde_json::json!({
            "label": self.label,
            "stratum": self.stratum,
            "dims": rows,
        })
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for (i, &dim) in self.dims.iter().enumerate() {
            w.serialize(DimRow { i, dim }).expect("in-memory csv");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
    }
}

impl fmt::Display for ExtTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dims: Vec<String> = self.dims.iter().map(|d| d.to_string()).collect();
        write!(f, "{} [{}]: ({})", self.label, self.stratum, dims.join(", "))
    }
}

/// Dimensions of a cochain complex `k^{n_0} → k^{n_1} → …` given by its
/// differentials (`d[i]` has `n_{i+1}` rows and `n_i` columns).
pub fn cohomology_dims(sizes: &[usize], d: &[ScalarMatrix]) -> Vec<usize> {
    let ranks: Vec<usize> = d.iter().map(ScalarMatrix::rank).collect();
    (0..sizes.len())
        .map(|i| {
            let out = ranks.get(i).copied().unwrap_or(0);
            let inc = if i == 0 { 0 } else { ranks[i - 1] };
            sizes[i] - out - inc
        })
        .collect()
}

fn evaluated(m: &PolyMatrix, ch: &Character) -> ScalarMatrix {
    ScalarMatrix::from_rows(m.evaluate(ch))
}

fn restrict(m: &ScalarMatrix, rows: &[usize], cols: &[usize]) -> ScalarMatrix {
    ScalarMatrix::from_rows(
        rows.iter()
            .map(|&r| cols.iter().map(|&c| m.get(r, c).clone()).collect())
            .collect(),
    )
}

/// Composites of consecutive maps vanish, and the augmentation kills `φ₁`.
pub fn check_complex(pres: &Presentation, cx: &FreeComplex) -> Report {
    let mut report = Report::new("complex");
    for i in 1..cx.maps.len() {
        let witness = format!("phi{}∘phi{}", i, i + 1);
        match cx.maps[i].then(pres, &cx.maps[i - 1]) {
            Ok(m) => report.check("composite-zero", witness, m.is_zero(), || m.format(pres)),
            Err(e) => report.fail("composite-zero", witness, e.to_string()),
        }
    }
    if let Some(first) = cx.maps.first() {
        let vals = first.evaluate(&cx.augmentation);
        let ok = vals.iter().flatten().all(Scalar::is_zero);
        report.check("augmentation", format!("{}∘phi1", cx.augmentation.name), ok, || {
            let v: Vec<String> = vals.iter().flatten().map(|x| x.to_string()).collect();
            v.join(", ")
        });
    }
    report
}

/// Ext^*(εk, ψk) from the scalar complex `ψ(φ_i)`.
pub fn ext_one_dimensional(pres: &Presentation, cx: &FreeComplex, psi: &Character) -> ExtTable {
    let sizes: Vec<usize> = cx.modules.iter().map(|m| m.rank()).collect();
    let d: Vec<ScalarMatrix> = cx.maps.iter().map(|m| evaluated(m, psi)).collect();
    ExtTable {
        dims: cohomology_dims(&sizes, &d),
        stratum: stratum(pres.params()),
        label: format!("Ext(eps k, {} k)", psi.name),
    }
}

/// The colinear part of [`ext_one_dimensional`]: only degree-zero basis
/// vectors carry cochains.
pub fn ext_equivariant(pres: &Presentation, cx: &FreeComplex, psi: &Character) -> ExtTable {
    let keep: Vec<Vec<usize>> = cx
        .modules
        .iter()
        .map(|m| (0..m.rank()).filter(|&i| m.degrees[i] == 0).collect())
        .collect();
    let sizes: Vec<usize> = keep.iter().map(Vec::len).collect();
    let d: Vec<ScalarMatrix> = cx
        .maps
        .iter()
        .enumerate()
        .map(|(i, m)| restrict(&evaluated(m, psi), &keep[i + 1], &keep[i]))
        .collect();
    ExtTable {
        dims: cohomology_dims(&sizes, &d),
        stratum: stratum(pres.params()),
        label: format!("colinear Ext(eps k, {} k)", psi.name),
    }
}

/// H^*(A, _αk_ε) read off the one-sided Ext table.
pub fn hochschild_via_bridge(pres: &Presentation, cx: &FreeComplex, alpha: &Character) -> ExtTable {
    let mut t = ext_one_dimensional(pres, cx, alpha);
    t.label = format!("H(A, {} k eps)", alpha.name);
    t
}

/// `t = (pq)⁻¹` at a point, as a string for display.
pub fn default_t(pt: &ParamPoint) -> String {
    format_rational(&(rational(1, 1) / (pt.p() * pt.q())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sl2::{counit_character, epsilon_t, psi_character, sl2_presentation, trivial_resolution};

    fn at(pt: &ParamPoint) -> Presentation {
        sl2_presentation(&Params::Point(pt.clone()))
    }

    #[test]
    fn ext_columns() {
        let want = [[0, 0, 1, 1], [0, 1, 2, 1], [0, 1, 2, 1], [1, 1, 1, 1], [1, 3, 3, 1]];
        for (pt, w) in sample_points().iter().zip(want) {
            let pres = at(pt);
            let cx = trivial_resolution(&pres);
            let t = ext_one_dimensional(&pres, &cx, &psi_character(&pres));
            assert_eq!(t.dims, w, "{pt}");
            assert_eq!(t.euler_characteristic(), 0);
        }
    }

    #[test]
    fn equivariant_and_h2() {
        let h2 = [0, 1, 1, 1, 3];
        for (pt, h) in sample_points().iter().zip(h2) {
            let pres = at(pt);
            let cx = trivial_resolution(&pres);
            let e = ext_equivariant(&pres, &cx, &psi_character(&pres));
            let pq1 = pt.p() * pt.q() == BigRational::one();
            assert_eq!(e.dims, if pq1 { vec![1, 1, 1, 1] } else { vec![0, 0, 1, 1] });
            let b = hochschild_via_bridge(&pres, &cx, &counit_character(&pres));
            assert_eq!(b.dims[2], h, "{pt}");
        }
    }

    #[test]
    fn non_special_character_kills_top_degree() {
        let pres = at(&ParamPoint::from_fracs(2, 1, 3, 1).unwrap());
        let cx = trivial_resolution(&pres);
        let t = ext_one_dimensional(&pres, &cx, &epsilon_t(&pres, &Scalar::from_int(5)).unwrap());
        assert_eq!(t.dims[3], 0);
    }

    #[test]
    fn complex_and_mutation() {
        let pres = sl2_presentation(&Params::Generic);
        let mut cx = trivial_resolution(&pres);
        assert!(check_complex(&pres, &cx).passed());
        let g = Params::Generic;
        let corrupted = pres.g("a").scale(&g.p()).sub(&pres.one());
        cx.maps[2].set(0, 2, corrupted);
        let r = check_complex(&pres, &cx);
        assert!(!r.passed());
        assert!(r.failures().all(|e| e.residual.as_deref().is_some_and(|s| s != "0")));
    }

    #[test]
    fn csv_rows() {
        let t = ExtTable {
            dims: vec![0, 0, 1, 1],
            stratum: "x".into(),
            label: "y".into(),
        };
        assert_eq!(t.to_csv(), "i,dim\n0,0\n1,0\n2,1\n3,1\n");
    }
}
