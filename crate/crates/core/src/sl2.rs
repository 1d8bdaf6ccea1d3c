//! The O_{p,q}(SL2) instance: presentation, Hopf data, characters, and the
//! free resolution of the trivial module.
//!
//! Letters are declared in the order `a < d < b < c`, which is the order the
//! rewriting uses; the irreducible words are `a^i b^j c^k` and `d^l b^j c^k`
//! (`l ≥ 1`).

use std::sync::Arc;

use thiserror::Error;

use crate::braided::TensorPoly;
use crate::hopf::HopfData;
use crate::ncalg::{NcError, NcPoly, Presentation, PresentationBuilder};
use crate::report::Report;
use crate::scalar::{Bicharacter, Params, Scalar, ScalarError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Sl2Error {
    #[error("parameter {0} must be nonzero")]
    ZeroParameter(&'static str),
    #[error("assignment is not a character: relation {0} maps to {1}")]
    NotACharacter(String, String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Rewrite(#[from] NcError),
}

/// The seven oriented SL2 rules over `params`.
pub fn sl2_presentation(params: &Params) -> Presentation {
    sl2_builder(params).build().expect("SL2 rules are well-formed")
}

pub(crate) fn sl2_builder(params: &Params) -> PresentationBuilder {
    let one = params.one();
    let p = params.p();
    let q = params.q();
    let pinv = params.laurent(-1, 0);
    let qinv = params.laurent(0, -1);
    PresentationBuilder::new("sl2", params.clone())
        .gen("a", 0, 2)
        .gen("d", 0, 2)
        .gen("b", -1, 1)
        .gen("c", 1, 1)
        .rule("b a", &[(q.clone(), "a b")])
        .rule("c a", &[(p.clone(), "a c")])
        .rule("c b", &[(one.clone(), "b c")])
        .rule("b d", &[(qinv, "d b")])
        .rule("c d", &[(pinv.clone(), "d c")])
        .rule("a d", &[(one.clone(), ""), (pinv, "b c")])
        .rule("d a", &[(one, ""), (q, "b c")])
}

/// Δ, ε, S of the braided Hopf structure on the SL2 presentation.
pub fn sl2_hopf(pres: Arc<Presentation>) -> HopfData {
    let params = pres.params().clone();
    let g = |n: &str| pres.g(n);
    let t = |l: &str, r: &str| TensorPoly::pure(&[g(l), g(r)]);
    let delta = vec![
        t("a", "a").add(&t("b", "c")),
        t("c", "b").add(&t("d", "d")),
        t("a", "b").add(&t("b", "d")),
        t("c", "a").add(&t("d", "c")),
    ];
    let counit = vec![params.one(), params.one(), params.zero(), params.zero()];
    let antipode = vec![
        g("d"),
        g("a"),
        g("b").scale(&-params.q()),
        g("c").scale(&-params.laurent(-1, 0)),
    ];
    HopfData::new(pres, Bicharacter::sl2(&params), delta, counit, antipode)
}

pub fn check_params(params: &Params) -> Result<(), Sl2Error> {
    if params.p().is_zero() {
        return Err(Sl2Error::ZeroParameter("p"));
    }
    if params.q().is_zero() {
        return Err(Sl2Error::ZeroParameter("q"));
    }
    Ok(())
}

/// Presentation and Hopf data at a parameter point or generically.
pub fn sl2_instance(params: &Params) -> Result<(Arc<Presentation>, HopfData), Sl2Error> {
    check_params(params)?;
    let pres = Arc::new(sl2_presentation(params));
    let hopf = sl2_hopf(pres.clone());
    Ok((pres, hopf))
}

/// An algebra map to the base field, given by its generator values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub name: String,
    pub values: Vec<Scalar>,
}

impl Character {
    /// Validates the assignment against every rule of `pres`.
    pub fn new(pres: &Presentation, name: impl Into<String>, values: Vec<Scalar>) -> Result<Self, Sl2Error> {
        assert_eq!(values.len(), pres.generators().len());
        let ch = Character {
            name: name.into(),
            values,
        };
        for r in pres.rules() {
            let v = &ch.eval(&NcPoly::word(r.lhs.clone())) - &ch.eval(&r.rhs);
            if !v.is_zero() {
                return Err(Sl2Error::NotACharacter(
                    format!("{} = {}", pres.format_word(&r.lhs), pres.format(&r.rhs)),
                    v.to_string(),
                ));
            }
        }
        Ok(ch)
    }

    pub fn eval(&self, x: &NcPoly) -> Scalar {
        let mut acc = Scalar::zero();
        for (w, c) in x.iter() {
            let mut m = c.clone();
            for &g in w.letters() {
                m = &m * &self.values[g as usize];
            }
            acc = &acc + &m;
        }
        acc
    }

    pub fn value(&self, pres: &Presentation, gen: &str) -> Scalar {
        self.values[pres.gen_index(gen).expect("generator") as usize].clone()
    }
}

/// `ε_t`: a ↦ t, d ↦ t⁻¹, b, c ↦ 0.
pub fn epsilon_t(pres: &Presentation, t: &Scalar) -> Result<Character, Sl2Error> {
    if t.is_zero() {
        return Err(Sl2Error::ZeroParameter("t"));
    }
    let params = pres.params();
    let t = params.coerce(t)?;
    let mut values = vec![params.zero(); 4];
    values[pres.gen_index("a").unwrap() as usize] = t.clone();
    values[pres.gen_index("d").unwrap() as usize] = t.inv()?;
    Character::new(pres, format!("eps_{t}"), values)
}

/// The counit ε = ε₁.
pub fn counit_character(pres: &Presentation) -> Character {
    let mut ch = epsilon_t(pres, &pres.params().one()).expect("counit");
    ch.name = "eps".into();
    ch
}

/// `ε_{(pq)⁻¹}`.
pub fn psi_character(pres: &Presentation) -> Character {
    epsilon_t(pres, &pres.params().laurent(-1, -1)).expect("nonzero")
}

/// A finite-dimensional Z-graded vector space with a named basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedComodule {
    pub names: Vec<String>,
    pub degrees: Vec<i64>,
}

impl GradedComodule {
    pub fn new(entries: &[(&str, i64)]) -> Self {
        GradedComodule {
            names: entries.iter().map(|(n, _)| n.to_string()).collect(),
            degrees: entries.iter().map(|(_, d)| *d).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn trivial() -> Self {
        GradedComodule::new(&[("1", 0)])
    }

    pub fn v() -> Self {
        GradedComodule::new(&[("e1", 0), ("e2", -1), ("e3", 1)])
    }

    pub fn w() -> Self {
        GradedComodule::new(&[("e'1", -1), ("e'2", 1), ("e'3", 0)])
    }
}

/// A matrix over the algebra. Applied to row vectors: `x ↦ x·M`,
/// i.e. `(x·M)_k = Σ_j x_j M_{jk}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<NcPoly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<NcPoly>) -> Self {
        assert_eq!(entries.len(), rows * cols);
        PolyMatrix { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        PolyMatrix::new(rows, cols, vec![NcPoly::zero(); rows * cols])
    }

    pub fn get(&self, r: usize, c: usize) -> &NcPoly {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: NcPoly) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[NcPoly] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, pres: &Presentation, x: &[NcPoly]) -> Result<Vec<NcPoly>, NcError> {
        assert_eq!(x.len(), self.rows);
        (0..self.cols)
            .map(|k| {
                let mut acc = NcPoly::zero();
                for (j, xj) in x.iter().enumerate() {
                    acc = acc.add(&xj.free_mul(self.get(j, k)));
                }
                pres.normal_form(&acc)
            })
            .collect()
    }

    /// `self · other` (first `self`, then `other`, in the row convention).
    pub fn then(&self, pres: &Presentation, other: &PolyMatrix) -> Result<PolyMatrix, NcError> {
        assert_eq!(self.cols, other.rows);
        let mut out = PolyMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            let row = other.apply_row(pres, self.row(r))?;
            for (c, v) in row.into_iter().enumerate() {
                out.set(r, c, v);
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(NcPoly::is_zero)
    }

    /// Character applied entrywise.
    pub fn evaluate(&self, ch: &Character) -> Vec<Vec<Scalar>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|x| ch.eval(x)).collect())
            .collect()
    }

    pub fn format(&self, pres: &Presentation) -> String {
        let rows: Vec<String> = (0..self.rows)
            .map(|r| {
                let cells: Vec<String> = self.row(r).iter().map(|x| pres.format(x)).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    }
}

/// `0 → A⊗M_n → … → A⊗M_0 → k`, with `maps[i]: A⊗M_{i+1} → A⊗M_i`.
#[derive(Clone, Debug)]
pub struct FreeComplex {
    pub modules: Vec<GradedComodule>,
    pub maps: Vec<PolyMatrix>,
    pub augmentation: Character,
}

impl FreeComplex {
    pub fn new(modules: Vec<GradedComodule>, maps: Vec<PolyMatrix>, augmentation: Character) -> Self {
        assert_eq!(modules.len(), maps.len() + 1);
        for (i, m) in maps.iter().enumerate() {
            assert_eq!(m.rows, modules[i + 1].rank(), "map {i} rows");
            assert_eq!(m.cols, modules[i].rank(), "map {i} cols");
        }
        FreeComplex {
            modules,
            maps,
            augmentation,
        }
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    /// `φ_i` with the usual 1-based numbering.
    pub fn phi(&self, i: usize) -> &PolyMatrix {
        &self.maps[i - 1]
    }

    /// Checks each entry is homogeneous of degree `deg(source) − deg(target)`.
    pub fn check_degrees(&self, pres: &Presentation) -> Report {
        let mut report = Report::new("degree compatibility");
        for (i, m) in self.maps.iter().enumerate() {
            let (src, tgt) = (&self.modules[i + 1], &self.modules[i]);
            for r in 0..m.rows {
                for c in 0..m.cols {
                    let x = m.get(r, c);
                    if x.is_zero() {
                        continue;
                    }
                    let want = src.degrees[r] - tgt.degrees[c];
                    let ok = pres.degree(x) == crate::ncalg::Homogeneity::Degree(want);
                    report.check(
                        "entry-degree",
                        format!("phi{}[{},{}]", i + 1, src.names[r], tgt.names[c]),
                        ok,
                        || format!("{} is not of degree {want}", pres.format(x)),
                    );
                }
            }
        }
        report
    }
}

/// The length-3 resolution `0 → A → A⊗W → A⊗V → A → k`.
pub fn trivial_resolution(pres: &Presentation) -> FreeComplex {
    let params = pres.params();
    let g = |n: &str| pres.g(n);
    let one = pres.one();
    let phi1 = PolyMatrix::new(3, 1, vec![g("a").sub(&one), g("b"), g("c")]);
    let phi2 = PolyMatrix::new(
        3,
        3,
        vec![
            g("b"),
            one.sub(&g("a").scale(&params.q())),
            NcPoly::zero(),
            g("c"),
            NcPoly::zero(),
            one.sub(&g("a").scale(&params.p())),
            NcPoly::zero(),
            g("c"),
            g("b").neg(),
        ],
    );
    let phi3 = PolyMatrix::new(
        1,
        3,
        vec![g("c"), g("b").neg(), g("a").scale(&params.laurent(1, 1)).sub(&one)],
    );
    FreeComplex::new(
        vec![
            GradedComodule::trivial(),
            GradedComodule::v(),
            GradedComodule::w(),
            GradedComodule::trivial(),
        ],
        vec![phi1, phi2, phi3],
        counit_character(pres),
    )
}
