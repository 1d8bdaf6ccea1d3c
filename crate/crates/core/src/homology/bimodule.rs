//! Free bimodule resolution obtained by transporting `φ_i ⊗ id` along the
//! isomorphism `(A⊗V)⊠A ≅ A⊗V⊗A`.

use crate::braided::TensorPoly;
use crate::exactla::ScalarMatrix;
use crate::hopf::{Arity, HopfData};
use crate::ncalg::{NcError, NcPoly, Presentation, Word};
use crate::report::Report;
use crate::scalar::Scalar;
use crate::sl2::{Character, FreeComplex, GradedComodule, PolyMatrix};

use super::{cohomology_dims, stratum, ExtTable};

/// `Σ_k x_k ⊗ e_k ⊗ y_k`: one arity-2 tensor (left ⊗ right) per basis vector.
pub type BimoduleElement = Vec<TensorPoly>;

/// Matrix of (left, right) multiplier pairs: `e_j ↦ Σ_k Σ l·e_k·r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleMap {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<TensorPoly>,
}

fn pair(pres: &Presentation, l: &Word, r: &Word, c: &Scalar) -> Result<TensorPoly, NcError> {
    let l = pres.normal_form(&NcPoly::word(l.clone()))?;
    let r = pres.normal_form(&NcPoly::word(r.clone()))?;
    Ok(TensorPoly::pure(&[l, r]).scale(c))
}

impl BimoduleMap {
    pub fn get(&self, r: usize, c: usize) -> &TensorPoly {
        &self.entries[r * self.cols + c]
    }

    /// Applies the map to an element of the source.
    pub fn apply(&self, pres: &Presentation, x: &BimoduleElement) -> Result<BimoduleElement, NcError> {
        assert_eq!(x.len(), self.rows);
        let mut out = vec![TensorPoly::zero(2); self.cols];
        for (j, xj) in x.iter().enumerate() {
            for (k, slot) in out.iter_mut().enumerate() {
                for (u, c) in xj.iter() {
                    for (lr, d) in self.get(j, k).iter() {
                        // x·l ⊗ r·y
                        let t = pair(pres, &u[0].concat(&lr[0]), &lr[1].concat(&u[1]), &(c * d))?;
                        slot.add_scaled(&t, &Scalar::one());
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self` followed by `next`: pairs compose as `(l l', r' r)`.
    pub fn then(&self, pres: &Presentation, next: &BimoduleMap) -> Result<BimoduleMap, NcError> {
        assert_eq!(self.cols, next.rows);
        let mut entries = Vec::with_capacity(self.rows * next.cols);
        for j in 0..self.rows {
            for m in 0..next.cols {
                let mut acc = TensorPoly::zero(2);
                for k in 0..self.cols {
                    for (a, c) in self.get(j, k).iter() {
                        for (b, d) in next.get(k, m).iter() {
                            let t = pair(pres, &a[0].concat(&b[0]), &b[1].concat(&a[1]), &(c * d))?;
                            acc.add_scaled(&t, &Scalar::one());
                        }
                    }
                }
                entries.push(acc);
            }
        }
        Ok(BimoduleMap {
            rows: self.rows,
            cols: next.cols,
            entries,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(TensorPoly::is_zero)
    }

    /// Scalar matrix `Σ c·α(l)·β(r)` per entry.
    pub fn evaluate(&self, alpha: &Character, beta: &Character) -> ScalarMatrix {
        let rows = (0..self.rows)
            .map(|j| {
                (0..self.cols)
                    .map(|k| {
                        self.get(j, k).iter().fold(Scalar::zero(), |acc, (lr, c)| {
                            let l = alpha.eval(&NcPoly::word(lr[0].clone()));
                            let r = beta.eval(&NcPoly::word(lr[1].clone()));
                            &acc + &(&(c * &l) * &r)
                        })
                    })
                    .collect()
            })
            .collect();
        ScalarMatrix::from_rows(rows)
    }

    pub fn format(&self, pres: &Presentation) -> String {
        let rows: Vec<String> = (0..self.rows)
            .map(|j| {
                let cells: Vec<String> = (0..self.cols).map(|k| self.get(j, k).format(pres)).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    }
}

/// The transport isomorphism `f: (A⊗V)⊠A → A⊗V⊗A` and its inverse,
/// `f(x⊗v⊗y) = Σ ξ^{deg(x₂)·deg v} x₁⊗v⊗x₂y` and
/// `f⁻¹(x⊗v⊗y) = Σ ξ^{deg(x₂)·deg v} x₁⊗v⊗S(x₂)y`.
pub struct Transport<'a> {
    pub hopf: &'a HopfData,
}

impl<'a> Transport<'a> {
    fn go(&self, x: &BimoduleElement, module: &GradedComodule, inverse: bool) -> Result<BimoduleElement, NcError> {
        let pres = self.hopf.presentation();
        let bichar = self.hopf.bichar();
        let mut out = Vec::with_capacity(x.len());
        for (k, xk) in x.iter().enumerate() {
            let dv = module.degrees[k];
            let mut acc = TensorPoly::zero(2);
            for (u, c) in xk.iter() {
                let d = self.hopf.apply_coproduct(&NcPoly::word(u[0].clone()), Arity::Two)?;
                for (parts, e) in d.iter() {
                    let twist = bichar.pow(pres.word_degree(&parts[1]), dv);
                    let mid = if inverse {
                        self.hopf.antipode_word(&parts[1])?
                    } else {
                        NcPoly::word(parts[1].clone())
                    };
                    let right = pres.multiply(&mid, &NcPoly::word(u[1].clone()))?;
                    let left = pres.normal_form(&NcPoly::word(parts[0].clone()))?;
                    acc.add_scaled(&TensorPoly::pure(&[left, right]), &(&(c * e) * &twist));
                }
            }
            out.push(acc);
        }
        Ok(out)
    }

    pub fn forward(&self, x: &BimoduleElement, module: &GradedComodule) -> Result<BimoduleElement, NcError> {
        self.go(x, module, false)
    }

    pub fn inverse(&self, x: &BimoduleElement, module: &GradedComodule) -> Result<BimoduleElement, NcError> {
        self.go(x, module, true)
    }
}

/// `φ ⊗ id` on `(A⊗V)⊠A`: acts on the left factor only.
fn phi_tensor_id(pres: &Presentation, m: &PolyMatrix, x: &BimoduleElement) -> Result<BimoduleElement, NcError> {
    let mut out = vec![TensorPoly::zero(2); m.cols];
    for (j, xj) in x.iter().enumerate() {
        for (k, slot) in out.iter_mut().enumerate() {
            let e = m.get(j, k);
            if e.is_zero() {
                continue;
            }
            for (u, c) in xj.iter() {
                let l = pres.multiply(&NcPoly::word(u[0].clone()), e)?;
                let r = NcPoly::word(u[1].clone());
                slot.add_scaled(&TensorPoly::pure(&[l, r]), c);
            }
        }
    }
    Ok(out)
}

fn basis_element(rank: usize, j: usize, l: &Word, r: &Word, one: &Scalar) -> BimoduleElement {
    let mut x = vec![TensorPoly::zero(2); rank];
    x[j].add_term(vec![l.clone(), r.clone()], one.clone());
    x
}

/// Builds `D_i` from `φ_i` and validates the result.
///
/// The entry of `D_i` at (source `e_j`, target `e_k`) for a `φ_i` entry `u`
/// is `Σ ξ^{deg(u₂)·deg(e_k)} u₁ ⊗ S(u₂)`.
pub fn transport_to_bimodule_resolution(
    cx: &FreeComplex,
    hopf: &HopfData,
) -> Result<(Vec<BimoduleMap>, Report), NcError> {
    let pres = hopf.presentation();
    let bichar = hopf.bichar();
    let one = pres.params().one();
    let mut maps = Vec::new();
    for (i, m) in cx.maps.iter().enumerate() {
        let tgt = &cx.modules[i];
        let mut entries = Vec::with_capacity(m.rows * m.cols);
        for j in 0..m.rows {
            for k in 0..m.cols {
                let d = hopf.apply_coproduct(m.get(j, k), Arity::Two)?;
                let mut acc = TensorPoly::zero(2);
                for (parts, c) in d.iter() {
                    let twist = bichar.pow(pres.word_degree(&parts[1]), tgt.degrees[k]);
                    let l = pres.normal_form(&NcPoly::word(parts[0].clone()))?;
                    let r = hopf.antipode_word(&parts[1])?;
                    acc.add_scaled(&TensorPoly::pure(&[l, r]), &(c * &twist));
                }
                entries.push(acc);
            }
        }
        maps.push(BimoduleMap {
            rows: m.rows,
            cols: m.cols,
            entries,
        });
    }

    let mut report = Report::new(format!("bimodule resolution over {}", pres.params()));
    for i in 1..maps.len() {
        let c = maps[i].then(pres, &maps[i - 1])?;
        report.check("D∘D", format!("D{}∘D{}", i, i + 1), c.is_zero(), || c.format(pres));
    }
    if let Some(d1) = maps.first() {
        for j in 0..d1.rows {
            let mut total = NcPoly::zero();
            for k in 0..d1.cols {
                total = total.add(&d1.get(j, k).collapse(pres)?);
            }
            report.check(
                "augmentation",
                format!("m∘D1({})", cx.modules[1].names[j]),
                total.is_zero(),
                || pres.format(&total),
            );
        }
    }
    // D_i agrees with f⁻¹∘(φ_i⊗id)∘f on x·e_j·y, so it is the bimodule map
    // transported from φ_i ⊗ id
    let samples: Vec<Word> = ["", "a", "b", "c", "d"]
        .iter()
        .map(|s| if s.is_empty() { Word::unit() } else { pres.word_of(&[s]).unwrap() })
        .collect();
    let right: Vec<Word> = samples.iter().take(3).cloned().collect();
    let tr = Transport { hopf };
    for (i, (m, d)) in cx.maps.iter().zip(&maps).enumerate() {
        let (src, tgt) = (&cx.modules[i + 1], &cx.modules[i]);
        let mut bad = Vec::new();
        let mut count = 0;
        for j in 0..m.rows {
            for x in &samples {
                for y in &right {
                    let e = basis_element(m.rows, j, x, y, &one);
                    let via = tr.inverse(&phi_tensor_id(pres, m, &tr.forward(&e, src)?)?, tgt)?;
                    let direct = d.apply(pres, &e)?;
                    count += 1;
                    if via != direct {
                        bad.push(format!("{}·{}·{}", pres.format_word(x), src.names[j], pres.format_word(y)));
                    }
                }
            }
        }
        report.check(
            "bimodule-linear",
            format!("D{} on {count} samples", i + 1),
            bad.is_empty(),
            || bad.join(", "),
        );
    }
    // f and f⁻¹ are mutually inverse on samples
    for module in [GradedComodule::v(), GradedComodule::w()] {
        let mut bad = Vec::new();
        for j in 0..module.rank() {
            for x in pres.enumerate_basis(2) {
                let e = basis_element(module.rank(), j, &x, &Word::unit(), &one);
                let a = tr.inverse(&tr.forward(&e, &module)?, &module)?;
                let b = tr.forward(&tr.inverse(&e, &module)?, &module)?;
                if a != e || b != e {
                    bad.push(format!("{}⊗{}", pres.format_word(&x), module.names[j]));
                }
            }
        }
        report.check(
            "transport-inverse",
            format!("f, f⁻¹ on A⊗{{{}}}", module.names.join(",")),
            bad.is_empty(),
            || bad.join(", "),
        );
    }
    Ok((maps, report))
}

/// H^*(A, _αk_β) from the transported bimodule complex.
pub fn hochschild_one_dimensional(
    pres: &Presentation,
    cx: &FreeComplex,
    maps: &[BimoduleMap],
    alpha: &Character,
    beta: &Character,
) -> ExtTable {
    let sizes: Vec<usize> = cx.modules.iter().map(|m| m.rank()).collect();
    let d: Vec<ScalarMatrix> = maps.iter().map(|m| m.evaluate(alpha, beta)).collect();
    ExtTable {
        dims: cohomology_dims(&sizes, &d),
        stratum: stratum(pres.params()),
        label: format!("H(A, {} k {})", alpha.name, beta.name),
    }
}
