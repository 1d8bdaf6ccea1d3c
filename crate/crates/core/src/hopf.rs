//! Braided Hopf structure maps and their axiom checks.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use rayon::prelude::*;

use crate::braided::{BraidedProduct, TensorPoly};
use crate::ncalg::{NcError, NcPoly, Presentation, Word};
use crate::report::Report;
use crate::scalar::{Bicharacter, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `(Δ⊗id)Δ`
    Left,
    /// `(id⊗Δ)Δ`
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Arity {
    Two,
    Three(Side),
}

/// Images of the generators under Δ, ε, S, together with the braiding.
pub struct HopfData {
    pres: Arc<Presentation>,
    bichar: Bicharacter,
    delta: Vec<TensorPoly>,
    counit: Vec<Scalar>,
    antipode: Vec<NcPoly>,
    delta_cache: RwLock<HashMap<Word, TensorPoly>>,
}

impl Clone for HopfData {
    fn clone(&self) -> Self {
        HopfData::new(
            self.pres.clone(),
            self.bichar.clone(),
            self.delta.clone(),
            self.counit.clone(),
            self.antipode.clone(),
        )
    }
}

impl std::fmt::Debug for HopfData {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("HopfData")
            .field("presentation", &self.pres.name())
            .field("xi", &self.bichar.xi().to_string())
            .finish()
    }
}

impl HopfData {
    /// Panics if the tables do not have one entry per generator.
    pub fn new(
        pres: Arc<Presentation>,
        bichar: Bicharacter,
        delta: Vec<TensorPoly>,
        counit: Vec<Scalar>,
        antipode: Vec<NcPoly>,
    ) -> Self {
        let n = pres.generators().len();
        assert!(delta.len() == n && counit.len() == n && antipode.len() == n);
        assert!(delta.iter().all(|t| t.arity() == 2));
        HopfData {
            pres,
            bichar,
            delta,
            counit,
            antipode,
            delta_cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn presentation_arc(&self) -> Arc<Presentation> {
        self.pres.clone()
    }

    pub fn bichar(&self) -> &Bicharacter {
        &self.bichar
    }

    pub fn product(&self) -> BraidedProduct<'_> {
        BraidedProduct::new(&self.pres, &self.bichar)
    }

    pub fn delta_of_generator(&self, g: u8) -> &TensorPoly {
        &self.delta[g as usize]
    }

    pub fn counit_of_generator(&self, g: u8) -> &Scalar {
        &self.counit[g as usize]
    }

    pub fn antipode_of_generator(&self, g: u8) -> &NcPoly {
        &self.antipode[g as usize]
    }

    /// Replaces Δ on one generator (used for mutation tests).
    pub fn with_delta(&self, g: u8, image: TensorPoly) -> HopfData {
        let mut delta = self.delta.clone();
        delta[g as usize] = image;
        HopfData::new(self.pres.clone(), self.bichar.clone(), delta, self.counit.clone(), self.antipode.clone())
    }

    fn one(&self) -> Scalar {
        self.pres.params().one()
    }

    /// Δ on a word of the free algebra, multiplicatively.
    pub fn delta_word(&self, w: &Word) -> Result<TensorPoly, NcError> {
        if w.is_empty() {
            return Ok(TensorPoly::unit(2, self.one()));
        }
        if let Some(t) = self.delta_cache.read().unwrap().get(w) {
            return Ok(t.clone());
        }
        let (last, init) = w.0.split_last().unwrap();
        let head = self.delta_word(&Word(init.to_vec()))?;
        let t = self
            .product()
            .multiply(&head, &self.delta[*last as usize].normalize(&self.pres)?)
            .map_err(|e| match e {
                crate::braided::BraidedError::Rewrite(e) => e,
                other => unreachable!("{other}"),
            })?;
        self.delta_cache.write().unwrap().insert(w.clone(), t.clone());
        Ok(t)
    }

    /// Δ (arity 2) or an iterated Δ (arity 3) of `x`, taken word by word
    /// without reducing `x` first.
    pub fn apply_coproduct(&self, x: &NcPoly, arity: Arity) -> Result<TensorPoly, NcError> {
        let mut out = TensorPoly::zero(2);
        for (w, c) in x.iter() {
            out.add_scaled(&self.delta_word(w)?, c);
        }
        match arity {
            Arity::Two => Ok(out),
            Arity::Three(side) => {
                let slot = if side == Side::Left { 0 } else { 1 };
                out.expand_slot(slot, |w| self.delta_word(w))
            }
        }
    }

    pub fn counit_word(&self, w: &Word) -> Scalar {
        w.0.iter().fold(self.one(), |acc, &g| &acc * &self.counit[g as usize])
    }

    pub fn counit(&self, x: &NcPoly) -> Scalar {
        x.iter()
            .fold(self.pres.params().zero(), |acc, (w, c)| &acc + &(c * &self.counit_word(w)))
    }

    /// S on a word via S(xy) = ξ^{deg x·deg y} S(y)S(x).
    pub fn antipode_word(&self, w: &Word) -> Result<NcPoly, NcError> {
        let degs: Vec<i64> = w.0.iter().map(|&g| self.pres.generators()[g as usize].degree).collect();
        let mut e = 0;
        for i in 0..degs.len() {
            for j in i + 1..degs.len() {
                e += degs[i] * degs[j];
            }
        }
        let mut acc = NcPoly::constant(self.bichar.pow(1, e));
        for &g in w.0.iter().rev() {
            acc = self.pres.multiply(&acc, &self.antipode[g as usize])?;
        }
        Ok(acc)
    }

    pub fn antipode(&self, x: &NcPoly) -> Result<NcPoly, NcError> {
        let mut out = NcPoly::zero();
        for (w, c) in x.iter() {
            out.add_scaled(&self.antipode_word(w)?, c);
        }
        self.pres.normal_form(&out)
    }

    pub fn antipode_squared(&self, x: &NcPoly) -> Result<NcPoly, NcError> {
        self.antipode(&self.antipode(x)?)
    }

    /// `m∘(S⊗id)∘Δ` or `m∘(id⊗S)∘Δ` applied to `x`.
    pub fn convolution(&self, x: &NcPoly, antipode_slot: usize) -> Result<NcPoly, NcError> {
        let d = self.apply_coproduct(x, Arity::Two)?;
        let s = d.map_slot(antipode_slot, |w| self.antipode_word(w))?;
        s.collapse(&self.pres)
    }

    fn rule_witness(&self, i: usize) -> String {
        let r = &self.pres.rules()[i];
        format!("{} = {}", self.pres.format_word(&r.lhs), self.pres.format(&r.rhs))
    }

    fn rule_difference(&self, i: usize) -> NcPoly {
        let r = &self.pres.rules()[i];
        NcPoly::word(r.lhs.clone()).sub(&r.rhs)
    }

    /// Bialgebra checks: Δ and ε respect relations, coassociativity, counit laws.
    pub fn verify_bialgebra(&self) -> Report {
        let mut report = Report::new(format!("bialgebra axioms for {}", self.pres.name()));
        let pres = &*self.pres;
        let rules: Vec<usize> = (0..pres.rules().len()).collect();
        let rel: Vec<_> = rules
            .par_iter()
            .map(|&i| (i, self.apply_coproduct(&self.rule_difference(i), Arity::Two)))
            .collect();
        for (i, res) in rel {
            match res {
                Ok(t) => report.check("delta-relation", self.rule_witness(i), t.is_zero(), || t.format(pres)),
                Err(e) => report.fail("delta-relation", self.rule_witness(i), e.to_string()),
            }
        }
        for i in rules {
            let v = self.counit(&self.rule_difference(i));
            report.check("counit-relation", self.rule_witness(i), v.is_zero(), || v.to_string());
        }
        let words = pres.enumerate_basis(3);
        let checks: Vec<_> = words
            .par_iter()
            .map(|w| {
                let x = NcPoly::word(w.clone());
                let coassoc = (|| {
                    let l = self.apply_coproduct(&x, Arity::Three(Side::Left))?;
                    let r = self.apply_coproduct(&x, Arity::Three(Side::Right))?;
                    Ok::<_, NcError>(l.sub(&r))
                })();
                let counit = (|| {
                    let d = self.apply_coproduct(&x, Arity::Two)?;
                    let mut res = Vec::new();
                    for slot in 0..2 {
                        let mapped = d.map_slot(slot, |u| {
                            Ok::<_, NcError>(NcPoly::constant(self.counit_word(u)))
                        })?;
                        res.push(mapped.collapse(pres)?.sub(&x));
                    }
                    Ok::<_, NcError>(res)
                })();
                (w, coassoc, counit)
            })
            .collect();
        for (w, coassoc, counit) in checks {
            let name = pres.format_word(w);
            match coassoc {
                Ok(t) => report.check("coassociativity", name.clone(), t.is_zero(), || t.format(pres)),
                Err(e) => report.fail("coassociativity", name.clone(), e.to_string()),
            }
            match counit {
                Ok(res) => {
                    for (side, r) in ["left", "right"].iter().zip(res) {
                        report.check(&format!("counit-{side}"), name.clone(), r.is_zero(), || pres.format(&r));
                    }
                }
                Err(e) => report.fail("counit-left", name, e.to_string()),
            }
        }
        report
    }

    /// Antipode checks on basis words up to `max_len`, plus the braided
    /// anti-multiplicativity of S on pairs of short basis words.
    pub fn verify_antipode(&self, max_len: usize) -> Report {
        let mut report = Report::new(format!("antipode axioms for {} (max_len {max_len})", self.pres.name()));
        let pres = &*self.pres;
        for i in 0..pres.rules().len() {
            match self.antipode(&self.rule_difference(i)) {
                Ok(r) => report.check("antipode-relation", self.rule_witness(i), r.is_zero(), || pres.format(&r)),
                Err(e) => report.fail("antipode-relation", self.rule_witness(i), e.to_string()),
            }
        }
        let words = pres.enumerate_basis(max_len);
        let results: Vec<_> = words
            .par_iter()
            .map(|w| {
                let x = NcPoly::word(w.clone());
                let expected = NcPoly::constant(self.counit_word(w));
                let r = (0..2)
                    .map(|slot| self.convolution(&x, slot).map(|v| v.sub(&expected)))
                    .collect::<Result<Vec<_>, _>>();
                (w, r)
            })
            .collect();
        for (w, r) in results {
            let name = pres.format_word(w);
            match r {
                Ok(res) => {
                    for (axiom, v) in ["S*id", "id*S"].iter().zip(res) {
                        report.check(axiom, name.clone(), v.is_zero(), || pres.format(&v));
                    }
                }
                Err(e) => report.fail("S*id", name, e.to_string()),
            }
        }
        let short = pres.enumerate_basis(2);
        let pairs: Vec<(&Word, &Word)> = short.iter().flat_map(|x| short.iter().map(move |y| (x, y))).collect();
        let anti: Vec<_> = pairs
            .par_iter()
            .map(|(x, y)| {
                let r = (|| {
                    let (xp, yp) = (NcPoly::word((*x).clone()), NcPoly::word((*y).clone()));
                    let lhs = self.antipode(&pres.multiply(&xp, &yp)?)?;
                    let twist = self.bichar.pow(pres.word_degree(x), pres.word_degree(y));
                    let rhs = pres.multiply(&self.antipode(&yp)?, &self.antipode(&xp)?)?.scale(&twist);
                    Ok::<_, NcError>(lhs.sub(&rhs))
                })();
                (x, y, r)
            })
            .collect();
        for (x, y, r) in anti {
            let name = format!("({})({})", pres.format_word(x), pres.format_word(y));
            match r {
                Ok(v) => report.check("S-anti-multiplicative", name, v.is_zero(), || pres.format(&v)),
                Err(e) => report.fail("S-anti-multiplicative", name, e.to_string()),
            }
        }
        report
    }
}
