//! n-fold braided tensor powers of a Z-graded presented algebra.
//!
//! Multiplication of `u_1⊗…⊗u_n` by `v_1⊗…⊗v_n` moves each `v_j` leftwards
//! past `u_i` for all `i > j`, picking up `ξ^{deg(u_i)·deg(v_j)}`.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::ncalg::{format_terms, NcError, NcPoly, Presentation, Word};
use crate::scalar::{Bicharacter, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidedError {
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error(transparent)]
    Rewrite(#[from] NcError),
}

/// Element of `A^{⊗n}`: a linear combination of word tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorPoly {
    arity: usize,
    terms: BTreeMap<Vec<Word>, Scalar>,
}

impl TensorPoly {
    pub fn zero(arity: usize) -> Self {
        assert!(arity >= 1, "arity must be positive");
        TensorPoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(arity: usize, one: Scalar) -> Self {
        let mut t = TensorPoly::zero(arity);
        t.add_term(vec![Word::unit(); arity], one);
        t
    }

    /// `x_1 ⊗ … ⊗ x_n`, expanded multilinearly (no reduction).
    pub fn pure(slots: &[NcPoly]) -> Self {
        let mut acc: Vec<(Vec<Word>, Scalar)> = vec![(Vec::new(), Scalar::one())];
        for s in slots {
            let mut next = Vec::new();
            for (ws, c) in &acc {
                for (w, d) in s.iter() {
                    let mut ws = ws.clone();
                    ws.push(w.clone());
                    next.push((ws, c * d));
                }
            }
            acc = next;
        }
        let mut t = TensorPoly::zero(slots.len());
        for (ws, c) in acc {
            t.add_term(ws, c);
        }
        t
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<Word>, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, slots: &[Word]) -> Option<&Scalar> {
        self.terms.get(slots)
    }

    pub fn add_term(&mut self, slots: Vec<Word>, c: Scalar) {
        assert_eq!(slots.len(), self.arity, "slot count");
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&slots) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(slots, sum);
        }
    }

    pub fn add_scaled(&mut self, other: &TensorPoly, c: &Scalar) {
        assert_eq!(self.arity, other.arity, "arity");
        for (ws, x) in &other.terms {
            self.add_term(ws.clone(), x * c);
        }
    }

    pub fn add(&self, other: &TensorPoly) -> TensorPoly {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        out
    }

    pub fn sub(&self, other: &TensorPoly) -> TensorPoly {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::from_int(-1));
        out
    }

    pub fn scale(&self, c: &Scalar) -> TensorPoly {
        let mut out = TensorPoly::zero(self.arity);
        out.add_scaled(self, c);
        out
    }

    /// Applies a linear map to one slot.
    pub fn map_slot<E>(
        &self,
        slot: usize,
        mut f: impl FnMut(&Word) -> Result<NcPoly, E>,
    ) -> Result<TensorPoly, E> {
        let mut out = TensorPoly::zero(self.arity);
        for (ws, c) in &self.terms {
            for (w, d) in f(&ws[slot])?.iter() {
                let mut ws = ws.clone();
                ws[slot] = w.clone();
                out.add_term(ws, c * d);
            }
        }
        Ok(out)
    }

    /// Replaces slot `slot` by an arity-`k` tensor, giving arity `n + k - 1`.
    pub fn expand_slot<E>(
        &self,
        slot: usize,
        mut f: impl FnMut(&Word) -> Result<TensorPoly, E>,
    ) -> Result<TensorPoly, E> {
        let mut out: Option<TensorPoly> = None;
        for (ws, c) in &self.terms {
            let inner = f(&ws[slot])?;
            let acc = out.get_or_insert_with(|| TensorPoly::zero(self.arity + inner.arity - 1));
            for (vs, d) in inner.iter() {
                let mut slots = ws[..slot].to_vec();
                slots.extend(vs.iter().cloned());
                slots.extend(ws[slot + 1..].iter().cloned());
                acc.add_term(slots, c * d);
            }
        }
        Ok(out.unwrap_or_else(|| TensorPoly::zero(self.arity)))
    }

    /// Reduces each slot to normal form.
    pub fn normalize(&self, pres: &Presentation) -> Result<TensorPoly, NcError> {
        let mut out = self.clone();
        for slot in 0..self.arity {
            out = out.map_slot(slot, |w| pres.normal_form(&NcPoly::word(w.clone())))?;
        }
        Ok(out)
    }

    /// Multiplies slots together in order with the plain (untwisted) product.
    pub fn collapse(&self, pres: &Presentation) -> Result<NcPoly, NcError> {
        let mut out = NcPoly::zero();
        for (ws, c) in &self.terms {
            let w = ws.iter().fold(Word::unit(), |acc, w| acc.concat(w));
            out.add_term(w, c.clone());
        }
        pres.normal_form(&out)
    }

    pub fn format(&self, pres: &Presentation) -> String {
        let mut sorted: Vec<(&Vec<Word>, &Scalar)> = self.terms.iter().collect();
        sorted.sort_by(|a, b| {
            a.0.iter()
                .zip(b.0.iter())
                .map(|(x, y)| pres.cmp_words(x, y))
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
        });
        let terms: Vec<(String, &Scalar)> = sorted
            .into_iter()
            .map(|(ws, c)| {
                let inner: Vec<String> = ws.iter().map(|w| pres.format_word(w)).collect();
                (format!("({})", inner.join("|")), c)
            })
            .collect();
        format_terms(terms.iter().map(|(m, c)| (m.clone(), false, *c)))
    }
}

/// The braided tensor power algebra structure induced by a presentation and a bicharacter.
#[derive(Clone, Copy)]
pub struct BraidedProduct<'a> {
    pub pres: &'a Presentation,
    pub bichar: &'a Bicharacter,
}

impl<'a> BraidedProduct<'a> {
    pub fn new(pres: &'a Presentation, bichar: &'a Bicharacter) -> Self {
        BraidedProduct { pres, bichar }
    }

    /// Exponent of ξ for moving `right` past `left` (Σ_{i>j} deg u_i · deg v_j).
    pub fn crossing_exponent(&self, left: &[Word], right: &[Word]) -> i64 {
        let du: Vec<i64> = left.iter().map(|w| self.pres.word_degree(w)).collect();
        let dv: Vec<i64> = right.iter().map(|w| self.pres.word_degree(w)).collect();
        du.iter()
            .enumerate()
            .map(|(i, u)| dv.iter().take(i).map(|v| u * v).sum::<i64>())
            .sum()
    }

    pub fn multiply(&self, x: &TensorPoly, y: &TensorPoly) -> Result<TensorPoly, BraidedError> {
        if x.arity != y.arity {
            return Err(BraidedError::ArityMismatch(x.arity, y.arity));
        }
        let mut out = TensorPoly::zero(x.arity);
        for (us, c) in &x.terms {
            for (vs, d) in &y.terms {
                let twist = self.bichar.pow(1, self.crossing_exponent(us, vs));
                let coeff = &(c * d) * &twist;
                let slots: Vec<NcPoly> = us
                    .iter()
                    .zip(vs)
                    .map(|(u, v)| self.pres.normal_form(&NcPoly::word(u.concat(v))))
                    .collect::<Result<_, _>>()?;
                out.add_scaled(&TensorPoly::pure(&slots), &coeff);
            }
        }
        Ok(out)
    }

    pub fn mul(&self, x: &TensorPoly, y: &TensorPoly) -> TensorPoly {
        self.multiply(x, y).expect("braided product")
    }
}

/// Free-function form of [`BraidedProduct::multiply`].
pub fn braided_multiply(
    pres: &Presentation,
    bichar: &Bicharacter,
    x: &TensorPoly,
    y: &TensorPoly,
) -> Result<TensorPoly, BraidedError> {
    BraidedProduct::new(pres, bichar).multiply(x, y)
}

/// Splits `x` into Z-homogeneous parts.
pub fn homogeneous_components(pres: &Presentation, x: &NcPoly) -> BTreeMap<i64, NcPoly> {
    let mut out: BTreeMap<i64, NcPoly> = BTreeMap::new();
    for (w, c) in x.iter() {
        out.entry(pres.word_degree(w))
            .or_default()
            .add_term(w.clone(), c.clone());
    }
    out
}

/// Degrees occurring in a tensor, summed over slots.
pub fn total_degrees(pres: &Presentation, x: &TensorPoly) -> BTreeSet<i64> {
    x.iter()
        .map(|(ws, _)| ws.iter().map(|w| pres.word_degree(w)).sum())
        .collect()
}
