use std::collections::HashMap;

use super::{NcError, NcPoly, Presentation, Word};
use crate::scalar::Scalar;

impl Presentation {
    /// Irreducible words of length `<= max_len`, sorted in the word order.
    pub fn enumerate_basis(&self, max_len: usize) -> Vec<Word> {
        let n = self.generators().len() as u8;
        let mut all = vec![Word::unit()];
        let mut layer = vec![Word::unit()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &layer {
                for g in 0..n {
                    let mut v = w.0.clone();
                    v.push(g);
                    // only suffixes can create a new redex
                    let redex = self.rules().iter().any(|r| v.ends_with(&r.lhs.0));
                    if !redex {
                        next.push(Word(v));
                    }
                }
            }
            all.extend(next.iter().cloned());
            layer = next;
        }
        all.sort_by(|a, b| self.cmp_words(a, b));
        all
    }

    /// Count of irreducible words of length exactly `0..=max_len`, without storing them.
    pub fn basis_counts(&self, max_len: usize) -> Vec<usize> {
        let mut counts = vec![0usize; max_len + 1];
        for w in self.enumerate_basis(max_len) {
            counts[w.len()] += 1;
        }
        counts
    }

    pub fn truncation(&self, max_len: usize) -> Truncation {
        Truncation::new(self.enumerate_basis(max_len), self.params().zero())
    }
}

/// A finite list of normal words (e.g. the filtration piece `F_d`) with coordinate maps.
#[derive(Clone, Debug)]
pub struct Truncation {
    words: Vec<Word>,
    index: HashMap<Word, usize>,
    zero: Scalar,
}

impl Truncation {
    pub fn new(words: Vec<Word>, zero: Scalar) -> Self {
        let index = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        Truncation { words, index, zero }
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn position(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Coefficient vector of an already-reduced element.
    pub fn coordinates_of_normal(&self, pres: &Presentation, x: &NcPoly) -> Result<Vec<Scalar>, NcError> {
        let mut v = vec![self.zero.clone(); self.words.len()];
        for (w, c) in x.iter() {
            let i = self
                .position(w)
                .ok_or_else(|| NcError::OutOfTruncation(pres.format_word(w)))?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    /// Reduces `x` and returns its coefficients in basis order.
    pub fn coordinates(&self, pres: &Presentation, x: &NcPoly) -> Result<Vec<Scalar>, NcError> {
        self.coordinates_of_normal(pres, &pres.normal_form(x)?)
    }

    pub fn element(&self, coords: &[Scalar]) -> NcPoly {
        self.words
            .iter()
            .zip(coords)
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect()
    }
}
