//! Free algebras on graded alphabets and oriented rewriting.
//!
//! A [`Presentation`] carries generators (name, Z-degree, termination weight)
//! and rewrite rules `lhs -> rhs`. Words are compared by total weight, then
//! length, then lexicographically with the letter order given by the
//! declaration order of the generators. Every rule must strictly decrease in
//! that order and be degree-homogeneous; both are checked at construction.

mod basis;
mod confluence;
mod poly;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::RwLock;

use thiserror::Error;

use crate::scalar::{Params, Scalar};

pub use basis::Truncation;
pub use confluence::{ConfluenceReport, UnresolvedOverlap};
pub use poly::{NcPoly, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NcError {
    #[error("duplicate generator name {0:?}")]
    DuplicateGenerator(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("generator {0:?} needs a positive weight")]
    ZeroWeight(String),
    #[error("rule {0}: left-hand side must be a nonempty word")]
    EmptyLhs(usize),
    #[error("rule {rule}: monomial {monomial} is not smaller than the left-hand side {lhs}")]
    NotDecreasing { rule: usize, lhs: String, monomial: String },
    #[error("rule {rule}: monomial {monomial} has degree {found}, left-hand side has degree {expected}")]
    Inhomogeneous { rule: usize, monomial: String, expected: i64, found: i64 },
    #[error("rewriting exceeded the step budget of {0}")]
    NonTerminating(usize),
    #[error("monomial {0} lies outside the truncation")]
    OutOfTruncation(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorInfo {
    pub name: String,
    pub degree: i64,
    pub weight: u32,
}

impl GeneratorInfo {
    pub fn new(name: impl Into<String>, degree: i64, weight: u32) -> Self {
        GeneratorInfo {
            name: name.into(),
            degree,
            weight,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: NcPoly,
}

/// Result of [`Presentation::degree`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    /// All monomials share this degree (the zero polynomial reports 0).
    Degree(i64),
    NonHomogeneous,
}

pub const DEFAULT_STEP_BUDGET: usize = 5_000_000;

pub struct Presentation {
    name: String,
    params: Params,
    generators: Vec<GeneratorInfo>,
    rules: Vec<RewriteRule>,
    // rule indices keyed by the first letter of their lhs
    by_first: Vec<Vec<usize>>,
    step_budget: usize,
    cache: RwLock<HashMap<Word, NcPoly>>,
}

impl std::fmt::Debug for Presentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Presentation")
            .field("name", &self.name)
            .field("params", &self.params)
            .field("generators", &self.generators)
            .field("rules", &self.rules.len())
            .finish()
    }
}

impl Clone for Presentation {
    fn clone(&self) -> Self {
        Presentation {
            name: self.name.clone(),
            params: self.params.clone(),
            generators: self.generators.clone(),
            rules: self.rules.clone(),
            by_first: self.by_first.clone(),
            step_budget: self.step_budget,
            cache: RwLock::new(HashMap::new()),
        }
    }
}

impl Presentation {
    pub fn new(
        name: impl Into<String>,
        params: Params,
        generators: Vec<GeneratorInfo>,
        rules: Vec<RewriteRule>,
    ) -> Result<Self, NcError> {
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].iter().any(|h| h.name == g.name) {
                return Err(NcError::DuplicateGenerator(g.name.clone()));
            }
            if g.weight == 0 {
                return Err(NcError::ZeroWeight(g.name.clone()));
            }
        }
        let mut by_first = vec![Vec::new(); generators.len()];
        let mut pres = Presentation {
            name: name.into(),
            params,
            generators,
            rules: Vec::new(),
            by_first: Vec::new(),
            step_budget: DEFAULT_STEP_BUDGET,
            cache: RwLock::new(HashMap::new()),
        };
        for (i, rule) in rules.iter().enumerate() {
            pres.validate_rule(i, rule)?;
            by_first[rule.lhs.0[0] as usize].push(i);
        }
        pres.rules = rules;
        pres.by_first = by_first;
        Ok(pres)
    }

    fn validate_rule(&self, i: usize, rule: &RewriteRule) -> Result<(), NcError> {
        if rule.lhs.is_empty() {
            return Err(NcError::EmptyLhs(i));
        }
        let check_word = |w: &Word| -> Result<(), NcError> {
            match w.0.iter().find(|&&g| g as usize >= self.generators.len()) {
                Some(g) => Err(NcError::UnknownGenerator(format!("#{g}"))),
                None => Ok(()),
            }
        };
        check_word(&rule.lhs)?;
        let expected = self.word_degree(&rule.lhs);
        for m in rule.rhs.words() {
            check_word(m)?;
            if self.cmp_words(m, &rule.lhs) != Ordering::Less {
                return Err(NcError::NotDecreasing {
                    rule: i,
                    lhs: self.format_word(&rule.lhs),
                    monomial: self.format_word(m),
                });
            }
            let found = self.word_degree(m);
            if found != expected {
                return Err(NcError::Inhomogeneous {
                    rule: i,
                    monomial: self.format_word(m),
                    expected,
                    found,
                });
            }
        }
        Ok(())
    }

    pub fn with_step_budget(mut self, budget: usize) -> Self {
        self.step_budget = budget;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn generators(&self) -> &[GeneratorInfo] {
        &self.generators
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn gen_index(&self, name: &str) -> Option<u8> {
        self.generators.iter().position(|g| g.name == name).map(|i| i as u8)
    }

    /// Word from generator names, e.g. `["a", "d"]`.
    pub fn word_of(&self, names: &[&str]) -> Result<Word, NcError> {
        names
            .iter()
            .map(|n| self.gen_index(n).ok_or_else(|| NcError::UnknownGenerator(n.to_string())))
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }

    /// The generator `name` as a polynomial. Panics on unknown names.
    pub fn g(&self, name: &str) -> NcPoly {
        let i = self
            .gen_index(name)
            .unwrap_or_else(|| panic!("unknown generator {name:?}"));
        NcPoly::word(Word::gen(i))
    }

    pub fn one(&self) -> NcPoly {
        NcPoly::constant(self.params.one())
    }

    pub fn scalar(&self, c: Scalar) -> NcPoly {
        NcPoly::constant(c)
    }

    pub fn word_degree(&self, w: &Word) -> i64 {
        w.0.iter().map(|&g| self.generators[g as usize].degree).sum()
    }

    pub fn word_weight(&self, w: &Word) -> u64 {
        w.0.iter().map(|&g| self.generators[g as usize].weight as u64).sum()
    }

    /// Weight, then length, then lexicographic by generator index.
    pub fn cmp_words(&self, a: &Word, b: &Word) -> Ordering {
        self.word_weight(a)
            .cmp(&self.word_weight(b))
            .then(a.len().cmp(&b.len()))
            .then_with(|| a.0.cmp(&b.0))
    }

    pub fn degree(&self, x: &NcPoly) -> Homogeneity {
        let mut it = x.words().map(|w| self.word_degree(w));
        let Some(first) = it.next() else {
            return Homogeneity::Degree(0);
        };
        if it.all(|d| d == first) {
            Homogeneity::Degree(first)
        } else {
            Homogeneity::NonHomogeneous
        }
    }

    /// Leftmost redex: `(position, rule index)`.
    pub(crate) fn find_redex(&self, w: &Word) -> Option<(usize, usize)> {
        for pos in 0..w.len() {
            for &r in &self.by_first[w.0[pos] as usize] {
                if w.0[pos..].starts_with(&self.rules[r].lhs.0) {
                    return Some((pos, r));
                }
            }
        }
        None
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.find_redex(w).is_none()
    }

    fn nf_word(&self, w: &Word, steps: &mut usize) -> Result<NcPoly, NcError> {
        if let Some(v) = self.cache.read().unwrap().get(w) {
            return Ok(v.clone());
        }
        let result = match self.find_redex(w) {
            None => NcPoly::word(w.clone()),
            Some((pos, r)) => {
                *steps += 1;
                if *steps > self.step_budget {
                    return Err(NcError::NonTerminating(self.step_budget));
                }
                let rule = &self.rules[r];
                let mut out = NcPoly::zero();
                for (m, c) in rule.rhs.iter() {
                    let next = w.splice(pos, rule.lhs.len(), m);
                    let sub = self.nf_word(&next, steps)?;
                    out.add_scaled(&sub, c);
                }
                out
            }
        };
        self.cache.write().unwrap().insert(w.clone(), result.clone());
        Ok(result)
    }

    /// Reduces `x` to its irreducible representative.
    pub fn normal_form(&self, x: &NcPoly) -> Result<NcPoly, NcError> {
        let mut steps = 0;
        let mut out = NcPoly::zero();
        for (w, c) in x.iter() {
            let nf = self.nf_word(w, &mut steps)?;
            out.add_scaled(&nf, c);
        }
        Ok(out)
    }

    /// [`normal_form`](Self::normal_form), panicking if the step budget runs out.
    pub fn reduce(&self, x: &NcPoly) -> NcPoly {
        self.normal_form(x).expect("rewriting step budget exceeded")
    }

    pub fn multiply(&self, x: &NcPoly, y: &NcPoly) -> Result<NcPoly, NcError> {
        self.normal_form(&x.free_mul(y))
    }

    /// [`multiply`](Self::multiply), panicking if the step budget runs out.
    pub fn mul(&self, x: &NcPoly, y: &NcPoly) -> NcPoly {
        self.reduce(&x.free_mul(y))
    }

    /// Product of a sequence of elements.
    pub fn product<'a>(&self, factors: impl IntoIterator<Item = &'a NcPoly>) -> NcPoly {
        let mut acc = self.one();
        for f in factors {
            acc = self.mul(&acc, f);
        }
        acc
    }

    /// `x^n` for `n >= 0`.
    pub fn pow(&self, x: &NcPoly, n: u32) -> NcPoly {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(&acc, x);
        }
        acc
    }

    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < w.len() {
            let g = w.0[i];
            let mut j = i;
            while j < w.len() && w.0[j] == g {
                j += 1;
            }
            let name = &self.generators[g as usize].name;
            if j - i == 1 {
                parts.push(name.clone());
            } else {
                parts.push(format!("{name}^{}", j - i));
            }
            i = j;
        }
        parts.join("*")
    }

    /// Pretty-prints in the expression grammar, terms ascending in word order.
    pub fn format(&self, x: &NcPoly) -> String {
        let mut terms: Vec<(&Word, &Scalar)> = x.iter().collect();
        terms.sort_by(|a, b| self.cmp_words(a.0, b.0));
        format_terms(terms.into_iter().map(|(w, c)| (self.format_word(w), w.is_empty(), c)))
    }
}

/// Shared sum printer: `(monomial text, is unit, coefficient)` triples.
pub(crate) fn format_terms<'a>(terms: impl Iterator<Item = (String, bool, &'a Scalar)>) -> String {
    let mut out = String::new();
    for (k, (mono, is_unit, c)) in terms.enumerate() {
        let negative = c.is_negative_monomial();
        let abs = if negative { -c } else { c.clone() };
        if k == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let coeff = if abs.is_compound() {
            format!("({abs})")
        } else {
            abs.to_string()
        };
        if is_unit {
            out.push_str(&coeff);
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            let _ = write!(out, "{coeff}*{mono}");
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Assembles a presentation from generator names and rule strings built by closures.
pub struct PresentationBuilder {
    name: String,
    params: Params,
    generators: Vec<GeneratorInfo>,
    rules: Vec<RewriteRule>,
}

impl PresentationBuilder {
    pub fn new(name: impl Into<String>, params: Params) -> Self {
        PresentationBuilder {
            name: name.into(),
            params,
            generators: Vec::new(),
            rules: Vec::new(),
        }
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn gen(mut self, name: &str, degree: i64, weight: u32) -> Self {
        self.generators.push(GeneratorInfo::new(name, degree, weight));
        self
    }

    /// Word from space- or `*`-separated generator names.
    pub fn w(&self, names: &str) -> Word {
        Word(
            names
                .split(|c: char| c == '*' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|n| {
                    self.generators
                        .iter()
                        .position(|g| g.name == n)
                        .unwrap_or_else(|| panic!("unknown generator {n:?}")) as u8
                })
                .collect(),
        )
    }

    /// Polynomial from `(coefficient, word)` pairs.
    pub fn poly(&self, terms: &[(Scalar, &str)]) -> NcPoly {
        terms.iter().map(|(c, w)| (self.w(w), c.clone())).collect()
    }

    pub fn rule(mut self, lhs: &str, rhs: &[(Scalar, &str)]) -> Self {
        let lhs = self.w(lhs);
        let rhs = self.poly(rhs);
        self.rules.push(RewriteRule { lhs, rhs });
        self
    }

    /// Copies every rule of `other`, matching generators by name.
    pub fn rules_from(mut self, other: &Presentation) -> Self {
        let map: Vec<u8> = other
            .generators()
            .iter()
            .map(|g| self.w(&g.name).0[0])
            .collect();
        let tr = |w: &Word| Word(w.letters().iter().map(|&g| map[g as usize]).collect());
        for r in other.rules() {
            let rhs = r.rhs.iter().map(|(w, c)| (tr(w), c.clone())).collect();
            self.rules.push(RewriteRule { lhs: tr(&r.lhs), rhs });
        }
        self
    }

    pub fn build(self) -> Result<Presentation, NcError> {
        Presentation::new(self.name, self.params, self.generators, self.rules)
    }
}
