use serde::Serialize;

use super::{NcError, NcPoly, Presentation, Word};

/// An overlap ambiguity whose two reductions disagree.
#[derive(Clone, Debug, Serialize)]
pub struct UnresolvedOverlap {
    pub overlap: String,
    pub rules: (usize, usize),
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfluenceReport {
    pub presentation: String,
    pub overlaps_checked: usize,
    pub unresolved: Vec<UnresolvedOverlap>,
    /// Set when a branch ran out of rewrite steps.
    pub error: Option<String>,
}

impl ConfluenceReport {
    pub fn is_confluent(&self) -> bool {
        self.unresolved.is_empty() && self.error.is_none()
    }
}

struct Ambiguity {
    word: Word,
    rules: (usize, usize),
    left: NcPoly,
    right: NcPoly,
}

fn ambiguities(pres: &Presentation) -> Vec<Ambiguity> {
    let rules = pres.rules();
    let mut out = Vec::new();
    for (i, ri) in rules.iter().enumerate() {
        let l1 = &ri.lhs.0;
        for (j, rj) in rules.iter().enumerate() {
            let l2 = &rj.lhs.0;
            // suffix of l1 == prefix of l2, both remainders nonempty
            for k in 1..l1.len().min(l2.len()) {
                if l1[l1.len() - k..] == l2[..k] {
                    let u = Word(l1[..l1.len() - k].to_vec());
                    let w = Word(l2[k..].to_vec());
                    let word = Word(l1.clone()).concat(&w);
                    let left = ri.rhs.free_mul(&NcPoly::word(w));
                    let right = NcPoly::word(u).free_mul(&rj.rhs);
                    out.push(Ambiguity { word, rules: (i, j), left, right });
                }
            }
            // l2 occurs inside l1
            if i != j && l2.len() <= l1.len() {
                for s in 0..=l1.len() - l2.len() {
                    if l1[s..s + l2.len()] == l2[..] {
                        let u = NcPoly::word(Word(l1[..s].to_vec()));
                        let w = NcPoly::word(Word(l1[s + l2.len()..].to_vec()));
                        out.push(Ambiguity {
                            word: ri.lhs.clone(),
                            rules: (i, j),
                            left: ri.rhs.clone(),
                            right: u.free_mul(&rj.rhs).free_mul(&w),
                        });
                    }
                }
            }
        }
    }
    out
}

/// Resolves every overlap and inclusion ambiguity of the rule set.
pub(super) fn check(pres: &Presentation) -> ConfluenceReport {
    let amb = ambiguities(pres);
    let mut report = ConfluenceReport {
        presentation: pres.name().to_string(),
        overlaps_checked: amb.len(),
        unresolved: Vec::new(),
        error: None,
    };
    for a in amb {
        let resolved = (|| -> Result<Option<(NcPoly, NcPoly)>, NcError> {
            let l = pres.normal_form(&a.left)?;
            let r = pres.normal_form(&a.right)?;
            Ok(if l == r { None } else { Some((l, r)) })
        })();
        match resolved {
            Ok(None) => {}
            Ok(Some((l, r))) => report.unresolved.push(UnresolvedOverlap {
                overlap: pres.format_word(&a.word),
                rules: a.rules,
                left: pres.format(&l),
                right: pres.format(&r),
            }),
            Err(e) => {
                report.error = Some(format!("{}: {e}", pres.format_word(&a.word)));
                break;
            }
        }
    }
    report
}

impl Presentation {
    pub fn check_confluence(&self) -> ConfluenceReport {
        check(self)
    }
}
