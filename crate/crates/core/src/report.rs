//! Pass/fail reports shared by all verification routines.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportEntry {
    pub axiom: String,
    pub witness: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub title: String,
    pub entries: Vec<ReportEntry>,
    /// Free-form facts established along the way (readings chosen, values found).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            ..Default::default()
        }
    }

    pub fn check(&mut self, axiom: &str, witness: impl Into<String>, pass: bool, residual: impl FnOnce() -> String) {
        self.entries.push(ReportEntry {
            axiom: axiom.to_string(),
            witness: witness.into(),
            pass,
            residual: if pass { None } else { Some(residual()) },
        });
    }

    pub fn pass(&mut self, axiom: &str, witness: impl Into<String>) {
        self.check(axiom, witness, true, String::new);
    }

    pub fn fail(&mut self, axiom: &str, witness: impl Into<String>, residual: impl Into<String>) {
        let r = residual.into();
        self.check(axiom, witness, false, || r);
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
        self.notes.extend(other.notes);
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }

    pub fn failures_for<'a>(&'a self, axiom: &'a str) -> impl Iterator<Item = &'a ReportEntry> + 'a {
        self.failures().filter(move |e| e.axiom == axiom)
    }

    pub fn count(&self, axiom: &str) -> usize {
        self.entries.iter().filter(|e| e.axiom == axiom).count()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failed = self.failures().count();
        writeln!(
            f,
            "{}: {} ({} checks, {} failed)",
            self.title,
            if failed == 0 { "PASS" } else { "FAIL" },
            self.entries.len(),
            failed
        )?;
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        for e in self.failures() {
            writeln!(
                f,
                "  FAIL [{}] {}: {}",
                e.axiom,
                e.witness,
                e.residual.as_deref().unwrap_or("")
            )?;
        }
        Ok(())
    }
}
