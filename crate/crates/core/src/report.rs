//! Named verdict lists shared by every verifier.

use std::fmt;

use serde::ser::{Serialize, SerializeSeq, Serializer};

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Verdict {
    pub axiom: String,
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
    /// Set when the property was not evaluated because a prerequisite failed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

impl Verdict {
    pub fn pass(axiom: impl Into<String>) -> Self {
        Verdict {
            axiom: axiom.into(),
            holds: true,
            witness: None,
            skipped: None,
        }
    }

    pub fn fail(axiom: impl Into<String>, witness: Vec<usize>) -> Self {
        Verdict {
            axiom: axiom.into(),
            holds: false,
            witness: Some(witness),
            skipped: None,
        }
    }

    /// `counterexample` is `None` when the property holds.
    pub fn check(axiom: impl Into<String>, counterexample: Option<Vec<usize>>) -> Self {
        match counterexample {
            None => Verdict::pass(axiom),
            Some(w) => Verdict::fail(axiom, w),
        }
    }

    pub fn flag(axiom: impl Into<String>, holds: bool) -> Self {
        if holds {
            Verdict::pass(axiom)
        } else {
            Verdict::fail(axiom, Vec::new())
        }
    }

    pub fn skip(axiom: impl Into<String>, reason: impl Into<String>) -> Self {
        Verdict {
            axiom: axiom.into(),
            holds: false,
            witness: None,
            skipped: Some(reason.into()),
        }
    }

    pub fn is_skipped(&self) -> bool {
        self.skipped.is_some()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub verdicts: Vec<Verdict>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            verdicts: Vec::new(),
        }
    }

    pub fn push(&mut self, v: Verdict) {
        self.verdicts.push(v);
    }

    pub fn get(&self, axiom: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.axiom == axiom)
    }

    /// True when the named verdict exists, was evaluated, and holds.
    pub fn holds(&self, axiom: &str) -> bool {
        self.get(axiom).is_some_and(|v| v.holds && !v.is_skipped())
    }

    pub fn witness(&self, axiom: &str) -> Option<&[usize]> {
        self.get(axiom).and_then(|v| v.witness.as_deref())
    }

    /// Every evaluated verdict holds.
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds || v.is_skipped())
    }

    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| !v.holds && !v.is_skipped())
    }

    /// Appends another report's verdicts, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut v in other.verdicts {
            v.axiom = format!("{prefix}{}", v.axiom);
            self.verdicts.push(v);
        }
    }
}

impl Serialize for Report {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.verdicts.len()))?;
        for v in &self.verdicts {
            seq.serialize_element(v)?;
        }
        seq.end()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.title.is_empty() {
            writeln!(f, "{}", self.title)?;
        }
        for v in &self.verdicts {
            let status = match (&v.skipped, v.holds) {
                (Some(_), _) => "n/a ",
                (None, true) => "ok  ",
                (None, false) => "FAIL",
            };
            write!(f, "  [{status}] {}", v.axiom)?;
            if let Some(reason) = &v.skipped {
                write!(f, " ({reason})")?;
            }
            if let Some(w) = &v.witness {
                if !w.is_empty() {
                    write!(f, " witness {w:?}")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
