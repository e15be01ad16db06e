use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawCheck {
    pub law: String,
    pub holds: bool,
    pub detail: String,
}

/// A named list of law checks; it passes when every check holds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub subject: String,
    pub checks: Vec<LawCheck>,
}

impl LawReport {
    pub fn new(subject: impl Into<String>) -> Self {
        LawReport { subject: subject.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, law: impl Into<String>, holds: bool, detail: impl Into<String>) {
        self.checks.push(LawCheck { law: law.into(), holds, detail: detail.into() });
    }

    pub fn extend(&mut self, other: LawReport) {
        for mut c in other.checks {
            c.law = format!("{}: {}", other.subject, c.law);
            self.checks.push(c);
        }
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }
}
