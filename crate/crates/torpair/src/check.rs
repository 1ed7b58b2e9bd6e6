//! Constraint outcomes shared by every checker: which rule, pass or fail,
//! and the witness that makes a failure re-checkable.

use serde::Serialize;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Lemma {
    /// Well-formedness: involution, labels, Euler count, trivial loops.
    Structure,
    ParityRule,
    /// Family size bounds (both the q >= 4 bounds and the q = 2 ones).
    FamilyBounds,
    BothParallel,
    /// Cyclic order of shared endpoints agrees on both boundaries.
    Jumping,
    /// Stronger reading of the jumping lemma: corner arcs across one annulus
    /// of the solid torus preserve order.
    ArcOrder,
    SigmaOrbits,
    Scharlemann,
    Consec,
    Schsupp,
    KleinBottle,
    Surgery,
}

impl Lemma {
    pub fn id(self) -> &'static str {
        match self {
            Lemma::Structure => "structure",
            Lemma::ParityRule => "parity-rule",
            Lemma::FamilyBounds => "family-bounds",
            Lemma::BothParallel => "both-parallel",
            Lemma::Jumping => "jumping",
            Lemma::ArcOrder => "arc-order",
            Lemma::SigmaOrbits => "sigma-orbits",
            Lemma::Scharlemann => "scharlemann",
            Lemma::Consec => "consec",
            Lemma::Schsupp => "schsupp",
            Lemma::KleinBottle => "klein-bottle",
            Lemma::Surgery => "surgery",
        }
    }

    pub fn all() -> &'static [Lemma] {
        &[
            Lemma::Structure,
            Lemma::ParityRule,
            Lemma::FamilyBounds,
            Lemma::BothParallel,
            Lemma::Jumping,
            Lemma::ArcOrder,
            Lemma::SigmaOrbits,
            Lemma::Scharlemann,
            Lemma::Consec,
            Lemma::Schsupp,
            Lemma::KleinBottle,
            Lemma::Surgery,
        ]
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub lemma: Lemma,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clause: Option<String>,
    pub witness: Vec<String>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub note: String,
}

impl Check {
    pub fn pass(lemma: Lemma) -> Self {
        Check { lemma, pass: true, clause: None, witness: vec![], note: String::new() }
    }
    pub fn fail(lemma: Lemma, witness: Vec<String>) -> Self {
        Check { lemma, pass: false, clause: None, witness, note: String::new() }
    }
    pub fn from_witness(lemma: Lemma, witness: Vec<String>) -> Self {
        if witness.is_empty() {
            Self::pass(lemma)
        } else {
            Self::fail(lemma, witness)
        }
    }
    pub fn clause(mut self, c: impl Into<String>) -> Self {
        self.clause = Some(c.into());
        self
    }
    pub fn note(mut self, n: impl Into<String>) -> Self {
        self.note = n.into();
        self
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.lemma, if self.pass { "pass" } else { "FAIL" })?;
        if let Some(c) = &self.clause {
            write!(f, " (clause {c})")?;
        }
        if !self.witness.is_empty() {
            write!(f, " [{}]", self.witness.join(", "))?;
        }
        if !self.note.is_empty() {
            write!(f, " {}", self.note)?;
        }
        Ok(())
    }
}
