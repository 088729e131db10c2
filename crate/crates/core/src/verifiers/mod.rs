//! Executable checks of the structural theorems about central S-rings.
//!
//! Every check returns a [`Diagnosis`] with a three-valued verdict. A
//! hypothesis that does not apply gives [`Verdict::OutOfScope`]; only a
//! failed conclusion gives [`Verdict::Refuted`], and that always carries a
//! witness.

mod constructions;
mod lemmas;
mod suite;
mod theorems;

use serde::Serialize;
use thiserror::Error;

use crate::group::{ElementSet, Group, GroupError, Subgroup};
use crate::rationality::RationalityError;
use crate::ring::RingError;
use crate::sring::{SRing, SRingError};

pub use constructions::{
    build_product_rank3, generalized_b_group_diagnostic, paley_set, skew_hadamard_rank3,
};
pub use lemmas::{check_centralizer_congruence, check_coset_lemma, check_multiplier_congruence};
pub use suite::{run_suite, Suite, SuiteConfig};
pub use theorems::{
    camina_b_group_check, camina_pairs, separating_subgroup_check, separating_subgroup_survey,
    simple_group_witness, wielandt_central_check, CaminaPair, SeparationInstance,
};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("set is not skew: {0}")]
    NotSkew(String),
    #[error("product identity fails at element {element}: expected {expected}, found {found}")]
    IdentityFails { element: usize, expected: String, found: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    SRing(#[from] SRingError),
    #[error(transparent)]
    Rationality(#[from] RationalityError),
}

pub type Result<T, E = VerifyError> = std::result::Result<T, E>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Confirmed,
    Refuted,
    OutOfScope,
}

/// Structured evidence attached to a diagnosis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    SRing { basic_sets: Vec<Vec<usize>>, rank: usize, central: bool, primitive: bool },
    Subgroup { label: String, members: Vec<usize> },
    Set { label: String, elements: Vec<usize> },
    Element { label: String, element: usize },
    Coefficient { label: String, element: usize, expected: String, found: String },
    Congruence { class: usize, prime: u64, target: usize, residue: u64, expected: u64 },
}

impl Witness {
    pub fn sring(a: &SRing) -> Self {
        Witness::SRing {
            basic_sets: a.canonical_form(),
            rank: a.rank(),
            central: a.is_central(),
            primitive: a.is_primitive(),
        }
    }

    pub fn subgroup(label: impl Into<String>, h: &Subgroup) -> Self {
        Witness::Subgroup { label: label.into(), members: h.members.as_slice().to_vec() }
    }

    pub fn set(label: impl Into<String>, x: &ElementSet) -> Self {
        Witness::Set { label: label.into(), elements: x.as_slice().to_vec() }
    }
}

/// `{ "check", "subject", "verdict", "witnesses", "notes", "elapsed_ms"? }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diagnosis {
    pub check: String,
    pub subject: String,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    /// Whether a refutation contradicts a proved statement.
    #[serde(skip)]
    pub theorem: bool,
}

impl Diagnosis {
    fn new(check: &str, subject: impl Into<String>) -> Self {
        Diagnosis {
            check: check.to_string(),
            subject: subject.into(),
            verdict: Verdict::Confirmed,
            witnesses: Vec::new(),
            notes: Vec::new(),
            elapsed_ms: None,
            theorem: true,
        }
    }

    fn note(mut self, text: impl Into<String>) -> Self {
        self.notes.push(text.into());
        self
    }

    fn out_of_scope(mut self, reason: impl Into<String>) -> Self {
        self.verdict = Verdict::OutOfScope;
        self.notes.push(reason.into());
        self
    }

    /// Records a counterexample and marks the diagnosis refuted.
    fn refute(&mut self, w: Witness) {
        self.verdict = Verdict::Refuted;
        self.witnesses.push(w);
    }

    /// A refuted check whose statement is a theorem: an implementation bug.
    pub fn is_fatal(&self) -> bool {
        self.theorem && self.verdict == Verdict::Refuted
    }
}

/// Display name used as the subject of group-level diagnoses.
pub fn subject(g: &Group) -> String {
    match g.family() {
        Some(f) => f.to_string(),
        None => format!("group of order {}", g.order()),
    }
}
