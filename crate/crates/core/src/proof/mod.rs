//! Hilbert-style proof checking for PA.
//!
//! A [`Derivation`] is an ordered list of hypotheses followed by justified
//! lines. Each line carries an explicit [`Justification`]: the checker
//! verifies instantiation records, it never searches for them. A derivation
//! with no hypotheses whose every line checks is a proof.

mod axioms;
mod check;
mod deduction;
mod derive;
mod file;
mod omega;

pub use axioms::{
    is_logical_axiom_instance, is_pa_axiom_instance, pa_axiom_formula, LogicalAxiom, PaAxiom,
};
pub use check::{check, CheckReport, RejectReason, Verdict};
pub use deduction::{deduction_transform, DeductionError};
pub use derive::ProofBuilder;
pub use file::{parse_derivation, render_derivation, ProofFileError};
pub use omega::{omega_evidence_scan, OmegaEvidence, OmegaScanError};

use crate::syntax::{Formula, VarIndex};

/// Why a derivation line is claimed to hold.
///
/// Line references are zero-based indices into the line list and must point
/// strictly earlier. `ModusPonens(i, j)` cites the antecedent at line `i`
/// and the implication at line `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Justification {
    Logical(LogicalAxiom),
    Pa(PaAxiom),
    Hypothesis(usize),
    ModusPonens(usize, usize),
    Generalisation(usize, VarIndex),
}

/// One checked line: the formula and its claimed justification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Line {
    pub formula: Formula,
    pub justification: Justification,
}

impl Line {
    pub fn new(formula: Formula, justification: Justification) -> Self {
        Line {
            formula,
            justification,
        }
    }
}

/// A justified sequence of formulas, possibly under hypotheses.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Derivation {
    pub hypotheses: Vec<Formula>,
    pub lines: Vec<Line>,
}

impl Derivation {
    pub fn new(hypotheses: Vec<Formula>, lines: Vec<Line>) -> Self {
        Derivation { hypotheses, lines }
    }

    /// The formula the derivation establishes (its last line), if any.
    pub fn conclusion(&self) -> Option<&Formula> {
        self.lines.last().map(|l| &l.formula)
    }

    /// The sequence of line formulas, in order.
    pub fn formulas(&self) -> impl Iterator<Item = &Formula> {
        self.lines.iter().map(|l| &l.formula)
    }
}
