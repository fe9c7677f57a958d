//! The line-by-line derivation checker.

use std::collections::BTreeSet;
use std::fmt;

use super::{Derivation, Justification};

/// Why a line was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RejectReason {
    EmptyDerivation,
    NotAnAxiomInstance,
    BadHypothesis,
    BadMP,
    BadGen,
    ForwardReference,
    GenOnHypothesisVariable,
}

impl fmt::Display for RejectReason {
    fn fmt(&self, w: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RejectReason::EmptyDerivation => "derivation has no lines",
            RejectReason::NotAnAxiomInstance => "formula is not the named axiom instance",
            RejectReason::BadHypothesis => "hypothesis index or formula mismatch",
            RejectReason::BadMP => "modus ponens premises do not fit",
            RejectReason::BadGen => "generalisation premise does not fit",
            RejectReason::ForwardReference => "justification cites this or a later line",
            RejectReason::GenOnHypothesisVariable => {
                "generalisation on a variable free in a used hypothesis"
            }
        };
        w.write_str(s)
    }
}

/// Outcome of checking: accepted, or the earliest failing line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Accepted,
    RejectedAt { line: usize, reason: RejectReason },
}

/// Checker output. `is_proof` holds exactly when the derivation was accepted
/// and carries no hypotheses: every accepted line of such a derivation is a
/// theorem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub verdict: Verdict,
    pub is_proof: bool,
}

impl CheckReport {
    pub fn accepted(&self) -> bool {
        self.verdict == Verdict::Accepted
    }

    fn rejected(line: usize, reason: RejectReason) -> CheckReport {
        CheckReport {
            verdict: Verdict::RejectedAt { line, reason },
            is_proof: false,
        }
    }
}

/// Checks every line of `d` against its justification.
///
/// A line is good when it is a hypothesis, the exact instance its axiom
/// record denotes, or follows from strictly earlier lines by modus ponens or
/// generalisation. Generalisation on a variable with a free occurrence in any
/// hypothesis the premise actually depends on is rejected, so accepted
/// derivations always satisfy the deduction theorem's side condition.
pub fn check(d: &Derivation) -> CheckReport {
    if d.lines.is_empty() {
        return CheckReport::rejected(0, RejectReason::EmptyDerivation);
    }
    // deps[i]: hypothesis indices line i transitively depends on.
    let mut deps: Vec<BTreeSet<usize>> = Vec::with_capacity(d.lines.len());
    for (i, line) in d.lines.iter().enumerate() {
        let dep = match &line.justification {
            Justification::Logical(ax) => match ax.formula() {
                Some(f) if f == line.formula => BTreeSet::new(),
                _ => return CheckReport::rejected(i, RejectReason::NotAnAxiomInstance),
            },
            Justification::Pa(ax) => match ax.formula() {
                Some(f) if f == line.formula => BTreeSet::new(),
                _ => return CheckReport::rejected(i, RejectReason::NotAnAxiomInstance),
            },
            Justification::Hypothesis(k) => {
                if d.hypotheses.get(*k) != Some(&line.formula) {
                    return CheckReport::rejected(i, RejectReason::BadHypothesis);
                }
                BTreeSet::from([*k])
            }
            Justification::ModusPonens(ante, imp) => {
                if *ante >= i || *imp >= i {
                    return CheckReport::rejected(i, RejectReason::ForwardReference);
                }
                let expected = d.lines[*ante]
                    .formula
                    .clone()
                    .implies(line.formula.clone());
                if d.lines[*imp].formula != expected {
                    return CheckReport::rejected(i, RejectReason::BadMP);
                }
                deps[*ante].union(&deps[*imp]).copied().collect()
            }
            Justification::Generalisation(premise, var) => {
                if *premise >= i {
                    return CheckReport::rejected(i, RejectReason::ForwardReference);
                }
                let expected = crate::syntax::Formula::forall(*var, d.lines[*premise].formula.clone());
                if line.formula != expected {
                    return CheckReport::rejected(i, RejectReason::BadGen);
                }
                for k in &deps[*premise] {
                    if d.hypotheses[*k].has_free(*var) {
                        return CheckReport::rejected(i, RejectReason::GenOnHypothesisVariable);
                    }
                }
                deps[*premise].clone()
            }
        };
        deps.push(dep);
    }
    CheckReport {
        verdict: Verdict::Accepted,
        is_proof: d.hypotheses.is_empty(),
    }
}
