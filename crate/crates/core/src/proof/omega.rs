//! Finite evidence scan for the omega-inconsistency pattern.
//!
//! Omega-consistency fails when some `~forall x. F(x)` is provable while
//! `F(n)` is provable for every numeral `n`. Over a finite corpus only finite
//! evidence exists: this scan reports every shape for which the corpus proves
//! the negated universal *and* every instance `F(0), ..., F(bound)`. It is
//! pure corpus analysis and proves nothing about PA itself.

use std::collections::BTreeSet;

use thiserror::Error;

use super::{check, Derivation};
use crate::syntax::{Formula, Term, VarIndex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OmegaScanError {
    #[error("corpus entry {index} is not an accepted hypothesis-free derivation")]
    UncheckedInput { index: usize },
}

/// One hit: the corpus proves `~forall var. body` and `body[n/var]` for all
/// `n <= bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaEvidence {
    pub var: VarIndex,
    pub body: Formula,
    pub negated_universal: Formula,
    pub bound: u64,
}

/// Scans the theorems (conclusions) of `corpus` for the pattern. Every entry
/// must be an accepted hypothesis-free derivation.
pub fn omega_evidence_scan(
    corpus: &[Derivation],
    bound: u64,
) -> Result<Vec<OmegaEvidence>, OmegaScanError> {
    for (index, d) in corpus.iter().enumerate() {
        let report = check(d);
        if !report.accepted() || !report.is_proof {
            return Err(OmegaScanError::UncheckedInput { index });
        }
    }
    let proved: BTreeSet<&Formula> = corpus.iter().filter_map(|d| d.conclusion()).collect();

    let mut hits = Vec::new();
    for f in &proved {
        let Formula::Not(inner) = f else { continue };
        let Formula::ForAll(var, body) = inner.as_ref() else {
            continue;
        };
        let all_instances = (0..=bound).all(|n| {
            body.substitute(*var, &Term::numeral(n))
                .map(|inst| proved.contains(&inst))
                .unwrap_or(false)
        });
        if all_instances {
            hits.push(OmegaEvidence {
                var: *var,
                body: body.as_ref().clone(),
                negated_universal: (*f).clone(),
                bound,
            });
        }
    }
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::proof::{Justification, Line, PaAxiom, ProofBuilder};
    use crate::syntax::parse_formula;

    fn p(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    /// Proof of F(0) where F(x1) := ~(x1 = 0''): a PA3 instance.
    fn f_at_zero() -> Derivation {
        let mut b = ProofBuilder::new();
        b.pa(PaAxiom::Pa3 { t1: Term::numeral(1) });
        b.finish()
    }

    /// Proof of F(1) = ~(0' = 0''): modus tollens on PA4 and PA3.
    fn f_at_one() -> Derivation {
        let mut b = ProofBuilder::new();
        let imp = b.pa(PaAxiom::Pa4 {
            t1: Term::Zero,
            t2: Term::numeral(1),
        });
        let neg = b.pa(PaAxiom::Pa3 { t1: Term::Zero });
        b.modus_tollens(imp, neg);
        b.finish()
    }

    /// Proof of ~forall x1. F(x1) = ~forall x1. ~(x1 = 0''): existential
    /// introduction from the witness 0''.
    fn negated_universal() -> Derivation {
        let mut b = ProofBuilder::new();
        let refl = b.eq_refl(&Term::numeral(2));
        b.exists_intro(refl, 1, &p("(x1 = 0'')"), &Term::numeral(2));
        b.finish()
    }

    #[test]
    fn no_negated_universal_means_empty_report() {
        let mut b = ProofBuilder::new();
        b.pa(PaAxiom::literal(5));
        assert_eq!(omega_evidence_scan(&[b.finish()], 5).unwrap(), vec![]);
    }

    #[test]
    fn full_pattern_is_one_hit() {
        let corpus = vec![f_at_zero(), f_at_one(), negated_universal()];
        let hits = omega_evidence_scan(&corpus, 1).unwrap();
        assert_eq!(hits.len(), 1);
        assert_eq!(hits[0].var, 1);
        assert_eq!(hits[0].body, p("~(x1 = 0'')"));
        assert_eq!(hits[0].negated_universal, p("~ forall x1 . ~(x1 = 0'')"));
    }

    #[test]
    fn missing_instance_means_no_hit() {
        let corpus = vec![f_at_zero(), negated_universal()];
        assert_eq!(omega_evidence_scan(&corpus, 1).unwrap(), vec![]);
    }

    #[test]
    fn rejects_unchecked_corpus() {
        let bogus = Derivation::new(
            vec![],
            vec![Line::new(p("(0 = 0')"), Justification::Pa(PaAxiom::literal(5)))],
        );
        assert!(matches!(
            omega_evidence_scan(&[bogus], 1),
            Err(OmegaScanError::UncheckedInput { index: 0 })
        ));
    }

    #[test]
    fn rejects_derivations_with_hypotheses() {
        let f = p("(0 = 0)");
        let d = Derivation::new(
            vec![f.clone()],
            vec![Line::new(f, Justification::Hypothesis(0))],
        );
        assert!(matches!(
            omega_evidence_scan(&[d], 1),
            Err(OmegaScanError::UncheckedInput { index: 0 })
        ));
    }
}
