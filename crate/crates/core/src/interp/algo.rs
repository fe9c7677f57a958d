//! Budgeted three-valued evaluation and its provability-backed variant.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use super::prenex::{prenex_normal_form, Quantifier};
use super::{eval_qf, Assignment, EvalError, Verdict};
use crate::proof::{check, Derivation};
use crate::syntax::{Formula, Term, VarIndex};

/// How a quantifier-free matrix gets its truth value.
enum Base<'a> {
    /// Ordinary arithmetic over the naturals.
    Arithmetic,
    /// Membership of the closed instantiation in a proved-formula set.
    Corpus(&'a BTreeSet<Formula>),
}

/// Evaluates `f` under a probe budget.
///
/// The formula is brought to prenex form, then the prefix is scanned left to
/// right over `{0..budget}`:
///
/// * `forall x`: the first probe whose sub-verdict is definitively false
///   yields `FalseAt(n)`; if none is found the verdict is
///   `VerifiedUpTo(budget)` — never `True`.
/// * `exists x` (stored as `~forall x. ~..`): the first definitively true
///   probe yields `WitnessAt(n)`; otherwise `NoWitnessUpTo(budget)` — never
///   `False`.
/// * quantifier-free: exact `True`/`False`.
pub fn eval_algorithmic(f: &Formula, budget: u64, a: &Assignment) -> Result<Verdict, EvalError> {
    let pnf = prenex_normal_form(f);
    scan(&pnf.prefix, &pnf.matrix, budget, a, &Base::Arithmetic)
}

/// Evaluates a closed `f` against a corpus of checked proofs.
///
/// The base notion is (7c)/(8c)-style: a quantifier-free matrix, fully
/// instantiated with numerals, is satisfied exactly when that closed formula
/// is among the corpus conclusions. Quantifiers behave as in
/// [`eval_algorithmic`]. Everything is relative to the corpus: `False` means
/// "not proved here", not refuted.
pub fn eval_godelian(
    f: &Formula,
    corpus: &[Derivation],
    budget: u64,
) -> Result<Verdict, EvalError> {
    if !f.is_closed() {
        return Err(EvalError::OpenFormula);
    }
    for (index, d) in corpus.iter().enumerate() {
        let report = check(d);
        if !report.accepted() || !report.is_proof {
            return Err(EvalError::UncheckedCorpus { index });
        }
    }
    let proved: BTreeSet<Formula> = corpus
        .iter()
        .filter_map(|d| d.conclusion().cloned())
        .collect();
    let pnf = prenex_normal_form(f);
    scan(&pnf.prefix, &pnf.matrix, budget, &Assignment::new(), &Base::Corpus(&proved))
}

fn scan(
    prefix: &[(Quantifier, VarIndex)],
    matrix: &Formula,
    budget: u64,
    a: &Assignment,
    base: &Base<'_>,
) -> Result<Verdict, EvalError> {
    let Some(((q, v), rest)) = prefix.split_first() else {
        let truth = match base {
            Base::Arithmetic => eval_qf(matrix, a)?,
            Base::Corpus(proved) => instantiated_member(matrix, a, proved)?,
        };
        return Ok(if truth { Verdict::True } else { Verdict::False });
    };
    let mut scoped = a.clone();
    match q {
        Quantifier::All => {
            for n in 0..=budget {
                scoped.insert(*v, BigUint::from(n));
                if scan(rest, matrix, budget, &scoped, base)?.is_definitive_false() {
                    return Ok(Verdict::FalseAt(n));
                }
            }
            Ok(Verdict::VerifiedUpTo(budget))
        }
        Quantifier::Ex => {
            for n in 0..=budget {
                scoped.insert(*v, BigUint::from(n));
                if scan(rest, matrix, budget, &scoped, base)?.is_definitive_true() {
                    return Ok(Verdict::WitnessAt(n));
                }
            }
            Ok(Verdict::NoWitnessUpTo(budget))
        }
    }
}

/// Substitutes the assignment's numerals into the matrix and tests
/// membership. The input formula was closed, so the scan bindings cover
/// every free variable of the matrix.
fn instantiated_member(
    matrix: &Formula,
    a: &Assignment,
    proved: &BTreeSet<Formula>,
) -> Result<bool, EvalError> {
    let mut inst = matrix.clone();
    for v in matrix.free_vars() {
        let value = a.get(&v).ok_or(EvalError::UnboundVariable(v))?;
        let digits = value.to_u64_digits();
        let n = digits.first().copied().unwrap_or(0);
        inst = inst
            .substitute(v, &Term::numeral(n))
            .expect("numerals are closed");
    }
    Ok(proved.contains(&inst))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::proof::{Justification, Line, PaAxiom};
    use crate::syntax::parse_formula;

    fn p(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn empty() -> Assignment {
        Assignment::new()
    }

    #[test]
    fn universal_pa5_is_verified_not_true() {
        let f = p("forall x1 . ((x1 + 0) = x1)");
        assert_eq!(
            eval_algorithmic(&f, 1000, &empty()).unwrap(),
            Verdict::VerifiedUpTo(1000)
        );
    }

    #[test]
    fn hopeless_existential_is_no_witness_not_false() {
        let f = p("exists x1 . (x1' = 0)");
        assert_eq!(
            eval_algorithmic(&f, 1000, &empty()).unwrap(),
            Verdict::NoWitnessUpTo(1000)
        );
    }

    #[test]
    fn counterexamples_carry_their_witness() {
        let f = p("forall x1 . ~(x1 = 0'')");
        assert_eq!(eval_algorithmic(&f, 10, &empty()).unwrap(), Verdict::FalseAt(2));
    }

    #[test]
    fn witnesses_carry_their_witness() {
        let f = p("exists x1 . (x1 = 0''')");
        assert_eq!(eval_algorithmic(&f, 10, &empty()).unwrap(), Verdict::WitnessAt(3));
    }

    #[test]
    fn quantifier_free_formulas_get_exact_verdicts() {
        assert_eq!(eval_algorithmic(&p("(0 = 0)"), 5, &empty()).unwrap(), Verdict::True);
        assert_eq!(
            eval_algorithmic(&p("(0 = 0')"), 5, &empty()).unwrap(),
            Verdict::False
        );
    }

    #[test]
    fn nested_quantifiers_stay_honest() {
        // forall x exists y (y = x'): every probe finds its witness.
        let f = p("forall x1 . exists x2 . (x2 = x1')");
        assert_eq!(
            eval_algorithmic(&f, 20, &empty()).unwrap(),
            Verdict::VerifiedUpTo(20)
        );
        // exists x forall y ((x * y) = y): x = 1 works pointwise, but a
        // universal probe never certifies, so no witness is ever claimed.
        let f = p("exists x1 . forall x2 . ((x1 * x2) = x2)");
        assert_eq!(
            eval_algorithmic(&f, 20, &empty()).unwrap(),
            Verdict::NoWitnessUpTo(20)
        );
    }

    #[test]
    fn free_variables_come_from_the_assignment() {
        let f = p("exists x2 . (x2 = x1)");
        let a = super::super::assignment([(1, 7)]);
        assert_eq!(eval_algorithmic(&f, 10, &a).unwrap(), Verdict::WitnessAt(7));
    }

    fn pa5_instance_proof(n: u64) -> Derivation {
        let t = Term::numeral(n);
        let f = Formula::Eq(t.clone().add(Term::Zero), t.clone());
        Derivation::new(
            vec![],
            vec![Line::new(f, Justification::Pa(PaAxiom::Pa5 { t1: t }))],
        )
    }

    #[test]
    fn godelian_membership_is_direct() {
        let corpus = vec![pa5_instance_proof(0)];
        let f = p("((0 + 0) = 0)");
        assert_eq!(eval_godelian(&f, &corpus, 10).unwrap(), Verdict::True);
    }

    #[test]
    fn godelian_false_means_not_proved_here() {
        let f = p("(0 = 0)");
        assert_eq!(eval_godelian(&f, &[], 10).unwrap(), Verdict::False);
    }

    #[test]
    fn godelian_universal_verified_when_instances_are_proved() {
        let corpus: Vec<Derivation> = (0..=2).map(pa5_instance_proof).collect();
        let f = p("forall x1 . ((x1 + 0) = x1)");
        assert_eq!(eval_godelian(&f, &corpus, 2).unwrap(), Verdict::VerifiedUpTo(2));
        // A missing instance is a (corpus-relative) counterexample.
        let corpus = vec![pa5_instance_proof(0), pa5_instance_proof(2)];
        assert_eq!(eval_godelian(&f, &corpus, 2).unwrap(), Verdict::FalseAt(1));
    }

    #[test]
    fn godelian_existential_probes_the_positive_instance() {
        // exists x1. ((x1 + 0) = x1) is stored as ~forall x1. ~(...); the
        // probe consults the corpus for the un-negated instance.
        let corpus = vec![pa5_instance_proof(4)];
        let f = p("exists x1 . ((x1 + 0) = x1)");
        assert_eq!(eval_godelian(&f, &corpus, 10).unwrap(), Verdict::WitnessAt(4));
        assert_eq!(eval_godelian(&f, &[], 10).unwrap(), Verdict::NoWitnessUpTo(10));
    }

    #[test]
    fn godelian_requires_closed_formulas() {
        let f = p("(x1 = 0)");
        assert_eq!(eval_godelian(&f, &[], 10), Err(EvalError::OpenFormula));
    }

    #[test]
    fn godelian_rejects_bad_corpora() {
        let bogus = Derivation::new(
            vec![],
            vec![Line::new(p("(0 = 0')"), Justification::Pa(PaAxiom::literal(5)))],
        );
        assert_eq!(
            eval_godelian(&p("(0 = 0)"), &[bogus], 10),
            Err(EvalError::UncheckedCorpus { index: 0 })
        );
    }
}
