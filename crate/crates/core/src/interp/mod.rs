//! Evaluation of PA formulas over the natural numbers.
//!
//! Four evaluators with deliberately different contracts:
//!
//! * [`eval_qf`] — exact two-valued truth for quantifier-free formulas; this
//!   computation always terminates.
//! * [`eval_tarski_bounded`] — classical two-valued evaluation with every
//!   quantifier cut down to the finite domain `{0..bound}`. An approximation
//!   of the unbounded Tarskian clauses, and documented as such.
//! * [`eval_algorithmic`] — three-valued verdicts under a probe budget: a
//!   universal is never promoted from "verified up to the budget" to true,
//!   and a failed existential search is never demoted to false. The honest
//!   bounded verdicts are the point, not a limitation.
//! * [`eval_godelian`] — the same quantifier discipline, but the base notion
//!   of a quantifier-free formula being satisfied is membership of its
//!   closed instantiation in the set of formulas proved by a checked corpus.
//!
//! The Markovian reading coincides with the algorithmic one here: for the
//! decidable quantifier-free base the two notions agree, so no separate
//! evaluator exists.

mod algo;
mod prenex;

pub use algo::{eval_algorithmic, eval_godelian};
pub use prenex::{prenex_normal_form, Prenex, Quantifier};

use std::collections::BTreeMap;

use num_bigint::BigUint;
use thiserror::Error;

use crate::syntax::{Formula, Term, VarIndex};

/// A finite map from variable indices to natural values; must cover the free
/// variables of whatever it is used to evaluate.
pub type Assignment = BTreeMap<VarIndex, BigUint>;

/// Builds an assignment from `(index, value)` pairs.
pub fn assignment<I: IntoIterator<Item = (VarIndex, u64)>>(pairs: I) -> Assignment {
    pairs
        .into_iter()
        .map(|(v, n)| (v, BigUint::from(n)))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("variable x{0} is not bound by the assignment")]
    UnboundVariable(VarIndex),
    #[error("formula contains a quantifier")]
    HasQuantifier,
    #[error("formula must be closed")]
    OpenFormula,
    #[error("corpus entry {index} is not an accepted hypothesis-free derivation")]
    UncheckedCorpus { index: usize },
}

/// Outcome of a budgeted evaluation.
///
/// `True`/`False` are exact and only arise from quantifier-free matrices.
/// `FalseAt`/`WitnessAt` carry a concrete counterexample or witness for the
/// outermost quantifier. `VerifiedUpTo`/`NoWitnessUpTo` are honest refusals:
/// every probe up to the budget passed (or failed), and nothing more is
/// claimed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    True,
    False,
    FalseAt(u64),
    WitnessAt(u64),
    VerifiedUpTo(u64),
    NoWitnessUpTo(u64),
}

impl Verdict {
    /// Definitively true: a claim, not a refusal.
    pub fn is_definitive_true(self) -> bool {
        matches!(self, Verdict::True | Verdict::WitnessAt(_))
    }

    /// Definitively false.
    pub fn is_definitive_false(self) -> bool {
        matches!(self, Verdict::False | Verdict::FalseAt(_))
    }
}

/// Value of a term under ordinary arithmetic.
pub fn eval_term(t: &Term, a: &Assignment) -> Result<BigUint, EvalError> {
    match t {
        Term::Zero => Ok(BigUint::ZERO),
        Term::Var(v) => a.get(v).cloned().ok_or(EvalError::UnboundVariable(*v)),
        Term::Succ(inner) => Ok(eval_term(inner, a)? + 1u32),
        Term::Add(l, r) => Ok(eval_term(l, a)? + eval_term(r, a)?),
        Term::Mul(l, r) => Ok(eval_term(l, a)? * eval_term(r, a)?),
    }
}

/// Exact truth of a quantifier-free formula.
pub fn eval_qf(f: &Formula, a: &Assignment) -> Result<bool, EvalError> {
    match f {
        Formula::Eq(l, r) => Ok(eval_term(l, a)? == eval_term(r, a)?),
        Formula::Not(inner) => Ok(!eval_qf(inner, a)?),
        Formula::Implies(l, r) => Ok(!eval_qf(l, a)? || eval_qf(r, a)?),
        Formula::ForAll(..) => Err(EvalError::HasQuantifier),
    }
}

/// Classical evaluation with quantifiers ranging over `{0..bound}`
/// (inclusive). Exact on that finite structure; an approximation of the
/// naturals.
pub fn eval_tarski_bounded(f: &Formula, bound: u64, a: &Assignment) -> Result<bool, EvalError> {
    match f {
        Formula::Eq(l, r) => Ok(eval_term(l, a)? == eval_term(r, a)?),
        Formula::Not(inner) => Ok(!eval_tarski_bounded(inner, bound, a)?),
        Formula::Implies(l, r) => {
            Ok(!eval_tarski_bounded(l, bound, a)? || eval_tarski_bounded(r, bound, a)?)
        }
        Formula::ForAll(v, body) => {
            let mut scoped = a.clone();
            for n in 0..=bound {
                scoped.insert(*v, BigUint::from(n));
                if !eval_tarski_bounded(body, bound, &scoped)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;

    fn p(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn term_evaluation() {
        let empty = Assignment::new();
        assert_eq!(eval_term(&Term::numeral(7), &empty).unwrap(), 7u32.into());

        let a = assignment([(1, 4)]);
        let t = Term::Var(1).add(Term::Zero.succ());
        assert_eq!(eval_term(&t, &a).unwrap(), 5u32.into());

        let a = assignment([(1, 6), (2, 7)]);
        let t = Term::Var(1).mul(Term::Var(2));
        assert_eq!(eval_term(&t, &a).unwrap(), 42u32.into());
    }

    #[test]
    fn unbound_variables_are_reported() {
        let empty = Assignment::new();
        assert_eq!(
            eval_term(&Term::Var(3), &empty),
            Err(EvalError::UnboundVariable(3))
        );
    }

    #[test]
    fn qf_evaluation() {
        let empty = Assignment::new();
        assert!(eval_qf(&p("(0 = 0)"), &empty).unwrap());
        // PA3 semantics at 0: 1 != 0.
        let a = assignment([(1, 0)]);
        assert!(eval_qf(&p("~(x1' = 0)"), &a).unwrap());
        assert_eq!(
            eval_qf(&p("forall x1 . (x1 = x1)"), &empty),
            Err(EvalError::HasQuantifier)
        );
    }

    #[test]
    fn tarski_bounded_examples() {
        let empty = Assignment::new();
        assert!(eval_tarski_bounded(&p("forall x1 . ((x1 + 0) = x1)"), 50, &empty).unwrap());
        let exists_two = p("exists x1 . (x1 = 0'')");
        assert!(!eval_tarski_bounded(&exists_two, 1, &empty).unwrap());
        assert!(eval_tarski_bounded(&exists_two, 2, &empty).unwrap());
    }

    #[test]
    fn tarski_agrees_with_qf_on_quantifier_free_inputs() {
        let cases = [
            ("(0 = 0)", Assignment::new()),
            ("~(0 = 0')", Assignment::new()),
            ("((x1 = 0) -> (x1 = x1))", assignment([(1, 3)])),
            ("((x1 * x2) = (x2 * x1))", assignment([(1, 5), (2, 9)])),
        ];
        for (s, a) in cases {
            let f = p(s);
            let qf = eval_qf(&f, &a).unwrap();
            for bound in [0, 1, 17] {
                assert_eq!(eval_tarski_bounded(&f, bound, &a).unwrap(), qf, "{s}@{bound}");
            }
        }
    }

    #[test]
    fn bounded_truth_can_flip_with_the_bound() {
        // "every x has a successor in the domain" holds on no cutoff domain.
        let f = p("forall x1 . exists x2 . (x2 = x1')");
        let empty = Assignment::new();
        assert!(!eval_tarski_bounded(&f, 5, &empty).unwrap());
    }
}
