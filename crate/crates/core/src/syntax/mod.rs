//! Abstract syntax for the PA language.
//!
//! Terms are built from `0`, indexed variables `x1, x2, ...`, successor `'`,
//! `+` and `*`. Formulas are built from `=`, `~`, `->` and `forall`; the
//! surface form `exists x. F` is stored as `~forall x. ~F` and never appears
//! in the tree. All values are immutable and every operation here is a pure
//! function.

mod parse;
mod print;

pub use parse::{parse_formula, parse_term, ParseError};

use std::collections::BTreeSet;
use thiserror::Error;

/// Index of an object variable; the language has the single family
/// `x1, x2, ...`, so an index is always >= 1.
pub type VarIndex = u32;

/// A term of PA.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Zero,
    Var(VarIndex),
    Succ(Box<Term>),
    Add(Box<Term>, Box<Term>),
    Mul(Box<Term>, Box<Term>),
}

/// A formula of PA over the primitive connectives `=`, `~`, `->`, `forall`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Eq(Term, Term),
    Not(Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    ForAll(VarIndex, Box<Formula>),
}

/// Substitution failed because the term would be captured by a binder.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("term is not free for x{var}: capture under binder x{binder}")]
pub struct CaptureError {
    /// The variable being substituted for.
    pub var: VarIndex,
    /// The binder that would capture a free variable of the replacement term.
    pub binder: VarIndex,
}

impl Term {
    pub fn succ(self) -> Term {
        Term::Succ(Box::new(self))
    }

    pub fn add(self, rhs: Term) -> Term {
        Term::Add(Box::new(self), Box::new(rhs))
    }

    pub fn mul(self, rhs: Term) -> Term {
        Term::Mul(Box::new(self), Box::new(rhs))
    }

    /// The numeral for `n`: `0` under `n` applications of successor.
    pub fn numeral(n: u64) -> Term {
        let mut t = Term::Zero;
        for _ in 0..n {
            t = t.succ();
        }
        t
    }

    /// Collects free variables into `out`. Terms have no binders, so every
    /// variable occurrence is free.
    fn collect_vars(&self, out: &mut BTreeSet<VarIndex>) {
        match self {
            Term::Zero => {}
            Term::Var(v) => {
                out.insert(*v);
            }
            Term::Succ(t) => t.collect_vars(out),
            Term::Add(l, r) | Term::Mul(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    pub fn vars(&self) -> BTreeSet<VarIndex> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    pub fn contains_var(&self, var: VarIndex) -> bool {
        match self {
            Term::Zero => false,
            Term::Var(v) => *v == var,
            Term::Succ(t) => t.contains_var(var),
            Term::Add(l, r) | Term::Mul(l, r) => l.contains_var(var) || r.contains_var(var),
        }
    }

    /// Replaces every occurrence of `var` by `replacement`; terms bind
    /// nothing, so no capture can occur.
    pub fn substitute(&self, var: VarIndex, replacement: &Term) -> Term {
        match self {
            Term::Zero => Term::Zero,
            Term::Var(v) => {
                if *v == var {
                    replacement.clone()
                } else {
                    Term::Var(*v)
                }
            }
            Term::Succ(t) => t.substitute(var, replacement).succ(),
            Term::Add(l, r) => l.substitute(var, replacement).add(r.substitute(var, replacement)),
            Term::Mul(l, r) => l.substitute(var, replacement).mul(r.substitute(var, replacement)),
        }
    }
}

impl Formula {
    pub fn not(self) -> Formula {
        Formula::Not(Box::new(self))
    }

    pub fn implies(self, rhs: Formula) -> Formula {
        Formula::Implies(Box::new(self), Box::new(rhs))
    }

    pub fn forall(var: VarIndex, body: Formula) -> Formula {
        Formula::ForAll(var, Box::new(body))
    }

    /// `exists x. F` abbreviates `~forall x. ~F`.
    pub fn exists(var: VarIndex, body: Formula) -> Formula {
        Formula::forall(var, body.not()).not()
    }

    /// `A & B` abbreviates `~(A -> ~B)`.
    pub fn and(self, rhs: Formula) -> Formula {
        self.implies(rhs.not()).not()
    }

    /// `A | B` abbreviates `~A -> B`.
    pub fn or(self, rhs: Formula) -> Formula {
        self.not().implies(rhs)
    }

    /// `A <-> B` abbreviates `(A -> B) & (B -> A)`.
    pub fn iff(self, rhs: Formula) -> Formula {
        let forward = self.clone().implies(rhs.clone());
        let backward = rhs.implies(self);
        forward.and(backward)
    }

    /// `t < u` abbreviates `exists z. (t + z') = u` with `z` fresh for both
    /// terms. Callers that need a specific witness variable can build the
    /// expansion themselves.
    pub fn less_than(lhs: Term, rhs: Term) -> Formula {
        let mut fresh = 1;
        for v in lhs.vars().iter().chain(rhs.vars().iter()) {
            fresh = fresh.max(v + 1);
        }
        let witness = Term::Var(fresh).succ();
        Formula::exists(fresh, Formula::Eq(lhs.add(witness), rhs))
    }

    fn collect_free(&self, bound: &mut Vec<VarIndex>, out: &mut BTreeSet<VarIndex>) {
        match self {
            Formula::Eq(l, r) => {
                let mut vars = BTreeSet::new();
                l.collect_vars(&mut vars);
                r.collect_vars(&mut vars);
                for v in vars {
                    if !bound.contains(&v) {
                        out.insert(v);
                    }
                }
            }
            Formula::Not(f) => f.collect_free(bound, out),
            Formula::Implies(l, r) => {
                l.collect_free(bound, out);
                r.collect_free(bound, out);
            }
            Formula::ForAll(v, f) => {
                bound.push(*v);
                f.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    /// The set of variables with at least one free occurrence.
    pub fn free_vars(&self) -> BTreeSet<VarIndex> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    pub fn is_closed(&self) -> bool {
        self.free_vars().is_empty()
    }

    /// True if `var` has a free occurrence.
    pub fn has_free(&self, var: VarIndex) -> bool {
        match self {
            Formula::Eq(l, r) => l.contains_var(var) || r.contains_var(var),
            Formula::Not(f) => f.has_free(var),
            Formula::Implies(l, r) => l.has_free(var) || r.has_free(var),
            Formula::ForAll(v, f) => *v != var && f.has_free(var),
        }
    }

    /// The largest variable index occurring anywhere (free or bound); 0 when
    /// the formula mentions no variables. Handy for picking fresh variables.
    pub fn max_var(&self) -> VarIndex {
        match self {
            Formula::Eq(l, r) => {
                let m = |t: &Term| t.vars().into_iter().max().unwrap_or(0);
                m(l).max(m(r))
            }
            Formula::Not(f) => f.max_var(),
            Formula::Implies(l, r) => l.max_var().max(r.max_var()),
            Formula::ForAll(v, f) => (*v).max(f.max_var()),
        }
    }

    /// Replaces every free occurrence of `var` by `replacement`.
    ///
    /// Fails with [`CaptureError`] when `replacement` is not free for `var`:
    /// some free occurrence of `var` sits under a binder that binds a
    /// variable of `replacement`.
    pub fn substitute(&self, var: VarIndex, replacement: &Term) -> Result<Formula, CaptureError> {
        match self {
            Formula::Eq(l, r) => Ok(Formula::Eq(
                l.substitute(var, replacement),
                r.substitute(var, replacement),
            )),
            Formula::Not(f) => Ok(f.substitute(var, replacement)?.not()),
            Formula::Implies(l, r) => Ok(l
                .substitute(var, replacement)?
                .implies(r.substitute(var, replacement)?)),
            Formula::ForAll(v, f) => {
                if *v == var {
                    // Binder shadows the substituted variable.
                    Ok(self.clone())
                } else if f.has_free(var) && replacement.contains_var(*v) {
                    Err(CaptureError { var, binder: *v })
                } else {
                    Ok(Formula::forall(*v, f.substitute(var, replacement)?))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: VarIndex) -> Term {
        Term::Var(i)
    }

    #[test]
    fn numeral_has_exactly_n_succs() {
        fn succs(t: &Term) -> u64 {
            match t {
                Term::Succ(inner) => 1 + succs(inner),
                _ => 0,
            }
        }
        for n in [0u64, 1, 2, 7, 40] {
            let t = Term::numeral(n);
            assert_eq!(succs(&t), n);
            assert!(t.vars().is_empty());
        }
    }

    #[test]
    fn free_vars_examples() {
        // forall x1. x1 = x2  ==>  {2}
        let f = Formula::forall(1, Formula::Eq(x(1), x(2)));
        assert_eq!(f.free_vars().into_iter().collect::<Vec<_>>(), vec![2]);

        assert!(Formula::Eq(Term::Zero, Term::Zero).free_vars().is_empty());

        // (x1 = 0) -> forall x1. x1 = x1  ==>  {1}
        let f = Formula::Eq(x(1), Term::Zero)
            .implies(Formula::forall(1, Formula::Eq(x(1), x(1))));
        assert_eq!(f.free_vars().into_iter().collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn substitute_free_occurrences() {
        let f = Formula::Eq(x(1), Term::Zero);
        let g = f.substitute(1, &Term::numeral(3)).unwrap();
        assert_eq!(g, Formula::Eq(Term::numeral(3), Term::Zero));
    }

    #[test]
    fn substitute_shadowed_is_identity() {
        let f = Formula::forall(1, Formula::Eq(x(1), x(1)));
        assert_eq!(f.substitute(1, &Term::Zero).unwrap(), f);
    }

    #[test]
    fn substitute_detects_capture() {
        // forall x2. x1 = x2, substituting x2 for x1 would capture.
        let f = Formula::forall(2, Formula::Eq(x(1), x(2)));
        let err = f.substitute(1, &x(2)).unwrap_err();
        assert_eq!(err, CaptureError { var: 1, binder: 2 });
    }

    #[test]
    fn substitute_var_for_itself_is_identity() {
        let f = Formula::forall(2, Formula::Eq(x(1), x(2)).not())
            .implies(Formula::Eq(x(1).add(x(3)), Term::Zero));
        assert_eq!(f.substitute(1, &x(1)).unwrap(), f);
        assert_eq!(f.substitute(3, &x(3)).unwrap(), f);
    }

    #[test]
    fn substitute_removes_var_from_free_set() {
        let f = Formula::Eq(x(1).add(x(2)), x(1));
        let g = f.substitute(1, &Term::numeral(5)).unwrap();
        assert_eq!(g.free_vars().into_iter().collect::<Vec<_>>(), vec![2]);
    }

    #[test]
    fn exists_desugars_to_not_forall_not() {
        let f = Formula::exists(2, Formula::Eq(x(2), Term::Zero));
        let expected = Formula::forall(2, Formula::Eq(x(2), Term::Zero).not()).not();
        assert_eq!(f, expected);
    }
}
