//! Prenex normalization.
//!
//! Every formula in the `{~, ->, forall}` syntax rewrites to a quantifier
//! prefix over a quantifier-free matrix. Bound variables are first renamed
//! apart (fresh indices above everything in the formula), so pulling
//! quantifiers can never capture. Double negations in the matrix are
//! eliminated; in particular the stored existential `~forall x. ~F` comes out
//! as the prefix entry `Ex x` over the matrix `F`.

use std::collections::BTreeMap;

use crate::syntax::{Formula, Term, VarIndex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantifier {
    All,
    Ex,
}

impl Quantifier {
    fn flip(self) -> Quantifier {
        match self {
            Quantifier::All => Quantifier::Ex,
            Quantifier::Ex => Quantifier::All,
        }
    }
}

/// Prefix and quantifier-free matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prenex {
    pub prefix: Vec<(Quantifier, VarIndex)>,
    pub matrix: Formula,
}

impl Prenex {
    /// Rebuilds an ordinary formula (existentials in their stored form).
    pub fn to_formula(&self) -> Formula {
        let mut f = self.matrix.clone();
        for (q, v) in self.prefix.iter().rev() {
            f = match q {
                Quantifier::All => Formula::forall(*v, f),
                Quantifier::Ex => Formula::exists(*v, f),
            };
        }
        f
    }
}

/// Computes the prenex normal form.
pub fn prenex_normal_form(f: &Formula) -> Prenex {
    let mut next = f.max_var() + 1;
    let renamed = rename_apart(f, &mut next, &BTreeMap::new());
    let (prefix, matrix) = pull(&renamed);
    Prenex {
        prefix,
        matrix: strip_double_negation(&matrix),
    }
}

/// Renames every bound variable to a fresh index.
fn rename_apart(f: &Formula, next: &mut VarIndex, env: &BTreeMap<VarIndex, VarIndex>) -> Formula {
    match f {
        Formula::Eq(l, r) => Formula::Eq(rename_term(l, env), rename_term(r, env)),
        Formula::Not(inner) => rename_apart(inner, next, env).not(),
        Formula::Implies(l, r) => {
            rename_apart(l, next, env).implies(rename_apart(r, next, env))
        }
        Formula::ForAll(v, body) => {
            let fresh = *next;
            *next += 1;
            let mut scoped = env.clone();
            scoped.insert(*v, fresh);
            Formula::forall(fresh, rename_apart(body, next, &scoped))
        }
    }
}

fn rename_term(t: &Term, env: &BTreeMap<VarIndex, VarIndex>) -> Term {
    match t {
        Term::Zero => Term::Zero,
        Term::Var(v) => Term::Var(env.get(v).copied().unwrap_or(*v)),
        Term::Succ(inner) => rename_term(inner, env).succ(),
        Term::Add(l, r) => rename_term(l, env).add(rename_term(r, env)),
        Term::Mul(l, r) => rename_term(l, env).mul(rename_term(r, env)),
    }
}

/// Pulls quantifiers to the front; sound because binders are renamed apart.
fn pull(f: &Formula) -> (Vec<(Quantifier, VarIndex)>, Formula) {
    match f {
        Formula::Eq(..) => (Vec::new(), f.clone()),
        Formula::Not(inner) => {
            let (mut prefix, matrix) = pull(inner);
            for (q, _) in prefix.iter_mut() {
                *q = q.flip();
            }
            (prefix, matrix.not())
        }
        Formula::Implies(l, r) => {
            let (mut left, lm) = pull(l);
            for (q, _) in left.iter_mut() {
                *q = q.flip();
            }
            let (right, rm) = pull(r);
            left.extend(right);
            (left, lm.implies(rm))
        }
        Formula::ForAll(v, body) => {
            let (mut prefix, matrix) = pull(body);
            prefix.insert(0, (Quantifier::All, *v));
            (prefix, matrix)
        }
    }
}

fn strip_double_negation(f: &Formula) -> Formula {
    match f {
        Formula::Eq(..) => f.clone(),
        Formula::Not(inner) => match inner.as_ref() {
            Formula::Not(core) => strip_double_negation(core),
            _ => strip_double_negation(inner).not(),
        },
        Formula::Implies(l, r) => {
            strip_double_negation(l).implies(strip_double_negation(r))
        }
        Formula::ForAll(v, body) => Formula::forall(*v, strip_double_negation(body)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interp::{assignment, eval_tarski_bounded, Assignment};
    use crate::syntax::parse_formula;

    fn p(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn stored_existential_becomes_ex_prefix() {
        let f = p("exists x1 . (x1' = 0)");
        let pnf = prenex_normal_form(&f);
        assert_eq!(pnf.prefix.len(), 1);
        assert_eq!(pnf.prefix[0].0, Quantifier::Ex);
        let v = pnf.prefix[0].1;
        assert_eq!(pnf.matrix, Formula::Eq(Term::Var(v).succ(), Term::Zero));
    }

    #[test]
    fn quantifier_free_formulas_pass_through() {
        let f = p("((0 = 0) -> ~(0 = 0'))");
        let pnf = prenex_normal_form(&f);
        assert!(pnf.prefix.is_empty());
        assert_eq!(pnf.matrix, f);
    }

    #[test]
    fn antecedent_quantifiers_flip() {
        let f = p("((forall x1 . (x1 = 0)) -> (0 = 0))");
        let pnf = prenex_normal_form(&f);
        assert_eq!(pnf.prefix.len(), 1);
        assert_eq!(pnf.prefix[0].0, Quantifier::Ex);
    }

    #[test]
    fn shadowed_binders_are_separated() {
        // forall x1. ((x1 = 0) -> forall x1. (x1 = x1))
        let f = p("forall x1 . ((x1 = 0) -> forall x1 . (x1 = x1))");
        let pnf = prenex_normal_form(&f);
        assert_eq!(pnf.prefix.len(), 2);
        assert_ne!(pnf.prefix[0].1, pnf.prefix[1].1);
        assert_eq!(pnf.prefix[0].0, Quantifier::All);
        assert_eq!(pnf.prefix[1].0, Quantifier::All);
    }

    #[test]
    fn prenexing_preserves_bounded_truth() {
        let cases = [
            ("exists x1 . (x1 = 0'')", Assignment::new()),
            ("((forall x1 . (x1 = 0)) -> (0 = 0'))", Assignment::new()),
            ("forall x1 . exists x2 . ((x1 + x2) = x1)", Assignment::new()),
            ("~ forall x1 . ((x1 * x1) = x1)", Assignment::new()),
            ("exists x2 . ((x2 + x3) = (x3 + x3))", assignment([(3, 4)])),
            (
                "(exists x1 . (x1 = 0'') -> forall x2 . ((x2 + 0) = x2))",
                Assignment::new(),
            ),
        ];
        for (s, a) in cases {
            let f = p(s);
            let pnf = prenex_normal_form(&f);
            let g = pnf.to_formula();
            for bound in [0, 3, 7] {
                assert_eq!(
                    eval_tarski_bounded(&f, bound, &a).unwrap(),
                    eval_tarski_bounded(&g, bound, &a).unwrap(),
                    "{s} @ bound {bound}"
                );
            }
        }
    }
}
