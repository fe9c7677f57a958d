//! Canonical text for terms and formulas.
//!
//! The printed form is fully parenthesized and parses back to the identical
//! tree: `parse_formula(format!("{f}")) == f`.

use std::fmt;

use super::{Formula, Term};

impl fmt::Display for Term {
    fn fmt(&self, w: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Zero => w.write_str("0"),
            Term::Var(v) => write!(w, "x{v}"),
            Term::Succ(t) => write!(w, "{t}'"),
            Term::Add(l, r) => write!(w, "({l} + {r})"),
            Term::Mul(l, r) => write!(w, "({l} * {r})"),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, w: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Eq(l, r) => write!(w, "({l} = {r})"),
            Formula::Not(f) => write!(w, "~{f}"),
            Formula::Implies(l, r) => write!(w, "({l} -> {r})"),
            Formula::ForAll(v, f) => write!(w, "forall x{v} . {f}"),
        }
    }
}
