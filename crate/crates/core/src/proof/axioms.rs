//! Axiom schemas: explicit instantiation records and structural recognizers.
//!
//! The checker side works from records — a justification names its schema and
//! the bindings, and [`LogicalAxiom::formula`] / [`PaAxiom::formula`] rebuild
//! the claimed instance for comparison. The recognizer side
//! ([`is_logical_axiom_instance`], [`is_pa_axiom_instance`]) goes the other
//! way: given a bare formula, decide whether *some* record would produce it.
//! Recognition is what makes the proof-pair relation on encoded formula
//! sequences decidable without encoded justifications.
//!
//! Logical base (Hilbert-style, Mendelson's system):
//!
//! ```text
//! A1: B -> (C -> B)
//! A2: (B -> (C -> D)) -> ((B -> C) -> (B -> D))
//! A3: (~C -> ~B) -> ((~C -> B) -> C)
//! A4: (forall x. B) -> B[t/x]          (t free for x in B)
//! A5: (forall x. (B -> C)) -> (B -> forall x. C)   (x not free in B)
//! ```

use crate::syntax::{Formula, Term, VarIndex};

/// A logical axiom schema with its instantiation record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LogicalAxiom {
    A1 { b: Formula, c: Formula },
    A2 { b: Formula, c: Formula, d: Formula },
    A3 { b: Formula, c: Formula },
    A4 { var: VarIndex, body: Formula, term: Term },
    A5 { var: VarIndex, b: Formula, c: Formula },
}

impl LogicalAxiom {
    /// Builds the axiom instance the record denotes. `None` when the record
    /// violates a side condition (A4's term not free for the variable, A5's
    /// variable free in the antecedent).
    pub fn formula(&self) -> Option<Formula> {
        match self {
            LogicalAxiom::A1 { b, c } => Some(b.clone().implies(c.clone().implies(b.clone()))),
            LogicalAxiom::A2 { b, c, d } => {
                let lhs = b.clone().implies(c.clone().implies(d.clone()));
                let rhs = b
                    .clone()
                    .implies(c.clone())
                    .implies(b.clone().implies(d.clone()));
                Some(lhs.implies(rhs))
            }
            LogicalAxiom::A3 { b, c } => {
                let lhs = c.clone().not().implies(b.clone().not());
                let rhs = c.clone().not().implies(b.clone()).implies(c.clone());
                Some(lhs.implies(rhs))
            }
            LogicalAxiom::A4 { var, body, term } => {
                let instance = body.substitute(*var, term).ok()?;
                Some(Formula::forall(*var, body.clone()).implies(instance))
            }
            LogicalAxiom::A5 { var, b, c } => {
                if b.has_free(*var) {
                    return None;
                }
                let lhs = Formula::forall(*var, b.clone().implies(c.clone()));
                let rhs = b.clone().implies(Formula::forall(*var, c.clone()));
                Some(lhs.implies(rhs))
            }
        }
    }

    pub fn schema_name(&self) -> &'static str {
        match self {
            LogicalAxiom::A1 { .. } => "A1",
            LogicalAxiom::A2 { .. } => "A2",
            LogicalAxiom::A3 { .. } => "A3",
            LogicalAxiom::A4 { .. } => "A4",
            LogicalAxiom::A5 { .. } => "A5",
        }
    }
}

/// A PA axiom schema with its instantiation record.
///
/// PA1–PA8 are term-instantiable: the record substitutes terms for the
/// axiom's variables, and the empty record denotes the literal axiom over
/// `x1, x2, x3`. PA9 is the induction schema; its record names the induction
/// variable and the formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PaAxiom {
    Pa1 { t1: Term, t2: Term, t3: Term },
    Pa2 { t1: Term, t2: Term },
    Pa3 { t1: Term },
    Pa4 { t1: Term, t2: Term },
    Pa5 { t1: Term },
    Pa6 { t1: Term, t2: Term },
    Pa7 { t1: Term },
    Pa8 { t1: Term, t2: Term },
    Pa9 { var: VarIndex, body: Formula },
}

impl PaAxiom {
    /// The literal axiom `PA<n>` over the variables `x1, x2, x3`.
    /// Panics if `n` is not in `1..=9`; PA9's record is the trivial schema
    /// instance `F(x1) := (x1 = x1)` and is mostly useful for display.
    pub fn literal(n: u8) -> PaAxiom {
        let x1 = Term::Var(1);
        let x2 = Term::Var(2);
        let x3 = Term::Var(3);
        match n {
            1 => PaAxiom::Pa1 {
                t1: x1,
                t2: x2,
                t3: x3,
            },
            2 => PaAxiom::Pa2 { t1: x1, t2: x2 },
            3 => PaAxiom::Pa3 { t1: x1 },
            4 => PaAxiom::Pa4 { t1: x1, t2: x2 },
            5 => PaAxiom::Pa5 { t1: x1 },
            6 => PaAxiom::Pa6 { t1: x1, t2: x2 },
            7 => PaAxiom::Pa7 { t1: x1 },
            8 => PaAxiom::Pa8 { t1: x1, t2: x2 },
            9 => PaAxiom::Pa9 {
                var: 1,
                body: Formula::Eq(x1.clone(), x1),
            },
            _ => panic!("no PA axiom {n}"),
        }
    }

    /// Builds the axiom instance the record denotes. Only PA9 can fail, and
    /// only if the record's substitutions are not free for the variable
    /// (impossible for `0` and `x'`, but kept as a checked path).
    pub fn formula(&self) -> Option<Formula> {
        use Formula::Eq;
        match self {
            PaAxiom::Pa1 { t1, t2, t3 } => Some(Eq(t1.clone(), t2.clone()).implies(
                Eq(t1.clone(), t3.clone()).implies(Eq(t2.clone(), t3.clone())),
            )),
            PaAxiom::Pa2 { t1, t2 } => Some(
                Eq(t1.clone(), t2.clone())
                    .implies(Eq(t1.clone().succ(), t2.clone().succ())),
            ),
            PaAxiom::Pa3 { t1 } => Some(Eq(Term::Zero, t1.clone().succ()).not()),
            PaAxiom::Pa4 { t1, t2 } => Some(
                Eq(t1.clone().succ(), t2.clone().succ())
                    .implies(Eq(t1.clone(), t2.clone())),
            ),
            PaAxiom::Pa5 { t1 } => Some(Eq(t1.clone().add(Term::Zero), t1.clone())),
            PaAxiom::Pa6 { t1, t2 } => Some(Eq(
                t1.clone().add(t2.clone().succ()),
                t1.clone().add(t2.clone()).succ(),
            )),
            PaAxiom::Pa7 { t1 } => Some(Eq(t1.clone().mul(Term::Zero), Term::Zero)),
            PaAxiom::Pa8 { t1, t2 } => Some(Eq(
                t1.clone().mul(t2.clone().succ()),
                t1.clone().mul(t2.clone()).add(t1.clone()),
            )),
            PaAxiom::Pa9 { var, body } => induction_instance(*var, body),
        }
    }

    pub fn schema_name(&self) -> &'static str {
        match self {
            PaAxiom::Pa1 { .. } => "PA1",
            PaAxiom::Pa2 { .. } => "PA2",
            PaAxiom::Pa3 { .. } => "PA3",
            PaAxiom::Pa4 { .. } => "PA4",
            PaAxiom::Pa5 { .. } => "PA5",
            PaAxiom::Pa6 { .. } => "PA6",
            PaAxiom::Pa7 { .. } => "PA7",
            PaAxiom::Pa8 { .. } => "PA8",
            PaAxiom::Pa9 { .. } => "PA9",
        }
    }
}

/// The literal axiom `PA<n>` as a formula.
pub fn pa_axiom_formula(n: u8) -> Formula {
    PaAxiom::literal(n)
        .formula()
        .expect("literal PA axioms are well-formed")
}

/// `(F(0) -> forall x.(F(x) -> F(x'))) -> forall x. F(x)`
fn induction_instance(var: VarIndex, body: &Formula) -> Option<Formula> {
    let base = body.substitute(var, &Term::Zero).ok()?;
    let step_rhs = body.substitute(var, &Term::Var(var).succ()).ok()?;
    let step = Formula::forall(var, body.clone().implies(step_rhs));
    Some(base.implies(step).implies(Formula::forall(var, body.clone())))
}

// ---------------------------------------------------------------------------
// Recognizers
// ---------------------------------------------------------------------------

/// Walks `body` and `inst` in parallel, treating free occurrences of `var`
/// in `body` as holes that must all map to one and the same term in `inst`.
/// Returns false on a structural mismatch; a `None` slot after a successful
/// walk means `var` never occurred free.
fn match_hole_term(body: &Term, inst: &Term, var: VarIndex, slot: &mut Option<Term>) -> bool {
    if let Term::Var(v) = body {
        if *v == var {
            return match slot {
                Some(t) => t == inst,
                None => {
                    *slot = Some(inst.clone());
                    true
                }
            };
        }
    }
    match (body, inst) {
        (Term::Zero, Term::Zero) => true,
        (Term::Var(a), Term::Var(b)) => a == b,
        (Term::Succ(a), Term::Succ(b)) => match_hole_term(a, b, var, slot),
        (Term::Add(a1, a2), Term::Add(b1, b2)) | (Term::Mul(a1, a2), Term::Mul(b1, b2)) => {
            match_hole_term(a1, b1, var, slot) && match_hole_term(a2, b2, var, slot)
        }
        _ => false,
    }
}

fn match_hole_formula(body: &Formula, inst: &Formula, var: VarIndex, slot: &mut Option<Term>) -> bool {
    match (body, inst) {
        (Formula::Eq(a1, a2), Formula::Eq(b1, b2)) => {
            match_hole_term(a1, b1, var, slot) && match_hole_term(a2, b2, var, slot)
        }
        (Formula::Not(a), Formula::Not(b)) => match_hole_formula(a, b, var, slot),
        (Formula::Implies(a1, a2), Formula::Implies(b1, b2)) => {
            match_hole_formula(a1, b1, var, slot) && match_hole_formula(a2, b2, var, slot)
        }
        (Formula::ForAll(va, a), Formula::ForAll(vb, b)) => {
            if va != vb {
                return false;
            }
            if *va == var {
                // var is shadowed below; the subtrees must agree exactly.
                a == b
            } else {
                match_hole_formula(a, b, var, slot)
            }
        }
        _ => false,
    }
}

/// Decides `inst == body[t/var]` for some `t` free for `var` in `body`.
fn is_substitution_instance(body: &Formula, var: VarIndex, inst: &Formula) -> bool {
    let mut slot = None;
    if !match_hole_formula(body, inst, var, &mut slot) {
        return false;
    }
    match slot {
        // var never free: the instance is the body itself, witnessed by t = x.
        None => body == inst,
        // The matcher ignores capture; substitute() is the authority.
        Some(t) => body.substitute(var, &t).as_ref() == Ok(inst),
    }
}

/// Is `f` an instance of one of A1–A5?
pub fn is_logical_axiom_instance(f: &Formula) -> bool {
    is_a1(f) || is_a2(f) || is_a3(f) || is_a4(f) || is_a5(f)
}

fn is_a1(f: &Formula) -> bool {
    // B -> (C -> B)
    if let Formula::Implies(b, rest) = f {
        if let Formula::Implies(_, b2) = rest.as_ref() {
            return b == b2;
        }
    }
    false
}

fn is_a2(f: &Formula) -> bool {
    // (B -> (C -> D)) -> ((B -> C) -> (B -> D))
    if let Formula::Implies(lhs, rhs) = f {
        if let (Formula::Implies(b, cd), Formula::Implies(bc, bd)) = (lhs.as_ref(), rhs.as_ref()) {
            if let (
                Formula::Implies(c, d),
                Formula::Implies(b2, c2),
                Formula::Implies(b3, d2),
            ) = (cd.as_ref(), bc.as_ref(), bd.as_ref())
            {
                return b == b2 && b == b3 && c == c2 && d == d2;
            }
        }
    }
    false
}

fn is_a3(f: &Formula) -> bool {
    // (~C -> ~B) -> ((~C -> B) -> C)
    if let Formula::Implies(lhs, rhs) = f {
        if let (Formula::Implies(nc, nb), Formula::Implies(ncb, c3)) = (lhs.as_ref(), rhs.as_ref())
        {
            if let (Formula::Not(c), Formula::Not(b), Formula::Implies(nc2, b2)) =
                (nc.as_ref(), nb.as_ref(), ncb.as_ref())
            {
                if let Formula::Not(c2) = nc2.as_ref() {
                    return c == c2 && c.as_ref() == c3.as_ref() && b == b2;
                }
            }
        }
    }
    false
}

fn is_a4(f: &Formula) -> bool {
    // (forall x. B) -> B[t/x]
    if let Formula::Implies(lhs, inst) = f {
        if let Formula::ForAll(x, body) = lhs.as_ref() {
            return is_substitution_instance(body, *x, inst);
        }
    }
    false
}

fn is_a5(f: &Formula) -> bool {
    // (forall x. (B -> C)) -> (B -> forall x. C)
    if let Formula::Implies(lhs, rhs) = f {
        if let (Formula::ForAll(x, bc), Formula::Implies(b2, fc)) = (lhs.as_ref(), rhs.as_ref()) {
            if let (Formula::Implies(b, c), Formula::ForAll(x2, c2)) = (bc.as_ref(), fc.as_ref()) {
                return x == x2 && b == b2 && c == c2 && !b.has_free(*x);
            }
        }
    }
    false
}

/// Is `f` an instance of one of PA1–PA9?
pub fn is_pa_axiom_instance(f: &Formula) -> bool {
    is_pa1(f)
        || is_pa2(f)
        || is_pa3(f)
        || is_pa4(f)
        || is_pa5(f)
        || is_pa6(f)
        || is_pa7(f)
        || is_pa8(f)
        || is_pa9(f)
}

fn is_pa1(f: &Formula) -> bool {
    // (t1 = t2) -> ((t1 = t3) -> (t2 = t3))
    if let Formula::Implies(e12, rest) = f {
        if let (Formula::Eq(t1, t2), Formula::Implies(e13, e23)) = (e12.as_ref(), rest.as_ref()) {
            if let (Formula::Eq(t1b, t3), Formula::Eq(t2b, t3b)) = (e13.as_ref(), e23.as_ref()) {
                return t1 == t1b && t2 == t2b && t3 == t3b;
            }
        }
    }
    false
}

fn is_pa2(f: &Formula) -> bool {
    // (t1 = t2) -> (t1' = t2')
    if let Formula::Implies(lhs, rhs) = f {
        if let (Formula::Eq(t1, t2), Formula::Eq(s1, s2)) = (lhs.as_ref(), rhs.as_ref()) {
            if let (Term::Succ(t1b), Term::Succ(t2b)) = (s1, s2) {
                return t1 == t1b.as_ref() && t2 == t2b.as_ref();
            }
        }
    }
    false
}

fn is_pa3(f: &Formula) -> bool {
    // ~(0 = t1')
    if let Formula::Not(inner) = f {
        if let Formula::Eq(Term::Zero, Term::Succ(_)) = inner.as_ref() {
            return true;
        }
    }
    false
}

fn is_pa4(f: &Formula) -> bool {
    // (t1' = t2') -> (t1 = t2)
    if let Formula::Implies(lhs, rhs) = f {
        if let (Formula::Eq(s1, s2), Formula::Eq(t1, t2)) = (lhs.as_ref(), rhs.as_ref()) {
            if let (Term::Succ(t1b), Term::Succ(t2b)) = (s1, s2) {
                return t1 == t1b.as_ref() && t2 == t2b.as_ref();
            }
        }
    }
    false
}

fn is_pa5(f: &Formula) -> bool {
    // (t1 + 0) = t1
    if let Formula::Eq(lhs, t1) = f {
        if let Term::Add(t1b, zero) = lhs {
            return zero.as_ref() == &Term::Zero && t1b.as_ref() == t1;
        }
    }
    false
}

fn is_pa6(f: &Formula) -> bool {
    // (t1 + t2') = (t1 + t2)'
    if let Formula::Eq(lhs, rhs) = f {
        if let (Term::Add(t1, st2), Term::Succ(sum)) = (lhs, rhs) {
            if let (Term::Succ(t2), Term::Add(t1b, t2b)) = (st2.as_ref(), sum.as_ref()) {
                return t1 == t1b && t2 == t2b;
            }
        }
    }
    false
}

fn is_pa7(f: &Formula) -> bool {
    // (t1 * 0) = 0
    if let Formula::Eq(lhs, Term::Zero) = f {
        if let Term::Mul(_, zero) = lhs {
            return zero.as_ref() == &Term::Zero;
        }
    }
    false
}

fn is_pa8(f: &Formula) -> bool {
    // (t1 * t2') = ((t1 * t2) + t1)
    if let Formula::Eq(lhs, rhs) = f {
        if let (Term::Mul(t1, st2), Term::Add(prod, t1c)) = (lhs, rhs) {
            if let (Term::Succ(t2), Term::Mul(t1b, t2b)) = (st2.as_ref(), prod.as_ref()) {
                return t1 == t1b && t2 == t2b && t1 == t1c;
            }
        }
    }
    false
}

fn is_pa9(f: &Formula) -> bool {
    // (F(0) -> forall x.(F(x) -> F(x'))) -> forall x. F(x)
    // The conclusion fixes x and F; rebuild the antecedent and compare.
    if let Formula::Implies(ante, concl) = f {
        if let Formula::ForAll(x, body) = concl.as_ref() {
            if let Some(expected) = induction_instance(*x, body) {
                if let Formula::Implies(expected_ante, _) = expected {
                    return ante == &expected_ante;
                }
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;

    fn p(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn literal_pa_axioms_match_their_surface_forms() {
        let expected = [
            "((x1 = x2) -> ((x1 = x3) -> (x2 = x3)))",
            "((x1 = x2) -> (x1' = x2'))",
            "~(0 = x1')",
            "((x1' = x2') -> (x1 = x2))",
            "((x1 + 0) = x1)",
            "((x1 + x2') = (x1 + x2)')",
            "((x1 * 0) = 0)",
            "((x1 * x2') = ((x1 * x2) + x1))",
        ];
        for (i, s) in expected.iter().enumerate() {
            assert_eq!(pa_axiom_formula(i as u8 + 1), p(s), "PA{}", i + 1);
        }
    }

    #[test]
    fn every_literal_axiom_is_recognized() {
        for n in 1..=9 {
            let f = pa_axiom_formula(n);
            assert!(is_pa_axiom_instance(&f), "PA{n} not recognized: {f}");
        }
    }

    #[test]
    fn term_instances_are_recognized() {
        // PA5 at t1 = 0''
        let f = p("((0'' + 0) = 0'')");
        assert!(is_pa_axiom_instance(&f));
        // Near miss: (t1 + 0) = t2 with t1 != t2.
        assert!(!is_pa_axiom_instance(&p("((0'' + 0) = 0')")));
    }

    #[test]
    fn a4_respects_freeness() {
        // (forall x1. exists x2. ~(x2 = x1)) -> exists x2. ~(x2 = x2)
        // is NOT an A4 instance: x2 is not free for x1.
        let body = p("~ forall x2 . ~ ~(x2 = x1)");
        let captured = p("~ forall x2 . ~ ~(x2 = x2)");
        let f = Formula::forall(1, body).implies(captured);
        assert!(!is_a4(&f));

        // With a fresh term it is an instance.
        let body = p("~ forall x2 . ~ ~(x2 = x1)");
        let inst = p("~ forall x2 . ~ ~(x2 = 0')");
        let f = Formula::forall(1, body).implies(inst);
        assert!(is_a4(&f));
    }

    #[test]
    fn a4_with_variable_not_free_needs_identical_body() {
        let body = p("(0 = 0)");
        let f = Formula::forall(1, body.clone()).implies(body);
        assert!(is_a4(&f));
        let f = Formula::forall(1, p("(0 = 0)")).implies(p("(0 = 0')"));
        assert!(!is_a4(&f));
    }

    #[test]
    fn a5_needs_var_not_free_in_antecedent() {
        // (forall x1. ((0 = 0) -> (x1 = x1))) -> ((0 = 0) -> forall x1. (x1 = x1))
        let good = Formula::forall(1, p("(0 = 0)").implies(p("(x1 = x1)")))
            .implies(p("(0 = 0)").implies(Formula::forall(1, p("(x1 = x1)"))));
        assert!(is_a5(&good));

        // x1 free in B: rejected.
        let bad = Formula::forall(1, p("(x1 = 0)").implies(p("(x1 = x1)")))
            .implies(p("(x1 = 0)").implies(Formula::forall(1, p("(x1 = x1)"))));
        assert!(!is_a5(&bad));
    }

    #[test]
    fn record_builders_agree_with_recognizers() {
        let b = p("(0 = 0)");
        let c = p("(x1 = x1)");
        let d = p("~(0 = 0')");
        for ax in [
            LogicalAxiom::A1 {
                b: b.clone(),
                c: c.clone(),
            },
            LogicalAxiom::A2 {
                b: b.clone(),
                c: c.clone(),
                d: d.clone(),
            },
            LogicalAxiom::A3 {
                b: b.clone(),
                c: c.clone(),
            },
            LogicalAxiom::A4 {
                var: 1,
                body: c.clone(),
                term: Term::numeral(2),
            },
            LogicalAxiom::A5 {
                var: 1,
                b: b.clone(),
                c: c.clone(),
            },
        ] {
            let f = ax.formula().unwrap();
            assert!(is_logical_axiom_instance(&f), "{}: {f}", ax.schema_name());
        }
    }

    #[test]
    fn induction_instance_shape() {
        // F(x1) := (x1 + 0) = x1
        let rec = PaAxiom::Pa9 {
            var: 1,
            body: p("((x1 + 0) = x1)"),
        };
        let f = rec.formula().unwrap();
        let expected = p(
            "((((0 + 0) = 0) -> forall x1 . (((x1 + 0) = x1) -> ((x1' + 0) = x1'))) \
             -> forall x1 . ((x1 + 0) = x1))",
        );
        assert_eq!(f, expected);
        assert!(is_pa9(&f));
    }

    #[test]
    fn bad_a5_record_yields_no_formula() {
        let ax = LogicalAxiom::A5 {
            var: 1,
            b: p("(x1 = 0)"),
            c: p("(x1 = x1)"),
        };
        assert_eq!(ax.formula(), None);
    }
}
