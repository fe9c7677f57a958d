//! Convenience constructors for derivations.
//!
//! [`ProofBuilder`] assembles justified lines and offers the handful of
//! derived inferences (weakening, syllogism, double negation, modus tollens,
//! reflexivity) that make hand-built theorems bearable. Everything it emits
//! goes through the ordinary justifications, so the output stands or falls
//! with [`check`](super::check).

use std::collections::HashMap;

use super::{deduction_transform, Derivation, Justification, Line, LogicalAxiom, PaAxiom};
use crate::syntax::{Formula, Term, VarIndex};

/// Incrementally builds a derivation; methods return the index of the line
/// that proves their result, deduplicating repeated formulas.
#[derive(Debug, Default)]
pub struct ProofBuilder {
    hypotheses: Vec<Formula>,
    lines: Vec<Line>,
    seen: HashMap<Formula, usize>,
}

impl ProofBuilder {
    pub fn new() -> Self {
        ProofBuilder::default()
    }

    pub fn with_hypotheses(hypotheses: Vec<Formula>) -> Self {
        ProofBuilder {
            hypotheses,
            ..ProofBuilder::default()
        }
    }

    pub fn finish(self) -> Derivation {
        Derivation::new(self.hypotheses, self.lines)
    }

    pub fn formula_at(&self, index: usize) -> &Formula {
        &self.lines[index].formula
    }

    fn push(&mut self, formula: Formula, justification: Justification) -> usize {
        if let Some(&at) = self.seen.get(&formula) {
            return at;
        }
        self.lines.push(Line::new(formula.clone(), justification));
        let at = self.lines.len() - 1;
        self.seen.insert(formula, at);
        at
    }

    pub fn logical(&mut self, ax: LogicalAxiom) -> usize {
        let f = ax.formula().expect("ill-formed logical axiom record");
        self.push(f, Justification::Logical(ax))
    }

    pub fn pa(&mut self, ax: PaAxiom) -> usize {
        let f = ax.formula().expect("ill-formed PA axiom record");
        self.push(f, Justification::Pa(ax))
    }

    pub fn hypothesis(&mut self, index: usize) -> usize {
        let f = self.hypotheses[index].clone();
        self.push(f, Justification::Hypothesis(index))
    }

    /// `B` from `A` (at `ante`) and `A -> B` (at `imp`).
    pub fn mp(&mut self, ante: usize, imp: usize) -> usize {
        let Formula::Implies(a, b) = self.formula_at(imp).clone() else {
            panic!("mp: line {imp} is not an implication");
        };
        assert_eq!(*a, *self.formula_at(ante), "mp: antecedent mismatch");
        self.push(*b, Justification::ModusPonens(ante, imp))
    }

    /// `forall var. F` from `F` (at `premise`).
    pub fn gen(&mut self, premise: usize, var: VarIndex) -> usize {
        let f = Formula::forall(var, self.formula_at(premise).clone());
        self.push(f, Justification::Generalisation(premise, var))
    }

    /// Splices a hypothesis-free derivation in and returns the index of its
    /// conclusion.
    pub fn append(&mut self, d: &Derivation) -> usize {
        assert!(d.hypotheses.is_empty(), "append: derivation has hypotheses");
        let mut map = Vec::with_capacity(d.lines.len());
        for line in &d.lines {
            let j = match &line.justification {
                Justification::Logical(ax) => Justification::Logical(ax.clone()),
                Justification::Pa(ax) => Justification::Pa(ax.clone()),
                Justification::Hypothesis(_) => unreachable!("hypothesis-free"),
                Justification::ModusPonens(a, b) => Justification::ModusPonens(map[*a], map[*b]),
                Justification::Generalisation(p, v) => Justification::Generalisation(map[*p], *v),
            };
            map.push(self.push(line.formula.clone(), j));
        }
        *map.last().expect("append: empty derivation")
    }

    /// `B -> B` out of thin air (A1, A2, MP).
    pub fn imp_refl(&mut self, b: &Formula) -> usize {
        let b_b = b.clone().implies(b.clone());
        let l1 = self.logical(LogicalAxiom::A1 {
            b: b.clone(),
            c: b_b.clone(),
        });
        let l2 = self.logical(LogicalAxiom::A2 {
            b: b.clone(),
            c: b_b.clone(),
            d: b.clone(),
        });
        let l3 = self.mp(l1, l2);
        let l4 = self.logical(LogicalAxiom::A1 {
            b: b.clone(),
            c: b.clone(),
        });
        self.mp(l4, l3)
    }

    /// `C -> B` from `B` (at `premise`): A1 then MP.
    pub fn weaken(&mut self, premise: usize, c: &Formula) -> usize {
        let b = self.formula_at(premise).clone();
        let a1 = self.logical(LogicalAxiom::A1 {
            b,
            c: c.clone(),
        });
        self.mp(premise, a1)
    }

    /// `A -> C` from `A -> B` (at `ab`) and `B -> C` (at `bc`).
    pub fn syllogism(&mut self, ab: usize, bc: usize) -> usize {
        let Formula::Implies(a, b) = self.formula_at(ab).clone() else {
            panic!("syllogism: line {ab} is not an implication");
        };
        let Formula::Implies(b2, c) = self.formula_at(bc).clone() else {
            panic!("syllogism: line {bc} is not an implication");
        };
        assert_eq!(b, b2, "syllogism: middle formula mismatch");
        let lifted = self.weaken(bc, &a);
        let a2 = self.logical(LogicalAxiom::A2 {
            b: (*a).clone(),
            c: (*b).clone(),
            d: (*c).clone(),
        });
        let step = self.mp(lifted, a2);
        self.mp(ab, step)
    }

    /// `~~B -> B` for closed `B`, built by the deduction transformation.
    pub fn double_neg_elim(&mut self, b: &Formula) -> usize {
        assert!(b.is_closed(), "double_neg_elim: B must be closed");
        let nn = b.clone().not().not();
        let mut sub = ProofBuilder::with_hypotheses(vec![nn.clone()]);
        let hyp = sub.hypothesis(0);
        // ~B -> ~~B by weakening the hypothesis.
        let nb_nnb = sub.weaken(hyp, &b.clone().not());
        // A3 [C := B, B := ~B]: (~B -> ~~B) -> ((~B -> ~B) -> B)
        let a3 = sub.logical(LogicalAxiom::A3 {
            b: b.clone().not(),
            c: b.clone(),
        });
        let step = sub.mp(nb_nnb, a3);
        let refl = sub.imp_refl(&b.clone().not());
        sub.mp(refl, step);
        let proof = deduction_transform(&sub.finish()).expect("~~B |- B always transforms");
        self.append(&proof)
    }

    /// `~~B` from `B` (at `premise`), for closed `B`.
    pub fn double_neg_intro(&mut self, premise: usize) -> usize {
        let b = self.formula_at(premise).clone();
        assert!(b.is_closed(), "double_neg_intro: B must be closed");
        let nb = b.clone().not();
        // ~~~B -> ~B, then A3 [C := ~~B, B := B] closes with ~~~B -> B.
        let dn = self.double_neg_elim(&nb);
        let a3 = self.logical(LogicalAxiom::A3 {
            b: b.clone(),
            c: nb.clone().not(),
        });
        let step = self.mp(dn, a3);
        let lifted = self.weaken(premise, &nb.clone().not().not());
        self.mp(lifted, step)
    }

    /// `~A` from `A -> B` (at `imp`) and `~B` (at `negated`); `A`, `B` closed.
    pub fn modus_tollens(&mut self, imp: usize, negated: usize) -> usize {
        let Formula::Implies(a, b) = self.formula_at(imp).clone() else {
            panic!("modus_tollens: line {imp} is not an implication");
        };
        assert_eq!(
            *self.formula_at(negated),
            b.clone().not(),
            "modus_tollens: negation mismatch"
        );
        let na = a.clone().not();
        // ~~A -> ~B via ~~A -> A -> B; ~~A -> B ... A3 [C := ~A] finishes.
        let dn = self.double_neg_elim(&a);
        let nna_b = self.syllogism(dn, imp);
        let nna_nb = self.weaken(negated, &na.clone().not());
        let a3 = self.logical(LogicalAxiom::A3 {
            b: (*b).clone(),
            c: na.clone(),
        });
        let step = self.mp(nna_nb, a3);
        self.mp(nna_b, step)
    }

    /// `t = t`: PA5 at `t`, then PA1 twice.
    pub fn eq_refl(&mut self, t: &Term) -> usize {
        let pa5 = self.pa(PaAxiom::Pa5 { t1: t.clone() });
        let pa1 = self.pa(PaAxiom::Pa1 {
            t1: t.clone().add(Term::Zero),
            t2: t.clone(),
            t3: t.clone(),
        });
        let step = self.mp(pa5, pa1);
        self.mp(pa5, step)
    }

    /// `~forall var. ~F[witness/var]`-style existence: from a proof of
    /// `F[witness/var]` (at `premise`), concludes `~forall var. ~F`, the
    /// stored form of `exists var. F`. The universal must be closed.
    pub fn exists_intro(
        &mut self,
        premise: usize,
        var: VarIndex,
        body: &Formula,
        witness: &Term,
    ) -> usize {
        let instance = body
            .substitute(var, witness)
            .expect("witness not free for var");
        assert_eq!(*self.formula_at(premise), instance, "exists_intro: premise mismatch");
        let universal = Formula::forall(var, body.clone().not());
        assert!(universal.is_closed(), "exists_intro: universal must be closed");
        // (forall var. ~F) -> ~F[w/var], then modus tollens with ~~F[w/var].
        let a4 = self.logical(LogicalAxiom::A4 {
            var,
            body: body.clone().not(),
            term: witness.clone(),
        });
        let nn = self.double_neg_intro(premise);
        self.modus_tollens(a4, nn)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::proof::check;
    use crate::syntax::parse_formula;

    fn p(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn derived_rules_all_check() {
        let mut b = ProofBuilder::new();
        let refl = b.eq_refl(&Term::numeral(2));
        assert_eq!(*b.formula_at(refl), p("(0'' = 0'')"));

        let ir = b.imp_refl(&p("(0 = 0)"));
        assert_eq!(*b.formula_at(ir), p("((0 = 0) -> (0 = 0))"));

        let dn = b.double_neg_intro(refl);
        assert_eq!(*b.formula_at(dn), p("~~(0'' = 0'')"));

        let d = b.finish();
        let report = check(&d);
        assert!(report.accepted() && report.is_proof, "{:?}", report.verdict);
    }

    #[test]
    fn modus_tollens_checks() {
        // (0' = 0'') -> (0 = 0')  [PA4],  ~(0 = 0')  [PA3]  |-  ~(0' = 0'')
        let mut b = ProofBuilder::new();
        let imp = b.pa(PaAxiom::Pa4 {
            t1: Term::Zero,
            t2: Term::numeral(1),
        });
        let neg = b.pa(PaAxiom::Pa3 { t1: Term::Zero });
        let mt = b.modus_tollens(imp, neg);
        assert_eq!(*b.formula_at(mt), p("~(0' = 0'')"));
        assert!(check(&b.finish()).accepted());
    }

    #[test]
    fn exists_intro_checks() {
        // From 0'' = 0'': there is an x1 with x1 = 0''.
        let mut b = ProofBuilder::new();
        let body = p("(x1 = 0'')");
        let refl = b.eq_refl(&Term::numeral(2));
        let ex = b.exists_intro(refl, 1, &body, &Term::numeral(2));
        assert_eq!(*b.formula_at(ex), p("~ forall x1 . ~(x1 = 0'')"));
        let report = check(&b.finish());
        assert!(report.accepted() && report.is_proof);
    }
}
