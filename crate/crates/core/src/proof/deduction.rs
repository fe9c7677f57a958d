//! The deduction transformation: from a derivation of `B` under hypotheses
//! `H1, ..., Hk = A` (with `A` closed) to a derivation of `A -> B` under
//! `H1, ..., H(k-1)` alone.
//!
//! The construction is the usual line-by-line one: axiom and foreign
//! hypothesis lines pass through A1 + MP, the `A` lines become the derived
//! `A -> A`, MP lines route through A2, and generalisation lines route
//! through Gen + A5 (sound because `A` is closed).

use thiserror::Error;

use super::{check, Derivation, Justification, Line, LogicalAxiom};
use crate::syntax::Formula;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeductionError {
    #[error("derivation does not check")]
    NotAccepted,
    #[error("derivation has no hypotheses to discharge")]
    NoHypotheses,
    #[error("last hypothesis is not closed: free variables remain")]
    OpenHypothesis,
}

/// Discharges the last hypothesis. The result always checks: the output of a
/// successful call is an accepted derivation of `A -> B`.
pub fn deduction_transform(d: &Derivation) -> Result<Derivation, DeductionError> {
    if !check(d).accepted() {
        return Err(DeductionError::NotAccepted);
    }
    let Some(a) = d.hypotheses.last().cloned() else {
        return Err(DeductionError::NoHypotheses);
    };
    if !a.is_closed() {
        return Err(DeductionError::OpenHypothesis);
    }
    let discharged = d.hypotheses.len() - 1;

    let mut out: Vec<Line> = Vec::new();
    // For each input line i, the output line proving A -> F_i.
    let mut image: Vec<usize> = Vec::with_capacity(d.lines.len());

    for line in &d.lines {
        let f = &line.formula;
        let target = a.clone().implies(f.clone());
        match &line.justification {
            Justification::Hypothesis(k) if *k == discharged => {
                // F_i is A itself: derive A -> A.
                image.push(push_a_implies_a(&mut out, &a));
            }
            Justification::Logical(_) | Justification::Pa(_) | Justification::Hypothesis(_) => {
                // F_i stands on its own; weaken it with A1 + MP.
                out.push(line.clone());
                let base = out.len() - 1;
                out.push(Line::new(
                    f.clone().implies(target.clone()),
                    Justification::Logical(LogicalAxiom::A1 {
                        b: f.clone(),
                        c: a.clone(),
                    }),
                ));
                out.push(Line::new(
                    target,
                    Justification::ModusPonens(base, base + 1),
                ));
                image.push(out.len() - 1);
            }
            Justification::ModusPonens(ante, imp) => {
                // Have A -> F_ante and A -> (F_ante -> F_i); A2 closes.
                let f_ante = &d.lines[*ante].formula;
                let a2 = LogicalAxiom::A2 {
                    b: a.clone(),
                    c: f_ante.clone(),
                    d: f.clone(),
                };
                let a2_formula = a2.formula().expect("A2 records always build");
                out.push(Line::new(a2_formula, Justification::Logical(a2)));
                let a2_at = out.len() - 1;
                let mid = a
                    .clone()
                    .implies(f_ante.clone())
                    .implies(target.clone());
                debug_assert_eq!(
                    out[a2_at].formula,
                    out[image[*imp]]
                        .formula
                        .clone()
                        .implies(mid.clone())
                );
                out.push(Line::new(mid, Justification::ModusPonens(image[*imp], a2_at)));
                let mid_at = out.len() - 1;
                out.push(Line::new(
                    target,
                    Justification::ModusPonens(image[*ante], mid_at),
                ));
                image.push(out.len() - 1);
            }
            Justification::Generalisation(premise, var) => {
                // Have A -> F_premise; Gen it, then A5 moves the quantifier
                // inside (A closed, so var is not free in A).
                let f_premise = &d.lines[*premise].formula;
                let gen = Formula::forall(*var, a.clone().implies(f_premise.clone()));
                out.push(Line::new(
                    gen,
                    Justification::Generalisation(image[*premise], *var),
                ));
                let gen_at = out.len() - 1;
                let a5 = LogicalAxiom::A5 {
                    var: *var,
                    b: a.clone(),
                    c: f_premise.clone(),
                };
                let a5_formula = a5.formula().expect("A is closed");
                out.push(Line::new(a5_formula, Justification::Logical(a5)));
                out.push(Line::new(
                    target,
                    Justification::ModusPonens(gen_at, gen_at + 1),
                ));
                image.push(out.len() - 1);
            }
        }
    }

    Ok(Derivation::new(d.hypotheses[..discharged].to_vec(), out))
}

/// Appends the five-line derivation of `A -> A` and returns its last index.
fn push_a_implies_a(out: &mut Vec<Line>, a: &Formula) -> usize {
    let a_a = a.clone().implies(a.clone());
    // 1. A -> ((A -> A) -> A)                 A1 [b := A, c := A -> A]
    let l1 = LogicalAxiom::A1 {
        b: a.clone(),
        c: a_a.clone(),
    };
    // 2. (A -> ((A -> A) -> A)) -> ((A -> (A -> A)) -> (A -> A))
    let l2 = LogicalAxiom::A2 {
        b: a.clone(),
        c: a_a.clone(),
        d: a.clone(),
    };
    // 4. A -> (A -> A)                        A1 [b := A, c := A]
    let l4 = LogicalAxiom::A1 {
        b: a.clone(),
        c: a.clone(),
    };
    let base = out.len();
    out.push(Line::new(l1.formula().unwrap(), Justification::Logical(l1)));
    out.push(Line::new(l2.formula().unwrap(), Justification::Logical(l2)));
    out.push(Line::new(
        a.clone().implies(a_a.clone()).implies(a_a.clone()),
        Justification::ModusPonens(base, base + 1),
    ));
    out.push(Line::new(l4.formula().unwrap(), Justification::Logical(l4)));
    out.push(Line::new(a_a, Justification::ModusPonens(base + 3, base + 2)));
    out.len() - 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::proof::PaAxiom;
    use crate::syntax::parse_formula;

    fn p(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn one_line_hypothesis_becomes_b_implies_b() {
        let b = p("((0 + 0) = 0)");
        let d = Derivation::new(
            vec![b.clone()],
            vec![Line::new(b.clone(), Justification::Hypothesis(0))],
        );
        let t = deduction_transform(&d).unwrap();
        assert!(t.hypotheses.is_empty());
        assert_eq!(t.lines.len(), 5);
        assert_eq!(t.conclusion(), Some(&b.clone().implies(b)));
        let report = check(&t);
        assert!(report.accepted() && report.is_proof);
    }

    #[test]
    fn unused_hypothesis_discharges_via_a1() {
        let a = p("(0 = 0)");
        let b = p("((x1 + 0) = x1)");
        let d = Derivation::new(
            vec![a.clone()],
            vec![Line::new(b.clone(), Justification::Pa(PaAxiom::literal(5)))],
        );
        let t = deduction_transform(&d).unwrap();
        assert_eq!(t.conclusion(), Some(&a.implies(b)));
        assert!(check(&t).accepted());
    }

    #[test]
    fn discharge_under_remaining_hypotheses() {
        let h0 = p("(0 = 0)");
        let a = p("(0' = 0')");
        let d = Derivation::new(
            vec![h0.clone(), a.clone()],
            vec![
                Line::new(h0.clone(), Justification::Hypothesis(0)),
                Line::new(a.clone(), Justification::Hypothesis(1)),
            ],
        );
        let t = deduction_transform(&d).unwrap();
        assert_eq!(t.hypotheses, vec![h0]);
        assert_eq!(t.conclusion(), Some(&a.clone().implies(a)));
        let report = check(&t);
        assert!(report.accepted());
        assert!(!report.is_proof);
        // No line may cite the discharged hypothesis.
        for line in &t.lines {
            if let Justification::Hypothesis(k) = line.justification {
                assert!(k < t.hypotheses.len());
            }
        }
    }

    #[test]
    fn open_hypothesis_is_refused() {
        let a = p("(x1 = 0)");
        let d = Derivation::new(
            vec![a.clone()],
            vec![Line::new(a, Justification::Hypothesis(0))],
        );
        assert_eq!(deduction_transform(&d), Err(DeductionError::OpenHypothesis));
    }

    #[test]
    fn unchecked_input_is_refused() {
        let a = p("(0 = 0)");
        let d = Derivation::new(
            vec![a.clone()],
            vec![Line::new(p("(0 = 0')"), Justification::Hypothesis(0))],
        );
        assert_eq!(deduction_transform(&d), Err(DeductionError::NotAccepted));
    }

    #[test]
    fn gen_lines_transform_through_a5() {
        let a = p("(0 = 0)");
        let pa5 = p("((x1 + 0) = x1)");
        let d = Derivation::new(
            vec![a.clone()],
            vec![
                Line::new(pa5.clone(), Justification::Pa(PaAxiom::literal(5))),
                Line::new(
                    Formula::forall(1, pa5.clone()),
                    Justification::Generalisation(0, 1),
                ),
            ],
        );
        let t = deduction_transform(&d).unwrap();
        assert_eq!(t.conclusion(), Some(&a.implies(Formula::forall(1, pa5))));
        let report = check(&t);
        assert!(report.accepted() && report.is_proof);
    }
}
