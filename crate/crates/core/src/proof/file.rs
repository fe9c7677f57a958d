//! Line-oriented text format for derivations.
//!
//! ```text
//! # comment lines and blank lines are skipped
//! hyp: <formula>
//! <n>. <formula> ; <justification>
//! ```
//!
//! Hypothesis lines come first, one per hypothesis, in order. Numbered lines
//! follow, `<n>` counting from 1 in order. Justifications:
//!
//! ```text
//! A1(B := <formula>, C := <formula>)
//! A2(B := <formula>, C := <formula>, D := <formula>)
//! A3(B := <formula>, C := <formula>)
//! A4(x := x<k>, B := <formula>, t := <term>)
//! A5(x := x<k>, B := <formula>, C := <formula>)
//! PA1 .. PA8          with optional bindings (t1 := <term>, t2 := ..., t3 := ...)
//! PA9(x := x<k>, F := <formula>)
//! HYP <k>             k-th hypothesis, counting from 1
//! MP <i> <j>          antecedent at line i, implication at line j
//! GEN <i> x<k>
//! ```
//!
//! Formulas and terms use the surface grammar of [`crate::syntax`]; neither
//! contains `,` or `;`, so the separators are unambiguous.

use thiserror::Error;

use super::{Derivation, Justification, Line, LogicalAxiom, PaAxiom};
use crate::syntax::{parse_formula, parse_term, Formula, ParseError, Term, VarIndex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProofFileError {
    #[error("line {line}: {error}")]
    Formula { line: usize, error: ParseError },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
}

fn malformed(line: usize, message: impl Into<String>) -> ProofFileError {
    ProofFileError::Malformed {
        line,
        message: message.into(),
    }
}

/// Parses the text format. Checks shape only; run
/// [`check`](super::check) on the result for logical validity.
pub fn parse_derivation(text: &str) -> Result<Derivation, ProofFileError> {
    let mut hypotheses: Vec<Formula> = Vec::new();
    let mut lines: Vec<Line> = Vec::new();

    for (lineno0, raw) in text.lines().enumerate() {
        let lineno = lineno0 + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix("hyp:") {
            if !lines.is_empty() {
                return Err(malformed(lineno, "hypotheses must precede numbered lines"));
            }
            let f = parse_formula(rest.trim())
                .map_err(|error| ProofFileError::Formula { line: lineno, error })?;
            hypotheses.push(f);
            continue;
        }
        let Some(dot) = trimmed.find('.') else {
            return Err(malformed(lineno, "expected '<n>. <formula> ; <justification>'"));
        };
        let (num_text, rest) = trimmed.split_at(dot);
        let n: usize = num_text
            .trim()
            .parse()
            .map_err(|_| malformed(lineno, format!("bad line number {num_text:?}")))?;
        if n != lines.len() + 1 {
            return Err(malformed(
                lineno,
                format!("line numbered {n}, expected {}", lines.len() + 1),
            ));
        }
        let rest = &rest[1..];
        let Some(semi) = rest.find(';') else {
            return Err(malformed(lineno, "missing ';' before justification"));
        };
        let formula = parse_formula(rest[..semi].trim())
            .map_err(|error| ProofFileError::Formula { line: lineno, error })?;
        let justification = parse_justification(rest[semi + 1..].trim(), lineno)?;
        lines.push(Line::new(formula, justification));
    }

    Ok(Derivation::new(hypotheses, lines))
}

fn parse_justification(text: &str, lineno: usize) -> Result<Justification, ProofFileError> {
    if let Some(rest) = text.strip_prefix("HYP") {
        let k: usize = rest
            .trim()
            .parse()
            .map_err(|_| malformed(lineno, "HYP needs a hypothesis number"))?;
        if k == 0 {
            return Err(malformed(lineno, "hypotheses count from 1"));
        }
        return Ok(Justification::Hypothesis(k - 1));
    }
    if let Some(rest) = text.strip_prefix("MP") {
        let parts: Vec<&str> = rest.split_whitespace().collect();
        let [i, j] = parts.as_slice() else {
            return Err(malformed(lineno, "MP needs two line numbers"));
        };
        let i: usize = i.parse().map_err(|_| malformed(lineno, "bad MP line number"))?;
        let j: usize = j.parse().map_err(|_| malformed(lineno, "bad MP line number"))?;
        if i == 0 || j == 0 {
            return Err(malformed(lineno, "lines count from 1"));
        }
        return Ok(Justification::ModusPonens(i - 1, j - 1));
    }
    if let Some(rest) = text.strip_prefix("GEN") {
        let parts: Vec<&str> = rest.split_whitespace().collect();
        let [i, v] = parts.as_slice() else {
            return Err(malformed(lineno, "GEN needs a line number and a variable"));
        };
        let i: usize = i.parse().map_err(|_| malformed(lineno, "bad GEN line number"))?;
        if i == 0 {
            return Err(malformed(lineno, "lines count from 1"));
        }
        let var = parse_var_token(v, lineno)?;
        return Ok(Justification::Generalisation(i - 1, var));
    }

    let (name, bindings) = match text.find('(') {
        Some(open) => {
            let Some(close) = text.rfind(')') else {
                return Err(malformed(lineno, "unclosed binding list"));
            };
            (text[..open].trim(), parse_bindings(&text[open + 1..close], lineno)?)
        }
        None => (text.trim(), Vec::new()),
    };

    let find = |key: &str| -> Option<&str> {
        bindings
            .iter()
            .find(|(k, _)| *k == key)
            .map(|(_, v)| v.as_str())
    };
    let formula_binding = |key: &str| -> Result<Formula, ProofFileError> {
        let Some(v) = find(key) else {
            return Err(malformed(lineno, format!("{name} needs binding {key}")));
        };
        parse_formula(v).map_err(|error| ProofFileError::Formula { line: lineno, error })
    };
    let term_binding = |key: &str, default: Term| -> Result<Term, ProofFileError> {
        match find(key) {
            None => Ok(default),
            Some(v) => parse_term(v).map_err(|error| ProofFileError::Formula { line: lineno, error }),
        }
    };
    let var_binding = |key: &str| -> Result<VarIndex, ProofFileError> {
        let Some(v) = find(key) else {
            return Err(malformed(lineno, format!("{name} needs binding {key}")));
        };
        parse_var_token(v, lineno)
    };

    let j = match name {
        "A1" => Justification::Logical(LogicalAxiom::A1 {
            b: formula_binding("B")?,
            c: formula_binding("C")?,
        }),
        "A2" => Justification::Logical(LogicalAxiom::A2 {
            b: formula_binding("B")?,
            c: formula_binding("C")?,
            d: formula_binding("D")?,
        }),
        "A3" => Justification::Logical(LogicalAxiom::A3 {
            b: formula_binding("B")?,
            c: formula_binding("C")?,
        }),
        "A4" => Justification::Logical(LogicalAxiom::A4 {
            var: var_binding("x")?,
            body: formula_binding("B")?,
            term: term_binding("t", Term::Var(1))?,
        }),
        "A5" => Justification::Logical(LogicalAxiom::A5 {
            var: var_binding("x")?,
            b: formula_binding("B")?,
            c: formula_binding("C")?,
        }),
        "PA1" => Justification::Pa(PaAxiom::Pa1 {
            t1: term_binding("t1", Term::Var(1))?,
            t2: term_binding("t2", Term::Var(2))?,
            t3: term_binding("t3", Term::Var(3))?,
        }),
        "PA2" => Justification::Pa(PaAxiom::Pa2 {
            t1: term_binding("t1", Term::Var(1))?,
            t2: term_binding("t2", Term::Var(2))?,
        }),
        "PA3" => Justification::Pa(PaAxiom::Pa3 {
            t1: term_binding("t1", Term::Var(1))?,
        }),
        "PA4" => Justification::Pa(PaAxiom::Pa4 {
            t1: term_binding("t1", Term::Var(1))?,
            t2: term_binding("t2", Term::Var(2))?,
        }),
        "PA5" => Justification::Pa(PaAxiom::Pa5 {
            t1: term_binding("t1", Term::Var(1))?,
        }),
        "PA6" => Justification::Pa(PaAxiom::Pa6 {
            t1: term_binding("t1", Term::Var(1))?,
            t2: term_binding("t2", Term::Var(2))?,
        }),
        "PA7" => Justification::Pa(PaAxiom::Pa7 {
            t1: term_binding("t1", Term::Var(1))?,
        }),
        "PA8" => Justification::Pa(PaAxiom::Pa8 {
            t1: term_binding("t1", Term::Var(1))?,
            t2: term_binding("t2", Term::Var(2))?,
        }),
        "PA9" => Justification::Pa(PaAxiom::Pa9 {
            var: var_binding("x")?,
            body: formula_binding("F")?,
        }),
        other => return Err(malformed(lineno, format!("unknown justification {other:?}"))),
    };
    Ok(j)
}

fn parse_var_token(text: &str, lineno: usize) -> Result<VarIndex, ProofFileError> {
    let t = text.trim();
    let Some(digits) = t.strip_prefix('x') else {
        return Err(malformed(lineno, format!("expected a variable like x1, got {t:?}")));
    };
    if digits.is_empty() || digits.starts_with('0') {
        return Err(malformed(lineno, format!("bad variable {t:?}")));
    }
    digits
        .parse()
        .map_err(|_| malformed(lineno, format!("bad variable {t:?}")))
}

fn parse_bindings(text: &str, lineno: usize) -> Result<Vec<(String, String)>, ProofFileError> {
    let mut out = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let Some(assign) = part.find(":=") else {
            return Err(malformed(lineno, format!("binding {part:?} lacks ':='")));
        };
        out.push((
            part[..assign].trim().to_string(),
            part[assign + 2..].trim().to_string(),
        ));
    }
    Ok(out)
}

/// Renders a derivation in the text format; `parse_derivation` inverts it.
pub fn render_derivation(d: &Derivation) -> String {
    let mut out = String::new();
    for h in &d.hypotheses {
        out.push_str(&format!("hyp: {h}\n"));
    }
    for (i, line) in d.lines.iter().enumerate() {
        out.push_str(&format!(
            "{}. {} ; {}\n",
            i + 1,
            line.formula,
            render_justification(&line.justification)
        ));
    }
    out
}

fn render_justification(j: &Justification) -> String {
    match j {
        Justification::Hypothesis(k) => format!("HYP {}", k + 1),
        Justification::ModusPonens(i, jj) => format!("MP {} {}", i + 1, jj + 1),
        Justification::Generalisation(i, v) => format!("GEN {} x{v}", i + 1),
        Justification::Logical(ax) => match ax {
            LogicalAxiom::A1 { b, c } => format!("A1(B := {b}, C := {c})"),
            LogicalAxiom::A2 { b, c, d } => format!("A2(B := {b}, C := {c}, D := {d})"),
            LogicalAxiom::A3 { b, c } => format!("A3(B := {b}, C := {c})"),
            LogicalAxiom::A4 { var, body, term } => {
                format!("A4(x := x{var}, B := {body}, t := {term})")
            }
            LogicalAxiom::A5 { var, b, c } => format!("A5(x := x{var}, B := {b}, C := {c})"),
        },
        Justification::Pa(ax) => match ax {
            PaAxiom::Pa1 { t1, t2, t3 } => format!("PA1(t1 := {t1}, t2 := {t2}, t3 := {t3})"),
            PaAxiom::Pa2 { t1, t2 } => format!("PA2(t1 := {t1}, t2 := {t2})"),
            PaAxiom::Pa3 { t1 } => format!("PA3(t1 := {t1})"),
            PaAxiom::Pa4 { t1, t2 } => format!("PA4(t1 := {t1}, t2 := {t2})"),
            PaAxiom::Pa5 { t1 } => format!("PA5(t1 := {t1})"),
            PaAxiom::Pa6 { t1, t2 } => format!("PA6(t1 := {t1}, t2 := {t2})"),
            PaAxiom::Pa7 { t1 } => format!("PA7(t1 := {t1})"),
            PaAxiom::Pa8 { t1, t2 } => format!("PA8(t1 := {t1}, t2 := {t2})"),
            PaAxiom::Pa9 { var, body } => format!("PA9(x := x{var}, F := {body})"),
        },
    }
}
