//! Recursive-descent parser for the PA surface syntax.
//!
//! Grammar (whitespace insignificant between tokens):
//!
//! ```text
//! term    := "0" | var | term "'" | "(" term "+" term ")" | "(" term "*" term ")"
//! var     := "x" nonzero-digit digit*
//! formula := "(" term "=" term ")" | "~" formula | "(" formula "->" formula ")"
//!          | "forall" var "." formula | "exists" var "." formula
//! ```
//!
//! Two conveniences beyond the core grammar: the parentheses around a
//! top-level equality may be omitted (`(x1 + 0) = x1` parses like
//! `((x1 + 0) = x1)`), and `&`, `|`, `<->` are accepted inside parentheses as
//! abbreviations that expand to the primitive connectives. `exists` always
//! expands to `~forall~`.

use thiserror::Error;

use super::{Formula, Term, VarIndex};

/// Parse failure, with a byte offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected {found} at byte {position}")]
    UnexpectedToken { position: usize, found: String },
    #[error("unbalanced parenthesis at byte {position}")]
    UnbalancedParen { position: usize },
    #[error("bad variable at byte {position}: {reason}")]
    BadVariable { position: usize, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Zero,
    Var(VarIndex),
    Tick,
    Plus,
    Star,
    Eq,
    Not,
    Arrow,
    And,
    Or,
    Iff,
    LParen,
    RParen,
    Dot,
    ForAll,
    Exists,
}

impl Tok {
    fn describe(&self) -> &'static str {
        match self {
            Tok::Zero => "'0'",
            Tok::Var(_) => "variable",
            Tok::Tick => "'",
            Tok::Plus => "'+'",
            Tok::Star => "'*'",
            Tok::Eq => "'='",
            Tok::Not => "'~'",
            Tok::Arrow => "'->'",
            Tok::And => "'&'",
            Tok::Or => "'|'",
            Tok::Iff => "'<->'",
            Tok::LParen => "'('",
            Tok::RParen => "')'",
            Tok::Dot => "'.'",
            Tok::ForAll => "'forall'",
            Tok::Exists => "'exists'",
        }
    }
}

fn lex(input: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = input.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
            }
            b'0' => {
                toks.push((Tok::Zero, start));
                i += 1;
            }
            b'\'' => {
                toks.push((Tok::Tick, start));
                i += 1;
            }
            b'+' => {
                toks.push((Tok::Plus, start));
                i += 1;
            }
            b'*' => {
                toks.push((Tok::Star, start));
                i += 1;
            }
            b'=' => {
                toks.push((Tok::Eq, start));
                i += 1;
            }
            b'~' => {
                toks.push((Tok::Not, start));
                i += 1;
            }
            b'(' => {
                toks.push((Tok::LParen, start));
                i += 1;
            }
            b')' => {
                toks.push((Tok::RParen, start));
                i += 1;
            }
            b'.' => {
                toks.push((Tok::Dot, start));
                i += 1;
            }
            b'&' => {
                toks.push((Tok::And, start));
                i += 1;
            }
            b'|' => {
                toks.push((Tok::Or, start));
                i += 1;
            }
            b'-' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    toks.push((Tok::Arrow, start));
                    i += 2;
                } else {
                    return Err(ParseError::UnexpectedToken {
                        position: start,
                        found: "'-'".into(),
                    });
                }
            }
            b'<' => {
                if bytes.get(i + 1) == Some(&b'-') && bytes.get(i + 2) == Some(&b'>') {
                    toks.push((Tok::Iff, start));
                    i += 3;
                } else {
                    return Err(ParseError::UnexpectedToken {
                        position: start,
                        found: "'<'".into(),
                    });
                }
            }
            b'x' => {
                let mut j = i + 1;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                let digits = &input[i + 1..j];
                if digits.is_empty() {
                    return Err(ParseError::BadVariable {
                        position: start,
                        reason: "missing index after 'x'".into(),
                    });
                }
                if digits.starts_with('0') {
                    return Err(ParseError::BadVariable {
                        position: start,
                        reason: format!("index must not start with 0: x{digits}"),
                    });
                }
                let index: VarIndex = digits.parse().map_err(|_| ParseError::BadVariable {
                    position: start,
                    reason: format!("index out of range: x{digits}"),
                })?;
                toks.push((Tok::Var(index), start));
                i = j;
            }
            _ if b.is_ascii_alphabetic() => {
                let mut j = i;
                while j < bytes.len() && bytes[j].is_ascii_alphabetic() {
                    j += 1;
                }
                let word = &input[i..j];
                match word {
                    "forall" => toks.push((Tok::ForAll, start)),
                    "exists" => toks.push((Tok::Exists, start)),
                    _ => {
                        return Err(ParseError::UnexpectedToken {
                            position: start,
                            found: format!("'{word}'"),
                        })
                    }
                }
                i = j;
            }
            _ => {
                return Err(ParseError::UnexpectedToken {
                    position: start,
                    found: format!("{:?}", char::from(b)),
                })
            }
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    input_len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn position(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(_, p)| *p)
            .unwrap_or(self.input_len)
    }

    fn advance(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self) -> ParseError {
        match self.peek() {
            Some(t) => ParseError::UnexpectedToken {
                position: self.position(),
                found: t.describe().into(),
            },
            None => ParseError::UnexpectedToken {
                position: self.input_len,
                found: "end of input".into(),
            },
        }
    }

    fn expect(&mut self, want: &Tok) -> Result<(), ParseError> {
        if self.peek() == Some(want) {
            self.pos += 1;
            Ok(())
        } else if *want == Tok::RParen {
            Err(ParseError::UnbalancedParen {
                position: self.position(),
            })
        } else {
            Err(self.unexpected())
        }
    }

    fn parse_var(&mut self) -> Result<VarIndex, ParseError> {
        match self.advance() {
            Some(Tok::Var(v)) => Ok(v),
            _ => {
                self.pos = self.pos.saturating_sub(1);
                Err(self.unexpected())
            }
        }
    }

    fn parse_term(&mut self) -> Result<Term, ParseError> {
        let mut t = match self.peek() {
            Some(Tok::Zero) => {
                self.advance();
                Term::Zero
            }
            Some(Tok::Var(v)) => {
                let v = *v;
                self.advance();
                Term::Var(v)
            }
            Some(Tok::LParen) => {
                self.advance();
                let left = self.parse_term()?;
                let op = self.advance().ok_or_else(|| self.unexpected())?;
                let right = self.parse_term()?;
                self.expect(&Tok::RParen)?;
                match op {
                    Tok::Plus => left.add(right),
                    Tok::Star => left.mul(right),
                    other => {
                        // Roll back over ')' arg op: report at the operator.
                        return Err(ParseError::UnexpectedToken {
                            position: self.position(),
                            found: other.describe().into(),
                        });
                    }
                }
            }
            _ => return Err(self.unexpected()),
        };
        while self.peek() == Some(&Tok::Tick) {
            self.advance();
            t = t.succ();
        }
        Ok(t)
    }

    fn parse_formula(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Some(Tok::Not) => {
                self.advance();
                Ok(self.parse_formula()?.not())
            }
            Some(Tok::ForAll) | Some(Tok::Exists) => {
                let exists = self.peek() == Some(&Tok::Exists);
                self.advance();
                let v = self.parse_var()?;
                self.expect(&Tok::Dot)?;
                let body = self.parse_formula()?;
                Ok(if exists {
                    Formula::exists(v, body)
                } else {
                    Formula::forall(v, body)
                })
            }
            Some(Tok::Zero) | Some(Tok::Var(_)) | Some(Tok::LParen) => {
                // Equality first: its left term may itself start with '('.
                let save = self.pos;
                if let Ok(left) = self.parse_term() {
                    if self.peek() == Some(&Tok::Eq) {
                        self.advance();
                        let right = self.parse_term()?;
                        return Ok(Formula::Eq(left, right));
                    }
                }
                self.pos = save;
                // Otherwise a parenthesized compound: (F -> G), (F & G),
                // (F | G), (F <-> G), or a grouped formula (F).
                self.expect(&Tok::LParen)?;
                let left = self.parse_formula()?;
                let f = match self.peek() {
                    Some(Tok::Arrow) => {
                        self.advance();
                        left.implies(self.parse_formula()?)
                    }
                    Some(Tok::And) => {
                        self.advance();
                        left.and(self.parse_formula()?)
                    }
                    Some(Tok::Or) => {
                        self.advance();
                        left.or(self.parse_formula()?)
                    }
                    Some(Tok::Iff) => {
                        self.advance();
                        left.iff(self.parse_formula()?)
                    }
                    _ => left,
                };
                self.expect(&Tok::RParen)?;
                Ok(f)
            }
            _ => Err(self.unexpected()),
        }
    }
}

/// Parses a formula; the whole input must be consumed.
pub fn parse_formula(input: &str) -> Result<Formula, ParseError> {
    let toks = lex(input)?;
    let mut p = Parser {
        toks,
        pos: 0,
        input_len: input.len(),
    };
    let f = p.parse_formula()?;
    if p.peek().is_some() {
        return Err(p.unexpected());
    }
    Ok(f)
}

/// Parses a term; the whole input must be consumed.
pub fn parse_term(input: &str) -> Result<Term, ParseError> {
    let toks = lex(input)?;
    let mut p = Parser {
        toks,
        pos: 0,
        input_len: input.len(),
    };
    let t = p.parse_term()?;
    if p.peek().is_some() {
        return Err(p.unexpected());
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: VarIndex) -> Term {
        Term::Var(i)
    }

    #[test]
    fn pa5_surface_form() {
        let f = parse_formula("(x1 + 0) = x1").unwrap();
        assert_eq!(f, Formula::Eq(x(1).add(Term::Zero), x(1)));
        // The fully parenthesized form parses identically.
        assert_eq!(parse_formula("((x1 + 0) = x1)").unwrap(), f);
    }

    #[test]
    fn quantified_negation() {
        let f = parse_formula("forall x1 . ~ (0 = x1')").unwrap();
        assert_eq!(
            f,
            Formula::forall(1, Formula::Eq(Term::Zero, x(1).succ()).not())
        );
    }

    #[test]
    fn exists_is_an_abbreviation() {
        let f = parse_formula("exists x2 . (x2 = 0)").unwrap();
        assert_eq!(
            f,
            Formula::forall(2, Formula::Eq(x(2), Term::Zero).not()).not()
        );
    }

    #[test]
    fn connective_abbreviations_expand() {
        let a = Formula::Eq(Term::Zero, Term::Zero);
        let b = Formula::Eq(x(1), x(1));
        assert_eq!(
            parse_formula("((0 = 0) & (x1 = x1))").unwrap(),
            a.clone().and(b.clone())
        );
        assert_eq!(
            parse_formula("((0 = 0) | (x1 = x1))").unwrap(),
            a.clone().or(b.clone())
        );
        assert_eq!(parse_formula("((0 = 0) <-> (x1 = x1))").unwrap(), a.iff(b));
    }

    #[test]
    fn ticks_bind_to_the_preceding_term() {
        assert_eq!(parse_term("0''").unwrap(), Term::numeral(2));
        assert_eq!(
            parse_term("(x1 + 0)''").unwrap(),
            x(1).add(Term::Zero).succ().succ()
        );
    }

    #[test]
    fn rejects_bad_variables() {
        assert!(matches!(
            parse_formula("(x0 = 0)"),
            Err(ParseError::BadVariable { .. })
        ));
        assert!(matches!(
            parse_formula("(x01 = 0)"),
            Err(ParseError::BadVariable { .. })
        ));
        assert!(matches!(
            parse_formula("(x = 0)"),
            Err(ParseError::BadVariable { .. })
        ));
    }

    #[test]
    fn rejects_unbalanced_parens() {
        assert!(matches!(
            parse_formula("((0 = 0) -> (0 = 0)"),
            Err(ParseError::UnbalancedParen { .. })
        ));
    }

    #[test]
    fn rejects_trailing_garbage() {
        assert!(parse_formula("(0 = 0) (0 = 0)").is_err());
        assert!(parse_term("0' x1").is_err());
    }

    #[test]
    fn error_positions_point_into_the_input() {
        match parse_formula("(0 = %)") {
            Err(ParseError::UnexpectedToken { position, .. }) => assert_eq!(position, 5),
            other => panic!("expected UnexpectedToken, got {other:?}"),
        }
    }
}
