//! Goedel numbering of formulas and proof sequences.
//!
//! The 1931-style scheme: each symbol gets an odd code
//!
//! ```text
//! 0 -> 1    ' -> 3    ~ -> 5    -> -> 7    forall -> 9
//! ( -> 11   ) -> 13   = -> 15   + -> 17    * -> 19    x_k -> 21 + 2k
//! ```
//!
//! a symbol string `s1..sn` codes as `prod p_i ^ s_i` over the first `n`
//! primes, and a sequence of strings codes as `prod p_i ^ c_i` over the
//! string codes `c_i`. Quantifiers appear in the symbol stream in the
//! bracketed form `(forall xk)F`.
//!
//! String codes are ordinary big naturals. Sequence codes are *exact but kept
//! factored* ([`SequenceCode`]): the exponents of a sequence code are formula
//! codes in the 10^25-and-up range, so the expanded integer `2^c1 * ...` has
//! more bits than any machine can store. The factored form is the canonical
//! representation of that natural (unique by prime factorization); equality,
//! decoding and the proof-pair relation all work on it directly, and
//! [`SequenceCode::to_value`] expands the few codes small enough to exist.

mod beta;
mod proof_pair;

pub use beta::{beta_eval, bt_formula, encode_sequence, BetaPair};
pub use proof_pair::{proof_pair, proof_pair_values};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Pow, Zero};
use thiserror::Error;

use crate::proof::Derivation;
use crate::syntax::{Formula, Term, VarIndex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GodelError {
    #[error("not a code: {0}")]
    NotACode(String),
    #[error("cannot encode a derivation with hypotheses as a proof sequence")]
    HasHypotheses,
}

/// The Goedel number of a symbol string (a formula or a term).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GodelCode(pub BigUint);

impl fmt::Display for GodelCode {
    fn fmt(&self, w: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(w, "{}", self.0)
    }
}

impl FromStr for GodelCode {
    type Err = GodelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BigUint::from_str(s)
            .map(GodelCode)
            .map_err(|_| GodelError::NotACode(format!("not a decimal natural: {s:?}")))
    }
}

/// The Goedel number of a finite sequence of symbol strings, stored as the
/// exponent list of its prime factorization: `exponents[i]` is the exponent
/// of the (i+1)-th prime. All exponents are >= 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SequenceCode {
    exponents: Vec<BigUint>,
}

impl SequenceCode {
    pub fn from_string_codes(codes: Vec<BigUint>) -> Result<Self, GodelError> {
        if codes.is_empty() {
            return Err(GodelError::NotACode("empty sequence".into()));
        }
        if codes.iter().any(|c| c.is_zero()) {
            return Err(GodelError::NotACode("zero exponent".into()));
        }
        Ok(SequenceCode { exponents: codes })
    }

    pub fn exponents(&self) -> &[BigUint] {
        &self.exponents
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    /// Factors an explicit natural into a sequence code: exponents of the
    /// consecutive primes `2, 3, 5, ...` with no gaps and nothing left over.
    pub fn try_from_value(value: &BigUint) -> Result<Self, GodelError> {
        let mut rest = value.clone();
        if rest <= BigUint::one() {
            return Err(GodelError::NotACode(format!("{value} codes no sequence")));
        }
        let mut exponents = Vec::new();
        let mut primes = Primes::new();
        while !rest.is_one() {
            let p = BigUint::from(primes.next_prime());
            let mut e = BigUint::zero();
            while (&rest % &p).is_zero() {
                rest /= &p;
                e += 1u32;
            }
            if e.is_zero() {
                return Err(GodelError::NotACode(format!(
                    "prime {p} missing from the factorization"
                )));
            }
            exponents.push(e);
        }
        SequenceCode::from_string_codes(exponents)
    }

    /// Expands to the explicit natural when it fits in `bit_limit` bits.
    pub fn to_value(&self, bit_limit: u64) -> Option<BigUint> {
        // prod p_i^{e_i} needs sum e_i*log2(p_i) bits; refuse without trying
        // when an exponent alone is out of range.
        let mut estimate = 0.0f64;
        let mut primes = Primes::new();
        for e in &self.exponents {
            let p = primes.next_prime();
            let digits = e.to_u64_digits();
            if digits.len() > 1 {
                return None;
            }
            let e = digits.first().copied().unwrap_or(0);
            estimate += e as f64 * (p as f64).log2();
            if estimate > bit_limit as f64 {
                return None;
            }
        }
        let mut value = BigUint::one();
        let mut primes = Primes::new();
        for e in &self.exponents {
            let p = BigUint::from(primes.next_prime());
            let e = e.to_u64_digits().first().copied().unwrap_or(0);
            value *= Pow::pow(&p, e);
        }
        Some(value)
    }
}

impl fmt::Display for SequenceCode {
    /// Factored form: `2^c1 * 3^c2 * ...`.
    fn fmt(&self, w: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut primes = Primes::new();
        for (i, e) in self.exponents.iter().enumerate() {
            if i > 0 {
                w.write_str(" * ")?;
            }
            write!(w, "{}^{}", primes.next_prime(), e)?;
        }
        Ok(())
    }
}

/// Incremental prime generator (trial division; desk scale).
pub(crate) struct Primes {
    found: Vec<u64>,
}

impl Primes {
    pub(crate) fn new() -> Self {
        Primes { found: Vec::new() }
    }

    pub(crate) fn next_prime(&mut self) -> u64 {
        let mut candidate = self.found.last().map(|p| p + 1).unwrap_or(2);
        loop {
            if self
                .found
                .iter()
                .take_while(|p| *p * *p <= candidate)
                .all(|p| candidate % p != 0)
            {
                self.found.push(candidate);
                return candidate;
            }
            candidate += 1;
        }
    }
}

// ---------------------------------------------------------------------------
// Symbol streams
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Symbol {
    Zero,
    Tick,
    Not,
    Arrow,
    ForAll,
    LParen,
    RParen,
    Eq,
    Plus,
    Star,
    Var(VarIndex),
}

impl Symbol {
    fn code(self) -> u64 {
        match self {
            Symbol::Zero => 1,
            Symbol::Tick => 3,
            Symbol::Not => 5,
            Symbol::Arrow => 7,
            Symbol::ForAll => 9,
            Symbol::LParen => 11,
            Symbol::RParen => 13,
            Symbol::Eq => 15,
            Symbol::Plus => 17,
            Symbol::Star => 19,
            Symbol::Var(k) => 21 + 2 * k as u64,
        }
    }

    fn from_code(code: &BigUint) -> Result<Symbol, GodelError> {
        let digits = code.to_u64_digits();
        if digits.len() > 1 {
            return Err(GodelError::NotACode(format!("symbol code {code} too large")));
        }
        let c = digits.first().copied().unwrap_or(0);
        Ok(match c {
            1 => Symbol::Zero,
            3 => Symbol::Tick,
            5 => Symbol::Not,
            7 => Symbol::Arrow,
            9 => Symbol::ForAll,
            11 => Symbol::LParen,
            13 => Symbol::RParen,
            15 => Symbol::Eq,
            17 => Symbol::Plus,
            19 => Symbol::Star,
            c if c >= 23 && c % 2 == 1 => {
                let k = (c - 21) / 2;
                let k = VarIndex::try_from(k)
                    .map_err(|_| GodelError::NotACode(format!("variable index {k} too large")))?;
                Symbol::Var(k)
            }
            other => return Err(GodelError::NotACode(format!("unknown symbol code {other}"))),
        })
    }
}

fn term_symbols(t: &Term, out: &mut Vec<Symbol>) {
    match t {
        Term::Zero => out.push(Symbol::Zero),
        Term::Var(v) => out.push(Symbol::Var(*v)),
        Term::Succ(inner) => {
            term_symbols(inner, out);
            out.push(Symbol::Tick);
        }
        Term::Add(l, r) => {
            out.push(Symbol::LParen);
            term_symbols(l, out);
            out.push(Symbol::Plus);
            term_symbols(r, out);
            out.push(Symbol::RParen);
        }
        Term::Mul(l, r) => {
            out.push(Symbol::LParen);
            term_symbols(l, out);
            out.push(Symbol::Star);
            term_symbols(r, out);
            out.push(Symbol::RParen);
        }
    }
}

fn formula_symbols(f: &Formula, out: &mut Vec<Symbol>) {
    match f {
        Formula::Eq(l, r) => {
            out.push(Symbol::LParen);
            term_symbols(l, out);
            out.push(Symbol::Eq);
            term_symbols(r, out);
            out.push(Symbol::RParen);
        }
        Formula::Not(inner) => {
            out.push(Symbol::Not);
            formula_symbols(inner, out);
        }
        Formula::Implies(l, r) => {
            out.push(Symbol::LParen);
            formula_symbols(l, out);
            out.push(Symbol::Arrow);
            formula_symbols(r, out);
            out.push(Symbol::RParen);
        }
        Formula::ForAll(v, inner) => {
            out.push(Symbol::LParen);
            out.push(Symbol::ForAll);
            out.push(Symbol::Var(*v));
            out.push(Symbol::RParen);
            formula_symbols(inner, out);
        }
    }
}

fn encode_symbols(symbols: &[Symbol]) -> BigUint {
    let mut primes = Primes::new();
    let mut value = BigUint::one();
    for s in symbols {
        let p = BigUint::from(primes.next_prime());
        value *= Pow::pow(&p, s.code());
    }
    value
}

fn decode_symbols(value: &BigUint) -> Result<Vec<Symbol>, GodelError> {
    let seq = SequenceCode::try_from_value(value)?;
    seq.exponents.iter().map(Symbol::from_code).collect()
}

/// Goedel number of a formula's symbol string.
pub fn encode_formula(f: &Formula) -> GodelCode {
    let mut symbols = Vec::new();
    formula_symbols(f, &mut symbols);
    GodelCode(encode_symbols(&symbols))
}

/// Goedel number of a term's symbol string.
pub fn encode_term(t: &Term) -> GodelCode {
    let mut symbols = Vec::new();
    term_symbols(t, &mut symbols);
    GodelCode(encode_symbols(&symbols))
}

/// Inverse of [`encode_formula`].
pub fn decode_formula(code: &GodelCode) -> Result<Formula, GodelError> {
    let symbols = decode_symbols(&code.0)?;
    let mut parser = SymbolParser { symbols, pos: 0 };
    let f = parser.formula()?;
    parser.finished()?;
    Ok(f)
}

/// Inverse of [`encode_term`].
pub fn decode_term(code: &GodelCode) -> Result<Term, GodelError> {
    let symbols = decode_symbols(&code.0)?;
    let mut parser = SymbolParser { symbols, pos: 0 };
    let t = parser.term()?;
    parser.finished()?;
    Ok(t)
}

/// Goedel number of the sequence of line formulas of a hypothesis-free
/// derivation. Justifications are not encoded; the proof-pair relation
/// reconstructs them by bounded search.
pub fn encode_proof(d: &Derivation) -> Result<SequenceCode, GodelError> {
    if !d.hypotheses.is_empty() {
        return Err(GodelError::HasHypotheses);
    }
    SequenceCode::from_string_codes(d.formulas().map(|f| encode_formula(f).0).collect())
}

struct SymbolParser {
    symbols: Vec<Symbol>,
    pos: usize,
}

impl SymbolParser {
    fn peek(&self) -> Option<Symbol> {
        self.symbols.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<Symbol> {
        let s = self.peek();
        if s.is_some() {
            self.pos += 1;
        }
        s
    }

    fn expect(&mut self, s: Symbol) -> Result<(), GodelError> {
        if self.peek() == Some(s) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.bad("unexpected symbol"))
        }
    }

    fn bad(&self, what: &str) -> GodelError {
        GodelError::NotACode(format!("{what} at symbol {}", self.pos))
    }

    fn finished(&self) -> Result<(), GodelError> {
        if self.pos == self.symbols.len() {
            Ok(())
        } else {
            Err(self.bad("trailing symbols"))
        }
    }

    fn term(&mut self) -> Result<Term, GodelError> {
        let mut t = match self.bump() {
            Some(Symbol::Zero) => Term::Zero,
            Some(Symbol::Var(v)) => Term::Var(v),
            Some(Symbol::LParen) => {
                let l = self.term()?;
                let op = self.bump().ok_or_else(|| {
                    GodelError::NotACode("missing term operator".into())
                })?;
                let r = self.term()?;
                self.expect(Symbol::RParen)?;
                match op {
                    Symbol::Plus => l.add(r),
                    Symbol::Star => l.mul(r),
                    _ => return Err(self.bad("bad term operator")),
                }
            }
            _ => return Err(self.bad("not a term")),
        };
        while self.peek() == Some(Symbol::Tick) {
            self.pos += 1;
            t = t.succ();
        }
        Ok(t)
    }

    fn formula(&mut self) -> Result<Formula, GodelError> {
        match self.peek() {
            Some(Symbol::Not) => {
                self.pos += 1;
                Ok(self.formula()?.not())
            }
            Some(Symbol::LParen) => {
                if self.symbols.get(self.pos + 1) == Some(&Symbol::ForAll) {
                    // (forall xk) F
                    self.pos += 2;
                    let Some(Symbol::Var(v)) = self.bump() else {
                        return Err(self.bad("quantifier needs a variable"));
                    };
                    self.expect(Symbol::RParen)?;
                    return Ok(Formula::forall(v, self.formula()?));
                }
                // (t = u) or (F -> G); try the equality first, since its
                // left term may itself open with a parenthesis.
                let save = self.pos;
                self.pos += 1;
                if let Ok(l) = self.term() {
                    if self.peek() == Some(Symbol::Eq) {
                        self.pos += 1;
                        let r = self.term()?;
                        self.expect(Symbol::RParen)?;
                        return Ok(Formula::Eq(l, r));
                    }
                }
                self.pos = save + 1;
                let l = self.formula()?;
                self.expect(Symbol::Arrow)?;
                let r = self.formula()?;
                self.expect(Symbol::RParen)?;
                Ok(l.implies(r))
            }
            _ => Err(self.bad("not a formula")),
        }
    }
}
