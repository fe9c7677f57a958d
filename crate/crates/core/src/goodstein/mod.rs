//! Hereditary base representations and the Goodstein apparatus.
//!
//! A [`HereditaryRep`] is a natural number written in a base with every
//! exponent (recursively) written the same way: `9 = 2^(2^(2^0)+2^0) + 2^0`
//! in base 2. The Goodstein step rewrites base `n` to `n+1` and subtracts
//! one; the ordinal mirror substitutes omega for the base and lands in
//! Cantor normal form below epsilon-0.
//!
//! Values along a Goodstein trace outgrow any explicit integer
//! representation within a few hundred steps for starts as small as 16, so
//! the step operates on the representation itself: rewriting the base keeps
//! the form untouched (a canonical base-n form read at base n+1 is exactly
//! the canonical form of the new value), and subtracting one touches only
//! the smallest term, expanding `b^k - 1 = (b-1)(b^(k-1) + ... + 1)` when a
//! borrow runs. Explicit values are materialized on request and only below a
//! caller-supplied size cap.

mod ordinal;
mod step;

pub use ordinal::CnfOrdinal;
pub use step::{
    descent_check, goodstein_sequence, goodstein_sequence_with_limit, goodstein_step,
    z_substituted_diff, GoodsteinTrace, StepBranch, TraceEntry, ZDiff, ZDiffValue,
    DEFAULT_VALUE_BIT_LIMIT,
};

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{Pow, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GoodsteinError {
    #[error("base must be at least 2, got {0}")]
    BadBase(u64),
    #[error("substituted base {z} must exceed the representation base {base}")]
    BadBound { z: u64, base: u64 },
    #[error("the representation is zero; the sequence has terminated")]
    ZeroTerm,
    #[error("borrow cascade of {terms} terms exceeds the expansion cap")]
    CascadeTooLarge { terms: u64 },
    #[error("value too large to materialize")]
    ValueTooLarge,
}

/// A sum of terms `coeff * base^exponent` with `1 <= coeff < base`,
/// exponents strictly decreasing and themselves hereditary forms. The empty
/// sum is zero.
///
/// The form is shared across bases: only digit bounds refer to the base, so
/// a form valid at base `n` is valid at every larger base, with the value
/// recomputed. [`HereditaryRep`] pairs a form with its base.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub(crate) struct HForm {
    /// `(exponent form, coefficient)`, exponents strictly decreasing.
    pub(crate) terms: Vec<(HForm, u64)>,
}

impl HForm {
    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Builds the canonical form of `m` at `base`.
    pub(crate) fn of(m: &BigUint, base: u64) -> HForm {
        let big_base = BigUint::from(base);
        let mut terms = Vec::new();
        let mut rest = m.clone();
        let mut position: u64 = 0;
        while !rest.is_zero() {
            let (q, digit) = rest.div_rem(&big_base);
            if !digit.is_zero() {
                let coeff = digit.to_u64().expect("digit < base fits u64");
                terms.push((HForm::of(&BigUint::from(position), base), coeff));
            }
            rest = q;
            position += 1;
        }
        terms.reverse();
        HForm { terms }
    }

    /// Evaluates at `base`. Exponent values must fit `u32` (beyond that the
    /// result would not fit in memory).
    pub(crate) fn value(&self, base: u64) -> Result<BigUint, GoodsteinError> {
        let big_base = BigUint::from(base);
        let mut acc = BigUint::zero();
        for (exp, coeff) in &self.terms {
            let e = exp
                .value(base)?
                .to_u32()
                .ok_or(GoodsteinError::ValueTooLarge)?;
            acc += BigUint::from(*coeff) * Pow::pow(&big_base, e as u64);
        }
        Ok(acc)
    }

    /// Evaluates at `base` if the result fits `u64`.
    pub(crate) fn value_u64(&self, base: u64) -> Option<u64> {
        let mut acc: u64 = 0;
        for (exp, coeff) in &self.terms {
            let e = exp.value_u64(base)?;
            let power = base.checked_pow(u32::try_from(e).ok()?)?;
            acc = acc.checked_add(coeff.checked_mul(power)?)?;
        }
        Some(acc)
    }

    /// Value comparison without evaluation, valid whenever both forms are
    /// digit-valid at a common base: canonical positional forms compare
    /// lexicographically on (exponent, coefficient), exponents recursively.
    pub(crate) fn cmp_value(&self, other: &HForm) -> Ordering {
        for ((ea, ca), (eb, cb)) in self.terms.iter().zip(&other.terms) {
            match ea.cmp_value(eb) {
                Ordering::Equal => {}
                ord => return ord,
            }
            match ca.cmp(cb) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }

    /// Largest digit anywhere in the form; 0 for zero.
    fn max_digit(&self) -> u64 {
        self.terms
            .iter()
            .map(|(e, c)| (*c).max(e.max_digit()))
            .max()
            .unwrap_or(0)
    }
}

/// A natural number in hereditary base-`base` representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HereditaryRep {
    base: u64,
    form: HForm,
}

impl HereditaryRep {
    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn is_zero(&self) -> bool {
        self.form.is_zero()
    }

    /// The terms `(exponent, coefficient)`, exponents strictly decreasing.
    pub fn terms(&self) -> Vec<(HereditaryRep, u64)> {
        self.form
            .terms
            .iter()
            .map(|(e, c)| {
                (
                    HereditaryRep {
                        base: self.base,
                        form: e.clone(),
                    },
                    *c,
                )
            })
            .collect()
    }

    pub(crate) fn from_form(form: HForm, base: u64) -> HereditaryRep {
        debug_assert!(form.max_digit() < base);
        HereditaryRep { base, form }
    }

    pub(crate) fn form(&self) -> &HForm {
        &self.form
    }

    /// Compares the values of two representations digit-valid at a common
    /// base (any base at least as large as both representations' bases).
    pub fn cmp_value(&self, other: &HereditaryRep) -> Ordering {
        self.form.cmp_value(&other.form)
    }
}

impl fmt::Display for HereditaryRep {
    /// Renders like `2^(2^(2) + 1) + 1` (coefficients as prefixes:
    /// `2*3^2 + 2*3 + 2`).
    fn fmt(&self, w: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn render(form: &HForm, base: u64, w: &mut fmt::Formatter<'_>) -> fmt::Result {
            if form.is_zero() {
                return write!(w, "0");
            }
            for (i, (exp, coeff)) in form.terms.iter().enumerate() {
                if i > 0 {
                    write!(w, " + ")?;
                }
                let exp_is_zero = exp.is_zero();
                let exp_is_one =
                    exp.terms.len() == 1 && exp.terms[0].1 == 1 && exp.terms[0].0.is_zero();
                if exp_is_zero {
                    write!(w, "{coeff}")?;
                } else {
                    if *coeff != 1 {
                        write!(w, "{coeff}*")?;
                    }
                    write!(w, "{base}")?;
                    if !exp_is_one {
                        write!(w, "^(")?;
                        render(exp, base, w)?;
                        write!(w, ")")?;
                    }
                }
            }
            Ok(())
        }
        render(&self.form, self.base, w)
    }
}

/// The unique hereditary representation of `m` in `base`.
pub fn hbr(m: &BigUint, base: u64) -> Result<HereditaryRep, GoodsteinError> {
    if base < 2 {
        return Err(GoodsteinError::BadBase(base));
    }
    Ok(HereditaryRep {
        base,
        form: HForm::of(m, base),
    })
}

/// Convenience wrapper for small starts.
pub fn hbr_u64(m: u64, base: u64) -> Result<HereditaryRep, GoodsteinError> {
    hbr(&BigUint::from(m), base)
}

/// Evaluates `rep` with every occurrence of its base replaced by `base`.
/// Substituting upward (`base` at least the representation's own base)
/// always keeps digits valid.
pub fn hbr_value(rep: &HereditaryRep, base: u64) -> Result<BigUint, GoodsteinError> {
    if base < 2 {
        return Err(GoodsteinError::BadBase(base));
    }
    rep.form.value(base)
}
