//! The Goodstein step, traces, and base-substituted differences.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use super::{hbr, CnfOrdinal, GoodsteinError, HForm, HereditaryRep};

/// Upper bound on the number of terms a single borrow may expand into.
/// A cascade at exponent value k produces k terms; starts at desk scale
/// borrow at tiny exponents, and anything past the cap would not fit in
/// memory as a representation anyway.
const CASCADE_CAP: u64 = 1 << 20;

/// Default ceiling (in bits) for materializing explicit values in traces.
pub const DEFAULT_VALUE_BIT_LIMIT: u64 = 1 << 16;

/// One Goodstein step: rewrite the base to `base + 1`, then subtract one.
///
/// The result equals `hbr(hbr_value(rep, base + 1) - 1, base + 1)`; it is
/// computed on the representation, so it stays cheap even when that value
/// has millions of digits. Fails with `ZeroTerm` on the zero representation
/// and with `CascadeTooLarge` if a borrow would expand past the cap.
pub fn goodstein_step(rep: &HereditaryRep) -> Result<HereditaryRep, GoodsteinError> {
    if rep.is_zero() {
        return Err(GoodsteinError::ZeroTerm);
    }
    let new_base = rep.base() + 1;
    let form = decrement(rep.form(), new_base)?;
    Ok(HereditaryRep::from_form(form, new_base))
}

/// Subtracts one from a nonzero form at `base`.
fn decrement(form: &HForm, base: u64) -> Result<HForm, GoodsteinError> {
    let mut terms = form.terms.clone();
    let (exp, coeff) = terms.pop().expect("nonzero form");
    if exp.is_zero() {
        // Constant digit: plain decrement.
        if coeff > 1 {
            terms.push((exp, coeff - 1));
        }
        return Ok(HForm { terms });
    }
    // Borrow: coeff*b^k - 1 = (coeff-1)*b^k + (b-1)(b^(k-1) + ... + 1).
    let k = exp
        .value_u64(base)
        .filter(|k| *k <= CASCADE_CAP)
        .ok_or(GoodsteinError::CascadeTooLarge { terms: u64::MAX })?;
    if coeff > 1 {
        terms.push((exp, coeff - 1));
    }
    for j in (0..k).rev() {
        terms.push((HForm::of(&BigUint::from(j), base), base - 1));
    }
    Ok(HForm { terms })
}

/// Which branch of the step a representation is about to take: a nonzero
/// constant digit decrements in place, otherwise the smallest term borrows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepBranch {
    ConstantDigit,
    BorrowCascade,
}

/// One row of a Goodstein trace. `value` is present only when it fits the
/// materialization limit the trace was computed with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEntry {
    /// 1-based step index; entry `k` is written in base `k + 1`.
    pub step: u64,
    pub base: u64,
    pub value: Option<BigUint>,
    pub rep: HereditaryRep,
    pub mirror: CnfOrdinal,
}

/// The computed prefix of `G(start)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodsteinTrace {
    pub start: u64,
    pub entries: Vec<TraceEntry>,
    /// True exactly when the last entry's value is zero.
    pub terminated: bool,
}

impl GoodsteinTrace {
    /// The materialized values, where present.
    pub fn values(&self) -> Vec<Option<BigUint>> {
        self.entries.iter().map(|e| e.value.clone()).collect()
    }
}

/// Computes `G(m)` until it hits zero or `max_steps` steps have been applied,
/// with the default value materialization limit.
pub fn goodstein_sequence(m: u64, max_steps: u64) -> Result<GoodsteinTrace, GoodsteinError> {
    goodstein_sequence_with_limit(m, max_steps, DEFAULT_VALUE_BIT_LIMIT)
}

/// As [`goodstein_sequence`], materializing explicit values only while they
/// fit `value_bit_limit` bits.
pub fn goodstein_sequence_with_limit(
    m: u64,
    max_steps: u64,
    value_bit_limit: u64,
) -> Result<GoodsteinTrace, GoodsteinError> {
    let mut rep = hbr(&BigUint::from(m), 2)?;
    let mut entries = vec![entry_for(1, rep.clone(), value_bit_limit)];
    let mut steps_applied = 0;
    while !rep.is_zero() && steps_applied < max_steps {
        rep = goodstein_step(&rep)?;
        steps_applied += 1;
        entries.push(entry_for(steps_applied + 1, rep.clone(), value_bit_limit));
    }
    Ok(GoodsteinTrace {
        start: m,
        terminated: rep.is_zero(),
        entries,
    })
}

fn entry_for(step: u64, rep: HereditaryRep, value_bit_limit: u64) -> TraceEntry {
    let value = materialize(&rep, value_bit_limit);
    TraceEntry {
        step,
        base: rep.base(),
        mirror: CnfOrdinal::mirror(&rep),
        value,
        rep,
    }
}

fn materialize(rep: &HereditaryRep, bit_limit: u64) -> Option<BigUint> {
    if rep.is_zero() {
        return Some(BigUint::zero());
    }
    let top = rep.form().terms.first().expect("nonzero");
    let top_exp = top.0.value_u64(rep.base())?;
    let bits = (top_exp + 1).checked_mul(64 - rep.base().leading_zeros() as u64)? + 64;
    if bits > bit_limit {
        return None;
    }
    rep.form().value(rep.base()).ok()
}

/// True when the mirror ordinals strictly decrease along the trace.
pub fn descent_check(trace: &GoodsteinTrace) -> bool {
    trace
        .entries
        .windows(2)
        .all(|pair| pair[0].mirror > pair[1].mirror)
}

/// The base-substituted difference `d'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZDiff {
    pub branch: StepBranch,
    pub value: ZDiffValue,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ZDiffValue {
    /// The exact difference.
    Exact(BigInt),
    /// Too large to materialize, but verified positive by structural
    /// comparison of the two substituted representations.
    PositiveHuge,
}

impl ZDiff {
    pub fn is_positive(&self) -> bool {
        match &self.value {
            ZDiffValue::Exact(v) => v.is_positive(),
            ZDiffValue::PositiveHuge => true,
        }
    }
}

/// Evaluates both `rep` and its step result with the base replaced by `z`
/// and returns the difference. Requires `z` to exceed the representation's
/// base (which also keeps the step result's digits valid at `z`).
///
/// The shared terms of the two representations cancel symbolically, so the
/// difference is computed from the handful of terms the step actually
/// touched: exactly 1 in the constant-digit branch, and
/// `z^k - n*(z^(k1) + ... + 1)` in the borrow branch. When even the residual
/// is too large to materialize, positivity is established by comparing the
/// representations as base-`z` positional forms.
pub fn z_substituted_diff(rep: &HereditaryRep, z: u64) -> Result<ZDiff, GoodsteinError> {
    if z <= rep.base() {
        return Err(GoodsteinError::BadBound { z, base: rep.base() });
    }
    if rep.is_zero() {
        return Err(GoodsteinError::ZeroTerm);
    }
    let branch = if rep.form().terms.last().expect("nonzero").0.is_zero() {
        StepBranch::ConstantDigit
    } else {
        StepBranch::BorrowCascade
    };
    let next = goodstein_step(rep)?;

    let residual = cancel_terms(rep.form(), next.form());
    debug_assert!(!residual.is_empty(), "the step always changes the value");

    // Coefficient magnitudes stay below z, so the sign of the most
    // significant residual term is the sign of the whole difference.
    let positive = residual.first().map(|(_, c)| *c > 0).unwrap_or(false);
    debug_assert!(positive, "z > base makes d' positive (Eq. 9/10)");

    let value = materialize_residual(&residual, z);
    Ok(ZDiff {
        branch,
        value: match value {
            Some(v) => ZDiffValue::Exact(v),
            None => {
                debug_assert_eq!(
                    rep.cmp_value(&next),
                    std::cmp::Ordering::Greater,
                    "structural positivity check"
                );
                ZDiffValue::PositiveHuge
            }
        },
    })
}

/// Merges two forms sorted by decreasing exponent into the signed term list
/// of `a - b`, dropping exact cancellations.
fn cancel_terms(a: &HForm, b: &HForm) -> Vec<(HForm, i128)> {
    let mut out: Vec<(HForm, i128)> = Vec::new();
    let mut ia = a.terms.iter().peekable();
    let mut ib = b.terms.iter().peekable();
    loop {
        match (ia.peek(), ib.peek()) {
            (None, None) => break,
            (Some((ea, ca)), None) => {
                out.push(((*ea).clone(), *ca as i128));
                ia.next();
            }
            (None, Some((eb, cb))) => {
                out.push(((*eb).clone(), -(*cb as i128)));
                ib.next();
            }
            (Some((ea, ca)), Some((eb, cb))) => match ea.cmp_value(eb) {
                std::cmp::Ordering::Greater => {
                    out.push(((*ea).clone(), *ca as i128));
                    ia.next();
                }
                std::cmp::Ordering::Less => {
                    out.push(((*eb).clone(), -(*cb as i128)));
                    ib.next();
                }
                std::cmp::Ordering::Equal => {
                    let d = *ca as i128 - *cb as i128;
                    if d != 0 {
                        out.push(((*ea).clone(), d));
                    }
                    ia.next();
                    ib.next();
                }
            },
        }
    }
    out
}

fn materialize_residual(residual: &[(HForm, i128)], z: u64) -> Option<BigInt> {
    // Refuse when any exponent is out of u64 range or the leading term
    // alone exceeds the bit limit.
    let mut acc = BigInt::zero();
    let big_z = BigUint::from(z);
    for (exp, coeff) in residual {
        let e = exp.value_u64(z)?;
        let bits = (e + 1).checked_mul(64 - z.leading_zeros() as u64)?;
        if bits > DEFAULT_VALUE_BIT_LIMIT {
            return None;
        }
        let power = BigInt::from(Pow::pow(&big_z, e));
        acc += BigInt::from(*coeff) * power;
    }
    Some(acc)
}
