//! The decidable proof-pair relation on Goedel codes.
//!
//! `proof_pair(x, y)` holds when `x` codes a sequence of formulas that forms
//! a proof whose last formula has code `y`. The sequence carries no
//! justifications, so each line is re-justified by bounded search: is it an
//! axiom instance (decided by the structural recognizers), or modus ponens or
//! generalisation over strictly earlier lines? Every alternative is finitely
//! checkable, which is what makes the relation decidable.
//!
//! This is deliberately a second, independent route next to the record-based
//! kernel in [`crate::proof`]: the kernel verifies supplied records and never
//! searches, the pair relation searches and never sees records.

use num_bigint::BigUint;

use super::{decode_formula, GodelCode, SequenceCode};
use crate::proof::{is_logical_axiom_instance, is_pa_axiom_instance};
use crate::syntax::Formula;

/// Does `x` code a proof of the formula coded by `y`?
pub fn proof_pair(x: &SequenceCode, y: &GodelCode) -> bool {
    let Some(lines) = decode_lines(x) else {
        return false;
    };
    if super::encode_formula(lines.last().expect("nonempty")).0 != y.0 {
        return false;
    }
    lines
        .iter()
        .enumerate()
        .all(|(i, f)| line_justifiable(f, &lines[..i]))
}

/// Value-level variant: factors `x` first. Malformed codes yield `false`.
pub fn proof_pair_values(x: &BigUint, y: &BigUint) -> bool {
    let Ok(seq) = SequenceCode::try_from_value(x) else {
        return false;
    };
    proof_pair(&seq, &GodelCode(y.clone()))
}

fn decode_lines(x: &SequenceCode) -> Option<Vec<Formula>> {
    x.exponents()
        .iter()
        .map(|c| decode_formula(&GodelCode(c.clone())).ok())
        .collect()
}

fn line_justifiable(f: &Formula, earlier: &[Formula]) -> bool {
    if is_logical_axiom_instance(f) || is_pa_axiom_instance(f) {
        return true;
    }
    // Modus ponens: some earlier pair (A, A -> f).
    for a in earlier {
        let implication = a.clone().implies(f.clone());
        if earlier.contains(&implication) {
            return true;
        }
    }
    // Generalisation: f is (forall v. g) with g an earlier line.
    if let Formula::ForAll(_, body) = f {
        if earlier.iter().any(|g| g == body.as_ref()) {
            return true;
        }
    }
    false
}
