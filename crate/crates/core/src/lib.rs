//! A workbench for first-order Peano Arithmetic and the constructions around it.
//!
//! The crate is organized around six subsystems:
//!
//! * [`syntax`] — terms, formulas, parsing, printing, free variables and
//!   capture-avoiding substitution for the PA language over `{0, ', +, *, =}`
//!   with connectives `{~, ->, forall}` (`exists` is an abbreviation).
//! * [`proof`] — a Hilbert-style proof checker with explicit axiom
//!   instantiation records, hypothesis-aware derivations, the deduction
//!   transformation, and a finite omega-inconsistency evidence scan.
//! * [`godel`] — prime-power Goedel numbering of formulas and proof
//!   sequences, the decidable proof-pair relation, and the beta-function
//!   sequence encoding.
//! * [`interp`] — evaluation of PA formulas over the naturals: exact
//!   quantifier-free evaluation, bounded Tarskian evaluation, algorithmic
//!   three-valued verdicts, and provability-backed verdicts relative to a
//!   checked corpus.
//! * [`goodstein`] — hereditary base representations, Goodstein steps and
//!   traces, base-substituted differences, and the ordinal mirror in Cantor
//!   normal form with descent checking.
//! * [`tm`] — deterministic Turing machines with a looping oracle that
//!   detects repeated instantaneous descriptions.

pub mod godel;
pub mod goodstein;
pub mod interp;
pub mod proof;
pub mod syntax;
pub mod tm;
