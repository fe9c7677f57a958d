//! Ordinals below epsilon-0 in Cantor normal form.
//!
//! `CnfOrdinal` is a decreasing sum of terms `w^exponent * coefficient` with
//! exponents themselves in Cantor normal form. Comparison is the total
//! lexicographic order; nothing else (no ordinal arithmetic) is needed for
//! descent checking, so nothing else is provided.

use std::cmp::Ordering;
use std::fmt;

use super::{HForm, HereditaryRep};

/// An ordinal below epsilon-0. The empty sum is 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CnfOrdinal {
    /// `(exponent, coefficient)` with exponents strictly decreasing and
    /// coefficients >= 1.
    terms: Vec<(CnfOrdinal, u64)>,
}

impl CnfOrdinal {
    pub fn zero() -> CnfOrdinal {
        CnfOrdinal::default()
    }

    pub fn finite(n: u64) -> CnfOrdinal {
        if n == 0 {
            CnfOrdinal::zero()
        } else {
            CnfOrdinal {
                terms: vec![(CnfOrdinal::zero(), n)],
            }
        }
    }

    pub fn omega() -> CnfOrdinal {
        CnfOrdinal {
            terms: vec![(CnfOrdinal::finite(1), 1)],
        }
    }

    /// Builds `w^e1*c1 + ... + w^ek*ck`; the exponents must strictly
    /// decrease and the coefficients be nonzero.
    pub fn from_terms(terms: Vec<(CnfOrdinal, u64)>) -> CnfOrdinal {
        debug_assert!(terms.windows(2).all(|p| p[0].0 > p[1].0));
        debug_assert!(terms.iter().all(|(_, c)| *c >= 1));
        CnfOrdinal { terms }
    }

    pub fn terms(&self) -> &[(CnfOrdinal, u64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The ordinal mirror of a hereditary representation: the base is
    /// replaced by omega, structurally. Order among mirrors matches order
    /// among represented values, so canonical representations map to valid
    /// normal forms.
    pub fn mirror(rep: &HereditaryRep) -> CnfOrdinal {
        fn go(form: &HForm) -> CnfOrdinal {
            CnfOrdinal {
                terms: form.terms.iter().map(|(e, c)| (go(e), *c)).collect(),
            }
        }
        go(rep.form())
    }
}

impl Ord for CnfOrdinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for ((ea, ca), (eb, cb)) in self.terms.iter().zip(&other.terms) {
            match ea.cmp(eb) {
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
}

impl PartialOrd for CnfOrdinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CnfOrdinal {
    /// Canonical text: `0`, `3`, `w`, `w*2`, `w^2*2+w*2+2`, `w^w`,
    /// `w^(w+1)`. Exponents that are not a bare number or a plain tower get
    /// parentheses.
    fn fmt(&self, w: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(w, "0");
        }
        for (i, (exp, coeff)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(w, "+")?;
            }
            if exp.is_zero() {
                write!(w, "{coeff}")?;
                continue;
            }
            let rendered = exp.to_string();
            let finite_one = rendered == "1";
            if finite_one {
                write!(w, "w")?;
            } else if rendered.contains('+') || rendered.contains('*') {
                write!(w, "w^({rendered})")?;
            } else {
                write!(w, "w^{rendered}")?;
            }
            if *coeff != 1 {
                write!(w, "*{coeff}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::goodstein::hbr_u64;

    fn mirror_of(m: u64, base: u64) -> CnfOrdinal {
        CnfOrdinal::mirror(&hbr_u64(m, base).unwrap())
    }

    #[test]
    fn mirrors_of_small_starts() {
        // 4 = 2^(2^(2^0)) mirrors to w^w.
        let four = mirror_of(4, 2);
        let omega_omega = CnfOrdinal::from_terms(vec![(CnfOrdinal::omega(), 1)]);
        assert_eq!(four, omega_omega);
        assert_eq!(four.to_string(), "w^w");

        // 3 = 2 + 1 mirrors to w + 1.
        let three = mirror_of(3, 2);
        let omega_plus_one =
            CnfOrdinal::from_terms(vec![(CnfOrdinal::finite(1), 1), (CnfOrdinal::zero(), 1)]);
        assert_eq!(three, omega_plus_one);
        assert_eq!(three.to_string(), "w+1");

        assert_eq!(mirror_of(0, 2), CnfOrdinal::zero());
        assert_eq!(mirror_of(0, 2).to_string(), "0");
    }

    #[test]
    fn omega_dominates_every_finite() {
        assert!(CnfOrdinal::omega() > CnfOrdinal::finite(1_000_000));
    }

    #[test]
    fn omega_to_the_omega_dominates_omega_multiples() {
        // w^w vs w*5 + 3
        let tower = CnfOrdinal::from_terms(vec![(CnfOrdinal::omega(), 1)]);
        let small = CnfOrdinal::from_terms(vec![
            (CnfOrdinal::finite(1), 5),
            (CnfOrdinal::zero(), 3),
        ]);
        assert!(tower > small);
    }

    #[test]
    fn comparison_looks_at_coefficients_after_exponents() {
        let w2 = CnfOrdinal::from_terms(vec![(CnfOrdinal::finite(1), 2)]);
        let w3 = CnfOrdinal::from_terms(vec![(CnfOrdinal::finite(1), 3)]);
        assert!(w3 > w2);
        let w2_plus_1 =
            CnfOrdinal::from_terms(vec![(CnfOrdinal::finite(1), 2), (CnfOrdinal::zero(), 1)]);
        assert!(w2_plus_1 > w2);
        assert!(w3 > w2_plus_1);
    }

    #[test]
    fn mirror_preserves_value_order() {
        let base = 3;
        for a in 0..300u64 {
            let ra = hbr_u64(a, base).unwrap();
            let rb = hbr_u64(a + 1, base).unwrap();
            assert!(
                CnfOrdinal::mirror(&rb) > CnfOrdinal::mirror(&ra),
                "mirror order broken at {a}"
            );
        }
    }

    #[test]
    fn display_matches_the_documented_shapes() {
        // w^2*2+w*2+2 is the mirror of 2*3^2 + 2*3 + 2 = 26 in base 3.
        assert_eq!(mirror_of(26, 3).to_string(), "w^2*2+w*2+2");
        assert_eq!(mirror_of(5, 2).to_string(), "w^w+1");
        // 2^5 = 2^(2^2 + 1): exponent w^w... at base 2: 5 = 2^2+1, so the
        // exponent mirror is w^w+1 and needs parentheses.
        assert_eq!(mirror_of(32, 2).to_string(), "w^(w^w+1)");
        assert_eq!(CnfOrdinal::finite(7).to_string(), "7");
        assert_eq!(CnfOrdinal::omega().to_string(), "w");
    }
}
