//! The beta-function and its sequence encoding.
//!
//! `beta(b, c, i) = rm(1 + (i+1)*c, b)`: the remainder of `b` on division by
//! `1 + (i+1)*c`. Any finite sequence of naturals is captured by one pair
//! `(b, c)`: take `c = j!` with `j = max(n, values...)` (n the last index);
//! the moduli `1 + (i+1)*c` are then pairwise coprime and the Chinese
//! remainder theorem produces `b` directly.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::syntax::{Formula, Term};

/// The pair `(b, c)` encoding a sequence through the beta-function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaPair {
    pub b: BigUint,
    pub c: BigUint,
}

/// `rm(1 + (i+1)*c, b)`.
pub fn beta_eval(b: &BigUint, c: &BigUint, i: u64) -> BigUint {
    let modulus = BigUint::one() + (BigUint::from(i) + BigUint::one()) * c;
    b % modulus
}

/// Encodes a nonempty sequence: returns `(b, c)` with
/// `beta_eval(b, c, i) == seq[i]` for every position.
///
/// `c = j!` grows fast; this is inherent in the construction, so callers
/// should keep values at desk scale.
pub fn encode_sequence(seq: &[u64]) -> BetaPair {
    assert!(!seq.is_empty(), "cannot encode an empty sequence");
    let n = (seq.len() - 1) as u64;
    let j = seq.iter().copied().max().unwrap().max(n);
    let c = factorial(j);

    let moduli: Vec<BigUint> = (0..seq.len() as u64)
        .map(|i| BigUint::one() + (BigUint::from(i) + BigUint::one()) * &c)
        .collect();
    let b = crt_combine(seq, &moduli);
    BetaPair { b, c }
}

fn factorial(j: u64) -> BigUint {
    let mut c = BigUint::one();
    for k in 2..=j {
        c *= BigUint::from(k);
    }
    c
}

/// Standard CRT combination; the moduli are pairwise coprime by the `c = j!`
/// choice, which the tests verify directly.
fn crt_combine(remainders: &[u64], moduli: &[BigUint]) -> BigUint {
    let product: BigUint = moduli.iter().product();
    let mut acc = BigUint::zero();
    for (r, m) in remainders.iter().zip(moduli) {
        let partial = &product / m;
        let inv = mod_inverse(&partial, m).expect("moduli are pairwise coprime");
        acc += BigUint::from(*r) * partial * inv;
    }
    acc % product
}

fn mod_inverse(a: &BigUint, modulus: &BigUint) -> Option<BigUint> {
    let a = BigInt::from(a.clone());
    let m = BigInt::from(modulus.clone());
    let e = a.extended_gcd(&m);
    if !e.gcd.is_one() {
        return None;
    }
    let inv = e.x.mod_floor(&m);
    inv.to_biguint()
}

/// The PA representation of `beta`:
/// `Bt(t1, t2, t3, t4) = (exists w)(t1 = ((1 + (t3+1)*t2)*w + t4) & (t4 < 1 + (t3+1)*t2))`
/// with `&` and `<` expanded into the primitive connectives
/// (`a < b` becomes `exists z. (a + z') = b`). The two bound variables are
/// chosen fresh for the four argument terms.
pub fn bt_formula(t1: &Term, t2: &Term, t3: &Term, t4: &Term) -> Formula {
    let mut fresh = 1;
    for t in [t1, t2, t3, t4] {
        for v in t.vars() {
            fresh = fresh.max(v + 1);
        }
    }
    let w = fresh;
    let z = fresh + 1;
    let one = || Term::numeral(1);
    // 1 + (t3 + 1) * t2
    let modulus = one().add(t3.clone().add(one()).mul(t2.clone()));
    // t1 = (modulus * w + t4)
    let div = Formula::Eq(
        t1.clone(),
        modulus.clone().mul(Term::Var(w)).add(t4.clone()),
    );
    // t4 < modulus  ==>  exists z. (t4 + z') = modulus
    let lt = Formula::exists(z, Formula::Eq(t4.clone().add(Term::Var(z).succ()), modulus));
    Formula::exists(w, div.and(lt))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;

    #[test]
    fn beta_of_zero_dividend_is_zero() {
        for c in [1u32, 2, 7, 100] {
            for i in [0u64, 1, 5, 40] {
                assert_eq!(
                    beta_eval(&BigUint::zero(), &BigUint::from(c), i),
                    BigUint::zero()
                );
            }
        }
    }

    #[test]
    fn beta_stays_below_its_modulus() {
        let b = BigUint::from(987654321u64);
        for c in [1u64, 3, 10, 77] {
            for i in 0..20 {
                let modulus = BigUint::one() + BigUint::from(i + 1) * BigUint::from(c);
                assert!(beta_eval(&b, &BigUint::from(c), i) < modulus);
            }
        }
    }

    #[test]
    fn encodes_a_singleton() {
        let pair = encode_sequence(&[5]);
        assert_eq!(beta_eval(&pair.b, &pair.c, 0), BigUint::from(5u32));
    }

    #[test]
    fn encodes_three_one_four() {
        let pair = encode_sequence(&[3, 1, 4]);
        for (i, v) in [3u64, 1, 4].into_iter().enumerate() {
            assert_eq!(beta_eval(&pair.b, &pair.c, i as u64), BigUint::from(v));
        }
    }

    #[test]
    fn zero_sequence_works() {
        let pair = encode_sequence(&[0]);
        assert!(pair.c >= BigUint::one());
        assert_eq!(beta_eval(&pair.b, &pair.c, 0), BigUint::zero());
    }

    #[test]
    fn moduli_are_pairwise_coprime() {
        let seq = [17u64, 3, 20, 0, 9];
        let n = (seq.len() - 1) as u64;
        let j = seq.iter().copied().max().unwrap().max(n);
        let c = super::factorial(j);
        let moduli: Vec<BigUint> = (0..seq.len() as u64)
            .map(|i| BigUint::one() + (BigUint::from(i) + BigUint::one()) * &c)
            .collect();
        for i in 0..moduli.len() {
            for k in i + 1..moduli.len() {
                assert!(moduli[i].gcd(&moduli[k]).is_one(), "{i} vs {k}");
            }
        }
    }

    #[test]
    fn bt_formula_tree() {
        // All-numeral arguments: the bound variables come out as x1 (w) and
        // x2 (z).
        let n = Term::numeral;
        let f = bt_formula(&n(9), &n(1), &n(0), &n(1));

        let modulus = n(1).add(n(0).add(n(1)).mul(n(1)));
        let div = Formula::Eq(n(9), modulus.clone().mul(Term::Var(1)).add(n(1)));
        let lt = Formula::exists(2, Formula::Eq(n(1).add(Term::Var(2).succ()), modulus));
        let expected = Formula::exists(1, div.and(lt));
        assert_eq!(f, expected);
        assert!(f.is_closed());
    }

    #[test]
    fn bt_formula_picks_fresh_binders() {
        let f = bt_formula(
            &Term::Var(3),
            &Term::Var(5),
            &Term::Var(1),
            &Term::Var(2),
        );
        // max argument variable is x5, so the binders are x6 and x7.
        let free = f.free_vars();
        assert_eq!(free.into_iter().collect::<Vec<_>>(), vec![1, 2, 3, 5]);
        let printed = f.to_string();
        assert!(printed.contains("x6") && printed.contains("x7"));
    }
}
