//! Bernoulli numbers, computed exactly from the defining recurrence of the
//! generating function t/(e^t - 1) and memoized in a shared table.
//!
//! The table stores signed values B_0, B_1, ... (with B_1 = -1/2); the
//! public accessor [`bernoulli_abs_even`] returns |B_{2k}|, which is the
//! only form the coefficient laws consume. Readers never observe a
//! partially written entry: the table is extended under a write lock by
//! computing every missing entry in one pass.

use std::sync::RwLock;

use num::traits::{Signed, Zero};
use once_cell::sync::Lazy;

use crate::interval::Interval;
use crate::rational::{binomial, factorial, pow2, rat, rat_int, Rational};

static TABLE: Lazy<RwLock<Vec<Rational>>> = Lazy::new(|| RwLock::new(vec![rat_int(1)]));

fn extend_to(m: usize) {
    let mut table = TABLE.write().expect("bernoulli table poisoned");
    // Recurrence: sum_{j=0}^{m-1} C(m, j) B_j = 0 for m >= 2, i.e.
    // B_{m-1} = -(1/C(m, m-1)) * sum_{j=0}^{m-2} C(m, j) B_j, with B_0 = 1.
    while table.len() <= m {
        let idx = table.len(); // computing B_idx from rows 0..idx
        let m_rec = (idx + 1) as u64;
        let mut acc = Rational::zero();
        for (j, b) in table.iter().enumerate() {
            acc += Rational::from_integer(binomial(m_rec, j as u64)) * b;
        }
        let coef = Rational::from_integer(binomial(m_rec, m_rec - 1));
        table.push(-acc / coef);
    }
}

/// Signed Bernoulli number B_m (B_1 = -1/2, odd-index values beyond B_1
/// are zero). Exposed for the recurrence self-test.
pub fn bernoulli_signed(m: usize) -> Rational {
    {
        let table = TABLE.read().expect("bernoulli table poisoned");
        if let Some(b) = table.get(m) {
            return b.clone();
        }
    }
    extend_to(m);
    TABLE.read().expect("bernoulli table poisoned")[m].clone()
}

/// |B_{2k}| for k >= 1.
pub fn bernoulli_abs_even(k: usize) -> Rational {
    assert!(k >= 1, "bernoulli_abs_even requires k >= 1");
    bernoulli_signed(2 * k).abs()
}

/// Certifies the two-sided bound
/// 2/((2 pi)^{2k} (1 - 2^{-2k})) < |B_{2k}|/(2k)! < 2/((2 pi)^{2k} (1 - 2^{1-2k}))
/// with strict interval comparisons. Returns false only when the given pi
/// enclosure is too wide to certify; it never asserts the negation.
pub fn bernoulli_bound_check(k: usize, pi: &Interval) -> bool {
    assert!(k >= 1);
    let prec = pi.precision();
    let value = Interval::from_rational(
        &(bernoulli_abs_even(k) / Rational::from_integer(factorial(2 * k as u64))),
        prec,
    );
    let two_pi_pow = match (pi.clone() * Interval::from_i64(2, prec)).int_pow(2 * k as u32) {
        p => p,
    };
    // 1 - 2^{-2k} and 1 - 2^{1-2k} are exact rationals.
    let lo_factor = rat_int(1) - Rational::new(1.into(), pow2(2 * k as u64));
    let hi_factor = rat_int(1) - Rational::new(2.into(), pow2(2 * k as u64));
    let two = Interval::from_i64(2, prec);
    let lower = match two.clone().div(&(two_pi_pow.clone() * Interval::from_rational(&lo_factor, prec))) {
        Ok(v) => v,
        Err(_) => return false,
    };
    let upper = match two.div(&(two_pi_pow * Interval::from_rational(&hi_factor, prec))) {
        Ok(v) => v,
        Err(_) => return false,
    };
    lower.certainly_less_than(&value) && value.certainly_less_than(&upper)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pi::pi_enclosure;
    use num::traits::One;

    #[test]
    fn small_even_values() {
        assert_eq!(bernoulli_abs_even(1), rat(1, 6));
        assert_eq!(bernoulli_abs_even(2), rat(1, 30));
        assert_eq!(bernoulli_abs_even(3), rat(1, 42));
        assert_eq!(bernoulli_abs_even(4), rat(1, 30));
        assert_eq!(bernoulli_abs_even(5), rat(5, 66));
        assert_eq!(bernoulli_abs_even(6), rat(691, 2730));
        assert_eq!(bernoulli_abs_even(7), rat(7, 6));
    }

    #[test]
    fn signed_odd_values_vanish() {
        assert_eq!(bernoulli_signed(1), rat(-1, 2));
        for m in (3..=41).step_by(2) {
            assert!(bernoulli_signed(m).is_zero(), "B_{m} should vanish");
        }
    }

    #[test]
    fn recurrence_closure() {
        // sum_{j=0}^{m-1} C(m,j) B_j = 0 for 2 <= m <= 120.
        bernoulli_signed(120);
        for m in 2..=120u64 {
            let mut acc = Rational::zero();
            for j in 0..m {
                acc += Rational::from_integer(binomial(m, j)) * bernoulli_signed(j as usize);
            }
            assert!(acc.is_zero(), "recurrence fails at m = {m}");
        }
    }

    #[test]
    fn bound_check_small_and_large() {
        let pi64 = pi_enclosure(64);
        assert!(bernoulli_bound_check(1, &pi64));
        let pi128 = pi_enclosure(128);
        assert!(bernoulli_bound_check(10, &pi128));
    }

    #[test]
    fn bound_check_k1_value_is_one_twelfth() {
        // |B_2|/2! = 1/12 sits strictly inside the bracket.
        let v = bernoulli_abs_even(1) / Rational::from_integer(factorial(2));
        assert_eq!(v, rat(1, 12));
        assert!(Rational::one() / v == rat_int(12));
    }

    #[test]
    fn bound_check_all_k_up_to_60_at_256_bits() {
        let pi = pi_enclosure(256);
        for k in 1..=60 {
            assert!(bernoulli_bound_check(k, &pi), "bound fails at k = {k}");
        }
    }

    #[test]
    fn bound_check_insufficient_precision_is_not_a_wrong_true() {
        // A deliberately crude enclosure may fail to certify; that is the
        // contract (false = not certified, never a wrong true).
        let crude = Interval::from_rationals(&rat(3, 1), &rat(7, 2), 8);
        let _ = bernoulli_bound_check(1, &crude);
    }
}
