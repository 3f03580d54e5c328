//! A self-contained rigorous enclosure of pi.
//!
//! Machin's identity pi = 16 arctan(1/5) - 4 arctan(1/239), with each
//! arctangent accumulated in fixed point (units of 2^-P) and every term
//! rounded in the safe direction. The alternating-series remainder is
//! bounded by the first omitted term, so the result provably contains pi
//! with no reliance on external constant tables.

use std::collections::BTreeMap;
use std::sync::RwLock;

use num::bigint::BigInt;
use num::integer::Integer;
use num::traits::{Signed, Zero};
use once_cell::sync::Lazy;

use crate::dyadic::Dyadic;
use crate::interval::Interval;

static CACHE: Lazy<RwLock<BTreeMap<u32, Interval>>> = Lazy::new(|| RwLock::new(BTreeMap::new()));

/// arctan(1/q) in units of 2^-p: returns (lo, hi) integer numerators.
fn atan_inv_fixed(q: u64, p: u32) -> (BigInt, BigInt) {
    let unit = BigInt::from(1) << p as usize;
    let q2 = BigInt::from(q) * BigInt::from(q);
    let mut denom_pow = BigInt::from(q); // q^{2k+1}
    let mut lo = BigInt::zero();
    let mut hi = BigInt::zero();
    let mut k: u64 = 0;
    loop {
        let term_den = &denom_pow * BigInt::from(2 * k + 1);
        let (t, r) = unit.div_mod_floor(&term_den);
        let t_up = if r.is_zero() { t.clone() } else { &t + 1 };
        if t.is_zero() {
            // Remainder of the alternating series is at most this first
            // omitted term, itself below one unit.
            lo -= 1;
            hi += 1;
            break;
        }
        if k % 2 == 0 {
            lo += &t;
            hi += &t_up;
        } else {
            lo -= &t_up;
            hi -= &t;
        }
        denom_pow *= &q2;
        k += 1;
    }
    (lo, hi)
}

fn compute_pi(prec: u32) -> Interval {
    let p = prec + 16;
    let (a_lo, a_hi) = atan_inv_fixed(5, p);
    let (b_lo, b_hi) = atan_inv_fixed(239, p);
    // pi = 16a - 4b, endpoints chosen outward.
    let lo = BigInt::from(16) * a_lo - BigInt::from(4) * b_hi;
    let hi = BigInt::from(16) * a_hi - BigInt::from(4) * b_lo;
    let e = -(p as i64);
    Interval::new(Dyadic::new(lo, e), Dyadic::new(hi, e), prec).with_precision(prec)
}

/// Interval certainly containing pi, of width at most 2^(4 - prec).
pub fn pi_enclosure(prec: u32) -> Interval {
    assert!(prec >= 8, "pi enclosure needs at least 8 bits");
    if let Some(v) = CACHE.read().expect("pi cache poisoned").get(&prec) {
        return v.clone();
    }
    let v = compute_pi(prec);
    CACHE
        .write()
        .expect("pi cache poisoned")
        .entry(prec)
        .or_insert_with(|| v.clone());
    v
}

/// Enclosure of pi/2.
pub fn half_pi(prec: u32) -> Interval {
    let pi = pi_enclosure(prec);
    Interval::new(pi.lo().mul_pow2(-1), pi.hi().mul_pow2(-1), prec)
}

/// A dyadic value certainly >= pi/2; the right end of the bisection domain.
pub fn half_pi_upper(prec: u32) -> Dyadic {
    half_pi(prec).hi().clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::IntervalCmp;
    use crate::rational::rat;

    #[test]
    fn contains_known_digits_at_16_bits() {
        let pi = pi_enclosure(16);
        assert!(pi.lo().to_rational() < rat(314159266, 100000000));
        assert!(pi.hi().to_rational() > rat(314159265, 100000000));
        assert!(pi.width().to_rational() <= rat(1, 1 << 12));
    }

    #[test]
    fn width_bound_across_precisions() {
        for prec in [8u32, 16, 32, 64, 128, 256, 512] {
            let pi = pi_enclosure(prec);
            let width = pi.width().to_rational();
            let limit = crate::rational::Rational::new(
                16.into(),
                num::bigint::BigInt::from(1) << prec as usize,
            );
            assert!(width <= limit, "width too large at {prec} bits");
        }
    }

    #[test]
    fn pi_squared_below_ten() {
        let pi = pi_enclosure(32);
        let sq = pi.int_pow(2);
        assert_eq!(sq.compare(&Interval::from_i64(10, 32)), IntervalCmp::CertainlyLess);
    }

    #[test]
    fn eight_quarter_pi_squared_below_twenty() {
        let hp = half_pi(32);
        let v = hp.int_pow(2) * Interval::from_i64(8, 32);
        assert_eq!(v.compare(&Interval::from_i64(20, 32)), IntervalCmp::CertainlyLess);
    }

    #[test]
    fn refinement_is_contained() {
        let coarse = pi_enclosure(32);
        let fine = pi_enclosure(256);
        assert!(coarse.contains(&fine));
    }
}
