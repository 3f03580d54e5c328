//! Exact arbitrary-precision rational arithmetic plus the small
//! combinatorial helpers (factorials, binomials, powers of two) used by
//! every coefficient law in the crate.
//!
//! `Rational` is always stored in lowest terms with a positive denominator;
//! all arithmetic is exact.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

pub type Rational = BigRational;

/// Shorthand constructor for small rationals.
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact factorial.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Exact binomial coefficient, multiplicative form (n over k), 0 <= k <= n.
pub fn binomial(n: u64, k: u64) -> BigInt {
    assert!(k <= n, "binomial requires 0 <= k <= n");
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// 2^e as a BigInt.
pub fn pow2(e: u64) -> BigInt {
    BigInt::one() << usize::try_from(e).expect("exponent fits usize")
}

/// b^e as a BigInt for a small integer base.
pub fn int_pow(base: i64, e: u32) -> BigInt {
    BigInt::from(base).pow(e)
}

/// Truncated decimal rendering of an exact rational, used only for
/// human-readable reports (never for certification).
pub fn decimal_string(r: &Rational, digits: usize) -> String {
    let neg = r.is_negative();
    let a = r.abs();
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = (a.numer() * &scale) / a.denom();
    let int_part = &scaled / &scale;
    let frac_part = &scaled % &scale;
    let frac = format!("{:0>width$}", frac_part.to_string(), width = digits);
    format!("{}{}.{}", if neg { "-" } else { "" }, int_part, frac)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_small_values() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(1), BigInt::one());
        assert_eq!(factorial(6), BigInt::from(720));
        assert_eq!(factorial(12), BigInt::from(479001600u64));
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(7, 3), BigInt::from(35));
        assert_eq!(binomial(10, 0), BigInt::one());
        assert_eq!(binomial(10, 10), BigInt::one());
        // Pascal recurrence cross-check on a grid.
        for n in 2..=20u64 {
            for k in 1..n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    #[test]
    fn rational_is_normalized() {
        let r = rat(6, -4);
        assert_eq!(r, rat(-3, 2));
        assert!(r.denom() > &BigInt::zero());
        let product = rat(22, 7) * rat(7, 22);
        assert!(product.is_one());
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal_string(&rat(1, 8), 4), "0.1250");
        assert_eq!(decimal_string(&rat(-1, 3), 5), "-0.33333");
        assert_eq!(decimal_string(&rat(16, 14175), 6), "0.001128");
    }
}
