//! Dyadic rationals (mantissa * 2^exponent) with directed rounding.
//!
//! These are the interval endpoints: exact addition/multiplication between
//! roundings, and floor/ceil rounding to a target number of mantissa bits.
//! Exactness for the proofs lives in `Rational`/`PiLaurent`; the dyadics
//! only ever need to be outward-correct.

use std::cmp::Ordering;

use num::bigint::BigInt;
use num::integer::Integer;
use num::traits::{One, Signed, Zero};

use crate::rational::Rational;

/// Rounding direction. `Down` never exceeds the exact value, `Up` is never
/// below it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Round {
    Down,
    Up,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dyadic {
    mantissa: BigInt,
    exponent: i64,
}

impl Dyadic {
    pub fn new(mantissa: BigInt, exponent: i64) -> Self {
        Dyadic { mantissa, exponent }.normalized()
    }

    pub fn zero() -> Self {
        Dyadic { mantissa: BigInt::zero(), exponent: 0 }
    }

    pub fn one() -> Self {
        Dyadic { mantissa: BigInt::one(), exponent: 0 }
    }

    pub fn from_i64(v: i64) -> Self {
        Dyadic::new(BigInt::from(v), 0)
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.mantissa.is_positive()
    }

    /// Strips trailing zero bits so mantissas stay as small as possible.
    fn normalized(mut self) -> Self {
        if self.mantissa.is_zero() {
            self.exponent = 0;
            return self;
        }
        let tz = self.mantissa.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.mantissa >>= tz as usize;
            self.exponent += tz as i64;
        }
        self
    }

    pub fn mantissa_bits(&self) -> u64 {
        self.mantissa.bits()
    }

    pub fn neg(&self) -> Self {
        Dyadic { mantissa: -self.mantissa.clone(), exponent: self.exponent }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let e = self.exponent.min(other.exponent);
        let a = &self.mantissa << usize::try_from(self.exponent - e).expect("shift fits");
        let b = &other.mantissa << usize::try_from(other.exponent - e).expect("shift fits");
        Dyadic::new(a + b, e)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Dyadic::new(&self.mantissa * &other.mantissa, self.exponent + other.exponent)
    }

    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Dyadic { mantissa: self.mantissa.clone(), exponent: self.exponent + k }
    }

    /// Rounds to at most `prec` mantissa bits in the given direction.
    pub fn round(&self, prec: u32, dir: Round) -> Self {
        let bits = self.mantissa.bits();
        if bits <= prec as u64 {
            return self.clone();
        }
        let shift = (bits - prec as u64) as usize;
        let divisor = BigInt::one() << shift;
        let (q, r) = self.mantissa.div_mod_floor(&divisor);
        let q = match dir {
            Round::Down => q,
            Round::Up => {
                if r.is_zero() {
                    q
                } else {
                    q + BigInt::one()
                }
            }
        };
        Dyadic::new(q, self.exponent + shift as i64)
    }

    /// Directed division to roughly `prec` significant bits.
    pub fn div(&self, other: &Self, prec: u32, dir: Round) -> Self {
        assert!(!other.is_zero(), "dyadic division by zero");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let mut num = self.mantissa.clone();
        let mut den = other.mantissa.clone();
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        let nb = num.bits() as i64;
        let db = den.bits() as i64;
        let shift = (prec as i64 + 2 + db - nb).max(0) as usize;
        let (q, r) = (num << shift).div_mod_floor(&den);
        let q = match dir {
            Round::Down => q,
            Round::Up => {
                if r.is_zero() {
                    q
                } else {
                    q + BigInt::one()
                }
            }
        };
        Dyadic::new(q, self.exponent - other.exponent - shift as i64)
    }

    pub fn from_rational(r: &Rational, prec: u32, dir: Round) -> Self {
        let num = Dyadic::new(r.numer().clone(), 0);
        let den = Dyadic::new(r.denom().clone(), 0);
        if r.denom().is_one() {
            return num;
        }
        num.div(&den, prec, dir)
    }

    pub fn to_rational(&self) -> Rational {
        if self.exponent >= 0 {
            Rational::from_integer(&self.mantissa << usize::try_from(self.exponent).expect("shift"))
        } else {
            Rational::new(
                self.mantissa.clone(),
                BigInt::one() << usize::try_from(-self.exponent).expect("shift"),
            )
        }
    }

    pub fn abs(&self) -> Self {
        Dyadic { mantissa: self.mantissa.abs(), exponent: self.exponent }
    }

    /// Dyadic midpoint (exact).
    pub fn midpoint(&self, other: &Self) -> Self {
        self.add(other).mul_pow2(-1)
    }

    /// floor(self * 10^digits) as a big integer; used for certified decimal
    /// printing.
    pub fn scaled_floor_pow10(&self, digits: u32) -> BigInt {
        let scale = BigInt::from(10u32).pow(digits);
        let m = &self.mantissa * scale;
        if self.exponent >= 0 {
            m << usize::try_from(self.exponent).expect("shift")
        } else {
            m.div_floor(&(BigInt::one() << usize::try_from(-self.exponent).expect("shift")))
        }
    }

    /// Approximate f64 value, for diagnostics only.
    pub fn to_f64(&self) -> f64 {
        let r = self.to_rational();
        let n = r.numer();
        let d = r.denom();
        // Scale down to keep within f64 range.
        let nb = n.bits() as i64;
        let db = d.bits() as i64;
        let shift = (nb.max(db) - 500).max(0) as usize;
        let nf = (n >> shift).to_string().parse::<f64>().unwrap_or(f64::NAN);
        let df = (d >> shift).to_string().parse::<f64>().unwrap_or(f64::NAN);
        nf / df
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.sub(other);
        if diff.mantissa.is_zero() {
            Ordering::Equal
        } else if diff.mantissa.is_negative() {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn normalization_strips_trailing_zeros() {
        let d = Dyadic::new(BigInt::from(8), 0);
        assert_eq!(d.mantissa_bits(), 1);
        assert_eq!(d.to_rational(), rat(8, 1));
    }

    #[test]
    fn add_and_mul_are_exact() {
        let a = Dyadic::new(BigInt::from(3), -2); // 3/4
        let b = Dyadic::new(BigInt::from(5), -3); // 5/8
        assert_eq!(a.add(&b).to_rational(), rat(11, 8));
        assert_eq!(a.mul(&b).to_rational(), rat(15, 32));
        assert_eq!(a.sub(&b).to_rational(), rat(1, 8));
    }

    #[test]
    fn rounding_directions_bracket() {
        let exact = rat(1, 3);
        for prec in [8u32, 16, 53, 128] {
            let lo = Dyadic::from_rational(&exact, prec, Round::Down);
            let hi = Dyadic::from_rational(&exact, prec, Round::Up);
            assert!(lo.to_rational() <= exact);
            assert!(hi.to_rational() >= exact);
            assert!(lo <= hi);
        }
    }

    #[test]
    fn rounding_negative_values() {
        let exact = rat(-1, 3);
        let lo = Dyadic::from_rational(&exact, 16, Round::Down);
        let hi = Dyadic::from_rational(&exact, 16, Round::Up);
        assert!(lo.to_rational() <= exact && exact <= hi.to_rational());
    }

    #[test]
    fn division_directed() {
        let a = Dyadic::from_i64(1);
        let b = Dyadic::from_i64(7);
        let lo = a.div(&b, 32, Round::Down).to_rational();
        let hi = a.div(&b, 32, Round::Up).to_rational();
        assert!(lo <= rat(1, 7) && rat(1, 7) <= hi);
        assert!((hi - lo) < rat(1, 1 << 30));
    }

    #[test]
    fn ordering() {
        let a = Dyadic::new(BigInt::from(1), -1);
        let b = Dyadic::new(BigInt::from(3), -2);
        assert!(a < b);
        assert_eq!(a.midpoint(&b).to_rational(), rat(5, 8));
    }
}
