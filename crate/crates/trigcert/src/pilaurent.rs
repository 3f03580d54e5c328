//! Exact Laurent polynomials in pi with rational coefficients.
//!
//! Every closed-form sharp constant in the catalog lives here, e.g.
//! (241920 - 2688 pi^4 + 32 pi^6)/(945 pi^8) is the map
//! {-8: 256, -4: -128/45, -2: 32/945}. Since pi is transcendental, a
//! `PiLaurent` is zero as a real number exactly when all coefficients
//! vanish, so the zero test is decidable; sign determination evaluates at
//! escalating interval precision.

use std::collections::BTreeMap;
use std::fmt;

use num::traits::{Signed, Zero};

use crate::interval::Interval;
use crate::pi::pi_enclosure;
use crate::rational::{decimal_string, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PiLaurent {
    terms: BTreeMap<i64, Rational>,
}

impl PiLaurent {
    pub fn zero() -> Self {
        PiLaurent::default()
    }

    pub fn one() -> Self {
        PiLaurent::from_rational(Rational::from_integer(1.into()))
    }

    pub fn from_rational(c: Rational) -> Self {
        PiLaurent::term(0, c)
    }

    /// c * pi^p.
    pub fn term(p: i64, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(p, c);
        }
        PiLaurent { terms }
    }

    /// (2/pi)^e as an exact Laurent term.
    pub fn two_over_pi_pow(e: u32) -> Self {
        PiLaurent::term(-(e as i64), Rational::from_integer(crate::rational::pow2(e as u64)))
    }

    /// (pi/2)^e as an exact Laurent term.
    pub fn half_pi_pow(e: u32) -> Self {
        PiLaurent::term(
            e as i64,
            Rational::new(1.into(), crate::rational::pow2(e as u64)),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_rational(&self) -> Option<&Rational> {
        match self.terms.len() {
            0 => None,
            1 => self.terms.get(&0),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Rational)> {
        self.terms.iter()
    }

    fn insert(&mut self, p: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(p) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &PiLaurent) -> PiLaurent {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.insert(*p, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &PiLaurent) -> PiLaurent {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PiLaurent {
        PiLaurent {
            terms: self.terms.iter().map(|(p, c)| (*p, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &PiLaurent) -> PiLaurent {
        let mut out = PiLaurent::zero();
        for (p1, c1) in &self.terms {
            for (p2, c2) in &other.terms {
                out.insert(p1 + p2, c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> PiLaurent {
        if r.is_zero() {
            return PiLaurent::zero();
        }
        PiLaurent {
            terms: self.terms.iter().map(|(p, c)| (*p, c.clone() * r.clone())).collect(),
        }
    }

    /// Multiplies by pi^p.
    pub fn shift(&self, p: i64) -> PiLaurent {
        PiLaurent {
            terms: self.terms.iter().map(|(q, c)| (q + p, c.clone())).collect(),
        }
    }

    /// Interval certainly containing the exact value.
    pub fn eval(&self, prec: u32) -> Interval {
        let mut acc = Interval::zero(prec);
        if self.terms.is_empty() {
            return acc;
        }
        let pi = pi_enclosure(prec);
        let inv_pi = pi
            .recip(prec)
            .expect("pi enclosure excludes zero");
        for (p, c) in &self.terms {
            let pw = if *p >= 0 {
                pi.int_pow(*p as u32)
            } else {
                inv_pi.int_pow((-*p) as u32)
            };
            acc = acc + pw.scale(c, prec);
        }
        acc
    }

    /// Certified strict sign: +1 / -1 once an enclosure excludes zero, None
    /// if still undecided at `max_prec` (only possible for the zero value,
    /// which the exact zero test already rules out, or far too low budgets).
    pub fn sign(&self, max_prec: u32) -> Option<i32> {
        if self.is_zero() {
            return Some(0);
        }
        let mut prec = 64u32;
        loop {
            let v = self.eval(prec);
            if v.certainly_positive() {
                return Some(1);
            }
            if v.certainly_negative() {
                return Some(-1);
            }
            if prec >= max_prec {
                return None;
            }
            prec = (prec * 2).min(max_prec);
        }
    }

    /// Exact rational upper bound on |value|.
    pub fn abs_upper(&self, prec: u32) -> Rational {
        let v = self.eval(prec).abs();
        v.hi().to_rational()
    }

    /// Exact rational lower bound on the value.
    pub fn lower_rational(&self, prec: u32) -> Rational {
        self.eval(prec).lo().to_rational()
    }
}

impl fmt::Display for PiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, c) in self.terms.iter().rev() {
            if first {
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = if first && c.is_negative() {
                // Sign was not consumed by a separator for the first term.
                c.clone()
            } else {
                c.abs()
            };
            match *p {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}*pi")?,
                p => write!(f, "{mag}*pi^{p}")?,
            }
        }
        Ok(())
    }
}

/// Decimal rendering of the enclosure with only certified digits.
pub fn certified_decimal(v: &PiLaurent, prec: u32, max_digits: u32) -> String {
    if let Some(r) = v.is_rational() {
        return decimal_string(r, max_digits as usize);
    }
    v.eval(prec).certified_decimal(max_digits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn b_constant() -> PiLaurent {
        // (241920 - 2688 pi^4 + 32 pi^6) / (945 pi^8)
        PiLaurent::term(-8, rat(256, 1))
            .add(&PiLaurent::term(-4, rat(-128, 45)))
            .add(&PiLaurent::term(-2, rat(32, 945)))
    }

    #[test]
    fn empty_is_zero_interval() {
        let z = PiLaurent::zero();
        let v = z.eval(64);
        assert!(v.contains_zero());
        assert!(v.width().is_zero());
    }

    #[test]
    fn upper_mortici_constant_value() {
        let b = b_constant();
        let s = certified_decimal(&b, 128, 8);
        assert!(s.starts_with("0.001209"), "got {s}");
    }

    #[test]
    fn rational_only_constant() {
        let a = PiLaurent::from_rational(rat(16, 14175));
        let s = certified_decimal(&a, 64, 8);
        assert!(s.starts_with("0.001128"), "got {s}");
    }

    #[test]
    fn literal_vs_laurent_route_overlap() {
        // Direct interval evaluation of (241920 - 2688 pi^4 + 32 pi^6)/(945 pi^8)
        // must overlap the Laurent evaluation at every precision.
        for prec in [32u32, 64, 128, 256] {
            let pi = pi_enclosure(prec);
            let num = Interval::from_i64(241920, prec)
                - pi.int_pow(4).scale(&rat(2688, 1), prec)
                + pi.int_pow(6).scale(&rat(32, 1), prec);
            let den = pi.int_pow(8).scale(&rat(945, 1), prec);
            let direct = num.div(&den).unwrap();
            let laurent = b_constant().eval(prec);
            assert!(direct.overlaps(&laurent), "routes disagree at {prec} bits");
        }
    }

    #[test]
    fn sign_certification() {
        let b = b_constant();
        assert_eq!(b.sign(512), Some(1));
        assert_eq!(b.neg().sign(512), Some(-1));
        assert_eq!(PiLaurent::zero().sign(512), Some(0));
        // pi^2 - 10 < 0 < pi^2 - 9
        let p2 = PiLaurent::term(2, rat(1, 1));
        assert_eq!(p2.sub(&PiLaurent::from_rational(rat(10, 1))).sign(512), Some(-1));
        assert_eq!(p2.sub(&PiLaurent::from_rational(rat(9, 1))).sign(512), Some(1));
    }

    #[test]
    fn algebra() {
        let x = PiLaurent::two_over_pi_pow(4);
        let y = PiLaurent::half_pi_pow(4);
        assert_eq!(x.mul(&y), PiLaurent::one());
        let z = x.sub(&x);
        assert!(z.is_zero());
    }
}
