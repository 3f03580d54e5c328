//! Validated interval arithmetic with outward rounding.
//!
//! Every operation returns an interval containing the exact image of its
//! operands; endpoints are dyadic and are rounded outward to the working
//! precision after each step. Strict comparisons are certified as
//! certainly-less / certainly-greater; anything else is `Undecided` and it
//! is the caller's job to escalate precision — an undecided comparison is
//! never a silent pass.

use crate::dyadic::{Dyadic, Round};
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntervalCmp {
    CertainlyLess,
    CertainlyGreater,
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: Dyadic,
    hi: Dyadic,
    prec: u32,
}

impl Interval {
    pub fn new(lo: Dyadic, hi: Dyadic, prec: u32) -> Self {
        debug_assert!(lo <= hi, "interval endpoints out of order");
        Interval { lo, hi, prec }
    }

    pub fn point(d: Dyadic, prec: u32) -> Self {
        Interval { lo: d.clone(), hi: d, prec }
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        Interval::point(Dyadic::from_i64(v), prec)
    }

    pub fn from_rational(r: &Rational, prec: u32) -> Self {
        Interval {
            lo: Dyadic::from_rational(r, prec, Round::Down),
            hi: Dyadic::from_rational(r, prec, Round::Up),
            prec,
        }
    }

    pub fn from_rationals(lo: &Rational, hi: &Rational, prec: u32) -> Self {
        assert!(lo <= hi);
        Interval {
            lo: Dyadic::from_rational(lo, prec, Round::Down),
            hi: Dyadic::from_rational(hi, prec, Round::Up),
            prec,
        }
    }

    pub fn zero(prec: u32) -> Self {
        Interval::point(Dyadic::zero(), prec)
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    /// Re-rounds outward at a (possibly different) precision; containment is
    /// preserved by construction.
    pub fn with_precision(&self, prec: u32) -> Self {
        Interval {
            lo: self.lo.round(prec, Round::Down),
            hi: self.hi.round(prec, Round::Up),
            prec,
        }
    }

    fn outward(lo: Dyadic, hi: Dyadic, prec: u32) -> Self {
        Interval {
            lo: lo.round(prec, Round::Down),
            hi: hi.round(prec, Round::Up),
            prec,
        }
    }

    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo)
    }

    pub fn midpoint(&self) -> Dyadic {
        self.lo.midpoint(&self.hi)
    }

    pub fn neg(&self) -> Self {
        Interval { lo: self.hi.neg(), hi: self.lo.neg(), prec: self.prec }
    }

    pub fn abs(&self) -> Self {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            self.neg()
        } else {
            let hi = self.lo.abs().max(self.hi.abs());
            Interval { lo: Dyadic::zero(), hi, prec: self.prec }
        }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn certainly_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn certainly_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn contains_rational(&self, r: &Rational) -> bool {
        self.lo.to_rational() <= *r && *r <= self.hi.to_rational()
    }

    pub fn contains(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn overlaps(&self, other: &Interval) -> bool {
        !(self.hi < other.lo || other.hi < self.lo)
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = self.lo.clone().max(other.lo.clone());
        let hi = self.hi.clone().min(other.hi.clone());
        if lo <= hi {
            Some(Interval { lo, hi, prec: self.prec.max(other.prec) })
        } else {
            None
        }
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.clone().min(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
            prec: self.prec.max(other.prec),
        }
    }

    pub fn compare(&self, other: &Interval) -> IntervalCmp {
        if self.hi < other.lo {
            IntervalCmp::CertainlyLess
        } else if self.lo > other.hi {
            IntervalCmp::CertainlyGreater
        } else {
            IntervalCmp::Undecided
        }
    }

    pub fn certainly_less_than(&self, other: &Interval) -> bool {
        self.compare(other) == IntervalCmp::CertainlyLess
    }

    pub fn div(self, other: &Interval) -> Result<Interval> {
        if other.contains_zero() {
            return Err(Error::DivisionByZero);
        }
        let prec = self.prec.max(other.prec);
        let mut lo: Option<Dyadic> = None;
        let mut hi: Option<Dyadic> = None;
        for a in [&self.lo, &self.hi] {
            for b in [&other.lo, &other.hi] {
                let down = a.div(b, prec + 2, Round::Down);
                let up = a.div(b, prec + 2, Round::Up);
                lo = Some(match lo {
                    None => down,
                    Some(c) => c.min(down),
                });
                hi = Some(match hi {
                    None => up,
                    Some(c) => c.max(up),
                });
            }
        }
        Ok(Interval::outward(lo.unwrap(), hi.unwrap(), prec))
    }

    pub fn recip(&self, prec: u32) -> Result<Interval> {
        Interval::from_i64(1, prec).div(self)
    }

    /// Integer power with correct handling of even powers across zero.
    pub fn int_pow(&self, n: u32) -> Interval {
        let prec = self.prec;
        if n == 0 {
            return Interval::from_i64(1, prec);
        }
        if n == 1 {
            return self.clone();
        }
        if n % 2 == 1 || !self.contains_zero() {
            let a = pow_dyadic(&self.lo, n);
            let b = pow_dyadic(&self.hi, n);
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            Interval::outward(lo, hi, prec)
        } else {
            // Even power over an interval containing zero: [0, max^n].
            let m = self.lo.abs().max(self.hi.abs());
            Interval::outward(Dyadic::zero(), pow_dyadic(&m, n), prec)
        }
    }

    /// Scales by an exact rational.
    pub fn scale(&self, r: &Rational, prec: u32) -> Interval {
        self.clone() * Interval::from_rational(r, prec)
    }

    /// Two independent decimal strings (truncated toward -inf) for lo/hi.
    pub fn decimal_endpoints(&self, digits: u32) -> (String, String) {
        (decimal_floor_string(&self.lo, digits), decimal_floor_string(&self.hi, digits))
    }

    /// Longest decimal prefix certified by the enclosure: digits are printed
    /// only while the floors of lo and hi at that scale agree, so the
    /// printed value is a guaranteed prefix of the exact decimal expansion.
    pub fn certified_decimal(&self, max_digits: u32) -> String {
        if self.lo.is_negative() {
            // Only needed for nonnegative quantities in this crate.
            return format!("[{}..{}]", self.lo.to_f64(), self.hi.to_f64());
        }
        let mut best = String::from("0");
        for d in 1..=max_digits {
            let a = self.lo.scaled_floor_pow10(d);
            let b = self.hi.scaled_floor_pow10(d);
            if a == b {
                let s = a.to_string();
                let (int_part, frac) = if s.len() > d as usize {
                    let split = s.len() - d as usize;
                    (s[..split].to_string(), s[split..].to_string())
                } else {
                    ("0".to_string(), format!("{:0>width$}", s, width = d as usize))
                };
                best = format!("{int_part}.{frac}");
            } else {
                break;
            }
        }
        best
    }
}

fn pow_dyadic(d: &Dyadic, n: u32) -> Dyadic {
    let mut acc = Dyadic::one();
    let mut base = d.clone();
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&base);
        }
        base = base.mul(&base);
        e >>= 1;
    }
    acc
}

fn decimal_floor_string(d: &Dyadic, digits: u32) -> String {
    let scaled = d.scaled_floor_pow10(digits);
    let neg = scaled < num::bigint::BigInt::from(0);
    let s = scaled.magnitude().to_string();
    let (int_part, frac) = if s.len() > digits as usize {
        let split = s.len() - digits as usize;
        (s[..split].to_string(), s[split..].to_string())
    } else {
        ("0".to_string(), format!("{:0>width$}", s, width = digits as usize))
    };
    format!("{}{}.{}", if neg { "-" } else { "" }, int_part, frac)
}

impl std::ops::Add for Interval {
    type Output = Interval;
    fn add(self, rhs: Interval) -> Interval {
        let prec = self.prec.max(rhs.prec);
        Interval::outward(self.lo.add(&rhs.lo), self.hi.add(&rhs.hi), prec)
    }
}

impl std::ops::Sub for Interval {
    type Output = Interval;
    fn sub(self, rhs: Interval) -> Interval {
        let prec = self.prec.max(rhs.prec);
        Interval::outward(self.lo.sub(&rhs.hi), self.hi.sub(&rhs.lo), prec)
    }
}

impl std::ops::Mul for Interval {
    type Output = Interval;
    fn mul(self, rhs: Interval) -> Interval {
        let prec = self.prec.max(rhs.prec);
        let mut lo: Option<Dyadic> = None;
        let mut hi: Option<Dyadic> = None;
        for a in [&self.lo, &self.hi] {
            for b in [&rhs.lo, &rhs.hi] {
                let p = a.mul(b);
                lo = Some(match lo {
                    None => p.clone(),
                    Some(c) => c.min(p.clone()),
                });
                hi = Some(match hi {
                    None => p,
                    Some(c) => c.max(p),
                });
            }
        }
        Interval::outward(lo.unwrap(), hi.unwrap(), prec)
    }
}
