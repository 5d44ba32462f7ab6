use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use super::Dyadic;

/// A closed interval `[lo, hi]` with dyadic endpoints.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Dyadic,
    pub hi: Dyadic,
}

impl Interval {
    pub fn new(lo: Dyadic, hi: Dyadic) -> Self {
        assert!(lo <= hi, "interval endpoints out of order: {lo:?} > {hi:?}");
        Interval { lo, hi }
    }

    pub fn point(v: Dyadic) -> Self {
        Interval { lo: v.clone(), hi: v }
    }

    pub fn from_int(v: i64) -> Self {
        Interval::point(Dyadic::from(v))
    }

    /// Tightest enclosure of a rational on the grid `2^-prec`.
    pub fn from_rational(r: &BigRational, prec: i64) -> Self {
        if let Some(d) = Dyadic::from_rational_exact(r) {
            return Interval::point(d);
        }
        Interval::new(Dyadic::floor_rational(r, prec), Dyadic::ceil_rational(r, prec))
    }

    pub fn width(&self) -> Dyadic {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Dyadic {
        Dyadic::midpoint(&self.lo, &self.hi)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Dyadic) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.lo.signum() <= 0 && self.hi.signum() >= 0
    }

    /// `other` lies inside `self`.
    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn overlaps(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Sign of every point of the interval, or `None` when it straddles zero.
    pub fn sign(&self) -> Option<i32> {
        if self.lo.signum() > 0 {
            Some(1)
        } else if self.hi.signum() < 0 {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    /// Largest absolute value over the interval.
    pub fn mag(&self) -> Dyadic {
        self.lo.abs().max(self.hi.abs())
    }

    /// Smallest absolute value over the interval.
    pub fn mig(&self) -> Dyadic {
        if self.contains_zero() {
            Dyadic::zero()
        } else {
            self.lo.abs().min(self.hi.abs())
        }
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.clone().min(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
        }
    }

    pub fn square(&self) -> Interval {
        let a = self.mig();
        let b = self.mag();
        Interval { lo: &a * &a, hi: &b * &b }
    }

    pub fn pow(&self, k: u32) -> Interval {
        if k == 0 {
            return Interval::from_int(1);
        }
        if k.is_multiple_of(2) {
            let h = self.pow(k / 2);
            return h.square();
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = &acc * self;
        }
        acc
    }

    /// Round endpoints outward to the grid `2^-prec`.
    pub fn round_out(&self, prec: i64) -> Interval {
        Interval { lo: self.lo.floor_to(prec), hi: self.hi.ceil_to(prec) }
    }

    /// Round endpoints outward keeping about `bits` bits relative to the magnitude.
    pub fn round_rel(&self, bits: u64) -> Interval {
        let m = self.mag();
        if m.is_zero() {
            return self.clone();
        }
        let prec = bits as i64 - m.magnitude_exp();
        self.round_out(prec)
    }

    pub fn scale_pow2(&self, k: i64) -> Interval {
        Interval { lo: self.lo.shl(k), hi: self.hi.shl(k) }
    }

    /// Decimal rendering `[lo, hi]` of the exact endpoints.
    pub fn to_decimal_pair(&self) -> [String; 2] {
        [self.lo.to_decimal_string(), self.hi.to_decimal_string()]
    }
}

impl<'a> Add<&'a Interval> for &'a Interval {
    type Output = Interval;
    fn add(self, rhs: &Interval) -> Interval {
        Interval { lo: &self.lo + &rhs.lo, hi: &self.hi + &rhs.hi }
    }
}

impl<'a> Sub<&'a Interval> for &'a Interval {
    type Output = Interval;
    fn sub(self, rhs: &Interval) -> Interval {
        Interval { lo: &self.lo - &rhs.hi, hi: &self.hi - &rhs.lo }
    }
}

impl<'a> Mul<&'a Interval> for &'a Interval {
    type Output = Interval;
    fn mul(self, rhs: &Interval) -> Interval {
        if self.is_point() && rhs.is_point() {
            return Interval::point(&self.lo * &rhs.lo);
        }
        let c = [&self.lo * &rhs.lo, &self.lo * &rhs.hi, &self.hi * &rhs.lo, &self.hi * &rhs.hi];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Interval { lo, hi }
    }
}

impl Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval { lo: -&self.hi, hi: -&self.lo }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<Interval> for Interval {
            type Output = Interval;
            fn $f(self, rhs: Interval) -> Interval {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a Interval> for Interval {
            type Output = Interval;
            fn $f(self, rhs: &Interval) -> Interval {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}, {:?}]", self.lo, self.hi)
    }
}
