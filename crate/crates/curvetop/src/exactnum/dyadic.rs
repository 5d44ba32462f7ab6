use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A number of the form `mantissa * 2^exponent`.
///
/// Values are kept canonical: the mantissa is odd, or the whole value is
/// `0 * 2^0`. Addition, subtraction and multiplication are exact, and so is
/// comparison, so the derived `Eq`/`Hash` agree with numeric equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mantissa: BigInt,
    exponent: i64,
}

impl Dyadic {
    pub fn new(mantissa: BigInt, exponent: i64) -> Self {
        let mut d = Dyadic { mantissa, exponent };
        d.normalize();
        d
    }

    fn normalize(&mut self) {
        if self.mantissa.is_zero() {
            self.exponent = 0;
            return;
        }
        let tz = self.mantissa.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.mantissa >>= tz as usize;
            self.exponent += tz as i64;
        }
    }

    pub fn zero() -> Self {
        Dyadic { mantissa: BigInt::zero(), exponent: 0 }
    }

    pub fn one() -> Self {
        Dyadic { mantissa: BigInt::one(), exponent: 0 }
    }

    pub fn from_int<T: Into<BigInt>>(v: T) -> Self {
        Dyadic::new(v.into(), 0)
    }

    /// `2^k`.
    pub fn pow2(k: i64) -> Self {
        Dyadic { mantissa: BigInt::one(), exponent: k }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn signum(&self) -> i32 {
        match self.mantissa.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Dyadic { mantissa: self.mantissa.abs(), exponent: self.exponent }
    }

    /// Multiply by `2^k` exactly.
    pub fn shl(&self, k: i64) -> Self {
        if self.is_zero() {
            return Dyadic::zero();
        }
        Dyadic { mantissa: self.mantissa.clone(), exponent: self.exponent + k }
    }

    pub fn half(&self) -> Self {
        self.shl(-1)
    }

    /// Exact midpoint of two dyadics.
    pub fn midpoint(a: &Dyadic, b: &Dyadic) -> Dyadic {
        (a + b).half()
    }

    /// Bits in the mantissa.
    pub fn mantissa_bits(&self) -> u64 {
        self.mantissa.bits()
    }

    /// Bitsize of the numerator plus that of the denominator.
    pub fn bitsize(&self) -> u64 {
        let den = if self.exponent < 0 { (-self.exponent) as u64 + 1 } else { 1 };
        let num = self.mantissa.bits() + if self.exponent > 0 { self.exponent as u64 } else { 0 };
        num.max(1) + den
    }

    /// An integer `e` such that `|self| < 2^e`; `i64::MIN` for zero.
    pub fn magnitude_exp(&self) -> i64 {
        if self.is_zero() {
            i64::MIN
        } else {
            self.exponent + self.mantissa.bits() as i64
        }
    }

    /// Largest dyadic with exponent `>= -prec` that is `<= self`.
    pub fn floor_to(&self, prec: i64) -> Dyadic {
        let target = -prec;
        if self.exponent >= target {
            return self.clone();
        }
        let shift = (target - self.exponent) as usize;
        Dyadic::new(self.mantissa.clone() >> shift, target)
    }

    /// Smallest dyadic with exponent `>= -prec` that is `>= self`.
    pub fn ceil_to(&self, prec: i64) -> Dyadic {
        -(-self).floor_to(prec)
    }

    /// Round to roughly `bits` significant bits (toward negative infinity).
    pub fn round_bits(&self, bits: u64) -> Dyadic {
        let have = self.mantissa.bits();
        if have <= bits {
            return self.clone();
        }
        let shift = have - bits;
        Dyadic::new(&self.mantissa >> shift as usize, self.exponent + shift as i64)
    }

    pub fn floor_int(&self) -> BigInt {
        if self.exponent >= 0 {
            &self.mantissa << self.exponent as usize
        } else {
            // Arithmetic shift on BigInt rounds toward negative infinity.
            &self.mantissa >> (-self.exponent) as usize
        }
    }

    pub fn ceil_int(&self) -> BigInt {
        -((-self).floor_int())
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exponent >= 0 {
            BigRational::from_integer(&self.mantissa << self.exponent as usize)
        } else {
            BigRational::new(self.mantissa.clone(), BigInt::one() << (-self.exponent) as usize)
        }
    }

    /// Dyadic value of a rational whose denominator is a power of two.
    pub fn from_rational_exact(r: &BigRational) -> Option<Dyadic> {
        let den = r.denom();
        let tz = den.trailing_zeros().unwrap_or(0);
        if (den >> tz as usize) != BigInt::one() {
            return None;
        }
        Some(Dyadic::new(r.numer().clone(), -(tz as i64)))
    }

    /// Floor of `r` on the grid `2^-prec`.
    pub fn floor_rational(r: &BigRational, prec: i64) -> Dyadic {
        let scaled = if prec >= 0 {
            r * BigRational::from_integer(BigInt::one() << prec as usize)
        } else {
            r / BigRational::from_integer(BigInt::one() << (-prec) as usize)
        };
        Dyadic::new(scaled.floor().to_integer(), -prec)
    }

    pub fn ceil_rational(r: &BigRational, prec: i64) -> Dyadic {
        -Dyadic::floor_rational(&-r, prec)
    }

    /// Quotient rounded down onto the grid `2^-prec`.
    pub fn div_floor(a: &Dyadic, b: &Dyadic, prec: i64) -> Dyadic {
        assert!(!b.is_zero(), "division by zero dyadic");
        // a/b = (ma/mb) * 2^(ea-eb); want floor(a/b * 2^prec) * 2^-prec.
        let shift = a.exponent - b.exponent + prec;
        let (mut num, mut den) = (a.mantissa.clone(), b.mantissa.clone());
        if shift >= 0 {
            num <<= shift as usize;
        } else {
            den <<= (-shift) as usize;
        }
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Dyadic::new(num.div_floor(&den), -prec)
    }

    pub fn div_ceil(a: &Dyadic, b: &Dyadic, prec: i64) -> Dyadic {
        -Dyadic::div_floor(&-a, b, prec)
    }

    /// Lower bound for `sqrt(self)` on the grid `2^-prec`; requires `self >= 0`.
    pub fn sqrt_floor(&self, prec: i64) -> Dyadic {
        assert!(self.signum() >= 0, "sqrt of negative dyadic");
        if self.is_zero() {
            return Dyadic::zero();
        }
        // floor(sqrt(v * 4^prec)) * 2^-prec
        let e2 = self.exponent + 2 * prec;
        let v = if e2 >= 0 {
            &self.mantissa << e2 as usize
        } else {
            &self.mantissa >> (-e2) as usize
        };
        Dyadic::new(v.sqrt(), -prec)
    }

    pub fn sqrt_ceil(&self, prec: i64) -> Dyadic {
        let lo = self.sqrt_floor(prec);
        if &(&lo * &lo) == self {
            lo
        } else {
            lo + Dyadic::pow2(-prec)
        }
    }

    pub fn to_f64(&self) -> f64 {
        let bits = self.mantissa.bits() as i64;
        if bits > 60 {
            let shift = bits - 60;
            let m = (&self.mantissa >> shift as usize).to_f64().unwrap_or(0.0);
            m * 2f64.powi((self.exponent + shift).clamp(-2000, 2000) as i32)
        } else {
            self.mantissa.to_f64().unwrap_or(0.0) * 2f64.powi(self.exponent.clamp(-2000, 2000) as i32)
        }
    }

    /// Nearest dyadic to a finite float (floats are dyadic, so this is exact).
    pub fn from_f64(x: f64) -> Dyadic {
        if x == 0.0 || !x.is_finite() {
            return Dyadic::zero();
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 1 { -1i64 } else { 1 };
        let exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = (bits & ((1u64 << 52) - 1)) as i64;
        let (m, e) = if exp == 0 { (frac, -1074) } else { (frac | (1 << 52), exp - 1075) };
        Dyadic::new(BigInt::from(sign * m), e)
    }

    /// Exact decimal expansion (every dyadic has a finite one).
    pub fn to_decimal_string(&self) -> String {
        if self.exponent >= 0 {
            return (&self.mantissa << self.exponent as usize).to_string();
        }
        let k = (-self.exponent) as usize;
        // m / 2^k = m * 5^k / 10^k
        let scaled = self.mantissa.abs() * num_traits::pow(BigInt::from(5), k);
        let digits = scaled.to_string();
        let (int_part, frac_part) = if digits.len() > k {
            let (a, b) = digits.split_at(digits.len() - k);
            (a.to_string(), b.to_string())
        } else {
            ("0".to_string(), format!("{}{}", "0".repeat(k - digits.len()), digits))
        };
        let frac_part = frac_part.trim_end_matches('0');
        let sign = if self.mantissa.is_negative() { "-" } else { "" };
        if frac_part.is_empty() {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac_part}")
        }
    }

    /// The dyadic of smallest denominator in the open interval `(a, b)`,
    /// breaking ties toward zero.
    pub fn simplest_between(a: &Dyadic, b: &Dyadic) -> Dyadic {
        assert!(a < b, "empty open interval");
        if a.signum() < 0 && b.signum() > 0 {
            return Dyadic::zero();
        }
        let mut prec: i64 = 0;
        loop {
            let step = Dyadic::pow2(-prec);
            if a.signum() >= 0 {
                let cand = a.floor_to(prec) + &step;
                if &cand < b {
                    return cand;
                }
            } else {
                let cand = b.ceil_to(prec) - &step;
                if &cand > a {
                    return cand;
                }
            }
            prec += 1;
        }
    }
}

impl From<i64> for Dyadic {
    fn from(v: i64) -> Self {
        Dyadic::from_int(v)
    }
}

impl From<BigInt> for Dyadic {
    fn from(v: BigInt) -> Self {
        Dyadic::new(v, 0)
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (sa, sb) = (self.signum(), other.signum());
        if sa != sb {
            return sa.cmp(&sb);
        }
        let e = self.exponent.min(other.exponent);
        let a = &self.mantissa << (self.exponent - e) as usize;
        let b = &other.mantissa << (other.exponent - e) as usize;
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let e = self.exponent.min(rhs.exponent);
        let a = &self.mantissa << (self.exponent - e) as usize;
        let b = &rhs.mantissa << (rhs.exponent - e) as usize;
        Dyadic::new(a + b, e)
    }
}

impl<'a> Sub<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        if self.is_zero() || rhs.is_zero() {
            return Dyadic::zero();
        }
        // Product of odd mantissas is odd: already canonical.
        Dyadic { mantissa: &self.mantissa * &rhs.mantissa, exponent: self.exponent + rhs.exponent }
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic { mantissa: -&self.mantissa, exponent: self.exponent }
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic { mantissa: -self.mantissa, exponent: self.exponent }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<Dyadic> for Dyadic {
            type Output = Dyadic;
            fn $f(self, rhs: Dyadic) -> Dyadic {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a Dyadic> for Dyadic {
            type Output = Dyadic;
            fn $f(self, rhs: &Dyadic) -> Dyadic {
                (&self).$f(rhs)
            }
        }
        impl<'a> $tr<Dyadic> for &'a Dyadic {
            type Output = Dyadic;
            fn $f(self, rhs: Dyadic) -> Dyadic {
                self.$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mantissa.bits() <= 64 && self.exponent.abs() <= 64 {
            write!(f, "{}", self.to_decimal_string())
        } else {
            write!(f, "{}*2^{}", self.mantissa, self.exponent)
        }
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
