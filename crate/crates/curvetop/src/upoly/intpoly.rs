use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::Poly;
use crate::error::{Error, Result};
use crate::exactnum::{ComplexInterval, Dyadic, Interval};

/// Univariate polynomial with integer coefficients.
pub type IntPoly = Poly<BigInt>;

/// Size and root-bound data for an integer polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMetrics {
    pub degree: usize,
    /// Every coefficient satisfies `|a_i| < 2^tau`.
    pub tau: u64,
    /// `Len(f)`, the sum of absolute values of the coefficients.
    pub length: BigInt,
    /// Squared 2-norm of the coefficient vector.
    pub norm_sq: BigInt,
    pub cauchy: BigRational,
    /// `2^-n Len(f)`, a lower bound for the Mahler measure.
    pub mahler_lower: BigRational,
    /// Upper bound for the Mahler measure: `||f||` rounded up.
    pub mahler_upper: Dyadic,
}

impl Poly<BigInt> {
    pub fn from_i64s(c: &[i64]) -> IntPoly {
        Poly::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    /// Positive gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs().iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// `f / content(f)`, normalised to a positive leading coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        self.div_scalar(&c).expect("content divides every coefficient")
    }

    /// Coefficient bitsize `tau` with `|a_i| < 2^tau`.
    pub fn tau(&self) -> u64 {
        self.coeffs().iter().map(|c| c.bits()).max().unwrap_or(0)
    }

    pub fn eval_rational(&self, r: &BigRational) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        // Homogenised Horner: sum a_i p^i q^(n-i), then divide by q^n.
        let (p, q) = (r.numer(), r.denom());
        let mut acc = BigInt::zero();
        let mut qpow = BigInt::one();
        for a in self.coeffs().iter().rev() {
            acc = acc * p + a * &qpow;
            qpow *= q;
        }
        BigRational::new(acc, num_traits::pow(q.clone(), self.deg()))
    }

    /// Exact value at a dyadic point.
    pub fn eval_dyadic(&self, x: &Dyadic) -> Dyadic {
        let mut acc = Dyadic::zero();
        for a in self.coeffs().iter().rev() {
            acc = &(&acc * x) + &Dyadic::from(a.clone());
        }
        acc
    }

    /// Sign of the value at a dyadic point, computed on integers.
    pub fn sign_at(&self, x: &Dyadic) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let e = x.exponent();
        if e >= 0 {
            return self.eval_dyadic(x).signum();
        }
        // 2^(k n) f(m 2^-k) = sum a_i m^i 2^(k (n - i))
        let k = (-e) as usize;
        let m = x.mantissa();
        let mut acc = BigInt::zero();
        for (step, a) in self.coeffs().iter().rev().enumerate() {
            acc = acc * m + (a << (k * step));
        }
        sign_of(&acc)
    }

    /// Interval enclosure of the range over `x` (Horner form).
    pub fn eval_interval(&self, x: &Interval) -> Interval {
        if x.is_point() {
            return Interval::point(self.eval_dyadic(&x.lo));
        }
        // Centred form f(m) + f'(X) (X - m) is far tighter on thin intervals.
        let m = x.mid();
        let fm = self.eval_dyadic(&m);
        let d = self.derivative();
        let mut dr = Interval::from_int(0);
        for a in d.coeffs().iter().rev() {
            dr = &(&dr * x) + &Interval::point(Dyadic::from(a.clone()));
        }
        let dx = Interval::new(&x.lo - &m, &x.hi - &m);
        let centred = &Interval::point(fm) + &(&dr * &dx);
        let mut horner = Interval::from_int(0);
        for a in self.coeffs().iter().rev() {
            horner = &(&horner * x) + &Interval::point(Dyadic::from(a.clone()));
        }
        // Both contain the range; intersect.
        Interval::new(centred.lo.max(horner.lo), centred.hi.min(horner.hi))
    }

    /// Enclosure of the value over a complex box.
    pub fn eval_complex(&self, z: &ComplexInterval) -> ComplexInterval {
        let mut acc = ComplexInterval::from_int(0);
        for a in self.coeffs().iter().rev() {
            acc = &(&acc * z) + &ComplexInterval::real(Interval::point(Dyadic::from(a.clone())));
        }
        acc
    }

    pub fn metrics(&self) -> Result<PolyMetrics> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let length: BigInt = self.coeffs().iter().map(|c| c.abs()).sum();
        let norm_sq: BigInt = self.coeffs().iter().map(|c| c * c).sum();
        let n = self.deg();
        let mahler_lower = BigRational::new(length.clone(), BigInt::one() << n);
        let mahler_upper = Dyadic::from(norm_sq.clone()).sqrt_ceil(32);
        Ok(PolyMetrics {
            degree: n,
            tau: self.tau(),
            length,
            norm_sq,
            cauchy: cauchy_bound(self)?,
            mahler_lower,
            mahler_upper,
        })
    }
}

impl std::fmt::Display for Poly<BigInt> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "X")?,
                (1, false) => write!(f, "{mag}*X")?,
                (_, true) => write!(f, "X^{i}")?,
                (_, false) => write!(f, "{mag}*X^{i}")?,
            }
        }
        Ok(())
    }
}

fn sign_of(v: &BigInt) -> i32 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

/// Primitive gcd with positive leading coefficient.
pub fn gcd(f: &IntPoly, g: &IntPoly) -> Result<IntPoly> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_zero() {
        return Ok(g.primitive_part());
    }
    if g.is_zero() {
        return Ok(f.primitive_part());
    }
    let (mut a, mut b) = (f.primitive_part(), g.primitive_part());
    if a.deg() < b.deg() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        if b.deg() == 0 {
            return Ok(IntPoly::one());
        }
        let r = a.prem(&b);
        a = b;
        b = r.primitive_part();
    }
    Ok(a.primitive_part())
}

/// Exact quotient `f / g` in `Z[X]`.
pub fn exact_div(f: &IntPoly, g: &IntPoly) -> Result<IntPoly> {
    f.exact_div_poly(g).ok_or(Error::NotDivisible)
}

/// Yun's square-free decomposition: `f = c * prod g_i^i` with each `g_i`
/// primitive, square-free, pairwise coprime. Only nonconstant factors are
/// listed, in increasing multiplicity.
pub fn square_free_decomposition(f: &IntPoly) -> Result<Vec<(IntPoly, usize)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = f.primitive_part();
    if f.deg() == 0 {
        return Ok(Vec::new());
    }
    let df = f.derivative();
    let a0 = gcd(&f, &df)?;
    let mut b = exact_div(&f, &a0)?;
    let mut c = exact_div(&df, &a0)?;
    let mut d = &c - &b.derivative();
    let mut out = Vec::new();
    let mut i = 1;
    while b.deg() > 0 {
        let a = gcd(&b, &d)?;
        b = exact_div(&b, &a)?;
        c = exact_div(&d, &a)?;
        d = &c - &b.derivative();
        if a.deg() > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    Ok(out)
}

/// Square-free part `f*` (primitive, positive leading coefficient).
pub fn square_free_part(f: &IntPoly) -> Result<IntPoly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.deg() == 0 {
        return Ok(IntPoly::one());
    }
    let g = gcd(f, &f.derivative())?;
    Ok(exact_div(&f.primitive_part(), &g)?.primitive_part())
}

/// `C(f) = sum_{q <= i <= n} |a_i / a_n|`, where `q` is the lowest index with
/// a nonzero coefficient. Every complex root has modulus below `C(f)`.
pub fn cauchy_bound(f: &IntPoly) -> Result<BigRational> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let lc = f.lc().abs();
    let q = f.low_degree();
    let s: BigInt = f.coeffs()[q..].iter().map(|c| c.abs()).sum();
    Ok(BigRational::new(s, lc))
}

/// Taylor coefficient `f^[i] = f^(i) / i!`.
pub fn taylor_coefficient(f: &IntPoly, i: usize) -> IntPoly {
    f.taylor_coefficient(i)
}

/// Substitute `X -> X + c` for an integer `c` (Taylor shift).
pub fn taylor_shift(f: &IntPoly, c: &BigInt) -> IntPoly {
    let mut a: Vec<BigInt> = f.coeffs().to_vec();
    let n = a.len();
    if c.is_zero() || n <= 1 {
        return f.clone();
    }
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let t = &a[j + 1] * c;
            a[j] += t;
        }
    }
    Poly::new(a)
}

/// `2^(k n) f(X / 2^k)` for `k >= 0`, scaling roots by `2^k`.
pub fn scale_roots_up(f: &IntPoly, k: u64) -> IntPoly {
    let n = f.deg();
    Poly::new(f.coeffs().iter().enumerate().map(|(i, a)| a << (k as usize * (n - i))).collect())
}

/// `f(2^k X)` for `k >= 0`, scaling roots by `2^-k`.
pub fn scale_roots_down(f: &IntPoly, k: u64) -> IntPoly {
    Poly::new(f.coeffs().iter().enumerate().map(|(i, a)| a << (k as usize * i)).collect())
}

/// Integer polynomial with the same roots as `f(X) * den^n` where `f` has
/// rational coefficients.
pub fn clear_denominators(c: &[BigRational]) -> IntPoly {
    let l = c.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    Poly::new(c.iter().map(|r| (r * BigRational::from_integer(l.clone())).to_integer()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn evaluation_at_rationals() {
        assert_eq!(p(&[-2, 0, 1]).eval_rational(&q(1, 1)), q(-1, 1));
        assert_eq!(p(&[-2, 0, 1]).eval_rational(&q(3, 2)), q(1, 4));
        assert_eq!(p(&[]).eval_rational(&q(7, 1)), q(0, 1));
        assert_eq!(p(&[1, -3, 0, 2]).eval_rational(&q(-2, 3)), q(1, 1) + q(2, 1) + q(-16, 27));
    }

    #[test]
    fn sign_at_dyadics() {
        let f = p(&[-2, 0, 1]);
        assert_eq!(f.sign_at(&Dyadic::new(3.into(), -1)), 1);
        assert_eq!(f.sign_at(&Dyadic::new(5.into(), -2)), -1);
        assert_eq!(p(&[1, -2]).sign_at(&Dyadic::new(1.into(), -1)), 0);
    }

    #[test]
    fn gcds() {
        assert_eq!(gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(), p(&[-1, 1]));
        assert_eq!(gcd(&p(&[-2, 0, 1]), &p(&[-3, 0, 1])).unwrap(), p(&[1]));
        assert_eq!(gcd(&p(&[0, 0, 2]), &p(&[0, 4])).unwrap(), p(&[0, 1]));
        assert!(gcd(&p(&[]), &p(&[])).is_err());
    }

    #[test]
    fn exact_division() {
        assert_eq!(exact_div(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(), p(&[1, 1]));
        assert_eq!(exact_div(&p(&[0, 0, 0, 1]), &p(&[0, 1])).unwrap(), p(&[0, 0, 1]));
        assert_eq!(exact_div(&p(&[1, 0, 1]), &p(&[-1, 1])), Err(Error::NotDivisible));
    }

    #[test]
    fn yun() {
        // (X - 1)^2 (X + 2) = X^3 - 3X + 2
        assert_eq!(
            square_free_decomposition(&p(&[2, -3, 0, 1])).unwrap(),
            vec![(p(&[2, 1]), 1), (p(&[-1, 1]), 2)]
        );
        assert_eq!(square_free_decomposition(&p(&[-2, 0, 1])).unwrap(), vec![(p(&[-2, 0, 1]), 1)]);
        assert_eq!(square_free_decomposition(&p(&[0, 0, 0, 0, 1])).unwrap(), vec![(p(&[0, 1]), 4)]);
    }

    #[test]
    fn cauchy() {
        assert_eq!(cauchy_bound(&p(&[2, -3, 1])).unwrap(), q(6, 1));
        assert_eq!(cauchy_bound(&p(&[0, 1])).unwrap(), q(1, 1));
        assert_eq!(cauchy_bound(&p(&[0, -4, 0, 2])).unwrap(), q(3, 1));
    }

    #[test]
    fn taylor() {
        assert_eq!(taylor_coefficient(&p(&[0, 0, 1]), 1), p(&[0, 2]));
        assert_eq!(taylor_coefficient(&p(&[0, 0, 0, 1]), 2), p(&[0, 3]));
        assert_eq!(taylor_coefficient(&p(&[5]), 1), p(&[]));
        assert_eq!(taylor_shift(&p(&[0, 0, 1]), &BigInt::from(1)), p(&[1, 2, 1]));
    }

    #[test]
    fn metrics_sandwich() {
        let m = p(&[-2, 0, 1]).metrics().unwrap();
        assert_eq!(m.length, BigInt::from(3));
        assert!(m.mahler_lower <= m.mahler_upper.to_rational());
    }
}
