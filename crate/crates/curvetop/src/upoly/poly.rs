use std::fmt::{self, Debug};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Commutative ring with exact division, the coefficient domain of [`Poly`].
///
/// `exact_div` returns `None` when the quotient does not exist in the ring;
/// subresultant sequences only ever divide when the division is exact.
pub trait Ring:
    Clone + PartialEq + Debug + Zero + One + Neg<Output = Self> + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self>
{
    fn from_bigint(v: BigInt) -> Self;

    fn from_i64(v: i64) -> Self {
        Self::from_bigint(BigInt::from(v))
    }

    fn exact_div(&self, d: &Self) -> Option<Self>;

    fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base.clone();
            }
            k >>= 1;
            if k > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

impl Ring for BigInt {
    fn from_bigint(v: BigInt) -> Self {
        v
    }

    fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }
}

impl Ring for BigRational {
    fn from_bigint(v: BigInt) -> Self {
        BigRational::from_integer(v)
    }

    fn exact_div(&self, d: &Self) -> Option<Self> {
        (!d.is_zero()).then(|| self / d)
    }
}

/// Dense univariate polynomial `c[0] + c[1] X + ... + c[n] X^n`.
///
/// The coefficient vector never has trailing zeros, so the zero polynomial
/// is the empty vector and `deg` of a nonzero polynomial is `len - 1`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// `c X^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut v = vec![T::zero(); k + 1];
        v[k] = c;
        Poly::new(v)
    }

    /// The polynomial `X`.
    pub fn x() -> Self {
        Poly::monomial(T::one(), 1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `X^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeff_ref(&self, i: usize) -> Option<&T> {
        self.coeffs.get(i)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn lc(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    /// Lowest-index nonzero coefficient (zero for the zero polynomial).
    pub fn tcoeff(&self) -> T {
        self.coeffs.iter().find(|c| !c.is_zero()).cloned().unwrap_or_else(T::zero)
    }

    /// Index of the lowest nonzero coefficient.
    pub fn low_degree(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiply by `X^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![T::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    /// Divide every coefficient exactly by `c`.
    pub fn div_scalar(&self, c: &T) -> Option<Self> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.exact_div(c)?);
        }
        Some(Poly::new(out))
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a.clone() * T::from_i64(i as i64))
                .collect(),
        )
    }

    /// Taylor coefficient `f^[i] = f^(i) / i!`, which has coefficients
    /// `binom(j, i) a_j` and so stays in the ring.
    pub fn taylor_coefficient(&self, i: usize) -> Self {
        if i >= self.coeffs.len() {
            return Poly::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - i);
        let mut binom = BigInt::one();
        for j in i..self.coeffs.len() {
            if j > i {
                binom = binom * BigInt::from(j) / BigInt::from(j - i);
            }
            out.push(self.coeffs[j].clone() * T::from_bigint(binom.clone()));
        }
        Poly::new(out)
    }

    /// Horner evaluation inside the coefficient ring.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for a in self.coeffs.iter().rev() {
            acc = acc * x.clone() + a.clone();
        }
        acc
    }

    /// Pseudo-remainder: `lc(g)^(deg f - deg g + 1) f = q g + r`.
    pub fn prem(&self, g: &Poly<T>) -> Poly<T> {
        assert!(!g.is_zero(), "pseudo-remainder by zero");
        let dg = g.deg();
        if self.is_zero() || self.deg() < dg {
            return self.clone();
        }
        let b = g.lc();
        let mut e = self.deg() - dg + 1;
        let mut r = self.clone();
        while !r.is_zero() && r.deg() >= dg {
            let s = Poly::monomial(r.lc(), r.deg() - dg);
            r = r.scale(&b) - s * g.clone();
            e -= 1;
        }
        r.scale(&b.pow(e))
    }

    /// Exact quotient `self / g`, or `None` when `g` does not divide.
    pub fn exact_div_poly(&self, g: &Poly<T>) -> Option<Poly<T>> {
        if g.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let dg = g.deg();
        if self.deg() < dg {
            return None;
        }
        let b = g.lc();
        let mut r = self.coeffs.clone();
        let mut q = vec![T::zero(); self.deg() - dg + 1];
        for k in (0..q.len()).rev() {
            let top = r[k + dg].clone();
            if top.is_zero() {
                continue;
            }
            let c = top.exact_div(&b)?;
            for (j, gc) in g.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].clone() - c.clone() * gc.clone();
            }
            q[k] = c;
        }
        r.iter().all(|c| c.is_zero()).then(|| Poly::new(q))
    }

    /// Substitute `X -> -X`.
    pub fn reflect(&self) -> Poly<T> {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, a)| if i % 2 == 1 { -a.clone() } else { a.clone() })
                .collect(),
        )
    }

    /// `X^n f(1/X)`.
    pub fn reverse(&self) -> Poly<T> {
        let mut v = self.coeffs.clone();
        v.reverse();
        Poly::new(v)
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Ring> Zero for Poly<T> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Ring> One for Poly<T> {
    fn one() -> Self {
        Poly { coeffs: vec![T::one()] }
    }
}

impl<T: Ring> Add for Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: Poly<T>) -> Poly<T> {
        &self + &rhs
    }
}

impl<'a, T: Ring> Add<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.clone() + b.clone(),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Poly::new(v)
    }
}

impl<T: Ring> Sub for Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: Poly<T>) -> Poly<T> {
        &self - &rhs
    }
}

impl<'a, T: Ring> Sub<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        self + &(-rhs)
    }
}

impl<T: Ring> Mul for Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: Poly<T>) -> Poly<T> {
        &self * &rhs
    }
}

impl<'a, T: Ring> Mul<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(v)
    }
}

impl<T: Ring> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl<T: Ring> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly { coeffs: self.coeffs.iter().map(|a| -a.clone()).collect() }
    }
}

impl<T: Ring> Ring for Poly<T> {
    fn from_bigint(v: BigInt) -> Self {
        Poly::constant(T::from_bigint(v))
    }

    fn exact_div(&self, d: &Self) -> Option<Self> {
        self.exact_div_poly(d)
    }
}

impl<T: Debug> Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}
