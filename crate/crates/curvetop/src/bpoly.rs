//! Bivariate integer polynomials.
//!
//! An [`IntPoly2`] is stored as a polynomial in `Y` whose coefficients are
//! integer polynomials in `X`, i.e. `F = f_n(X) Y^n + ... + f_0(X)`. This is
//! the "Y-view"; the X-view is obtained with [`IntPoly2::transpose`].
//! Resultants in `Y` come for free from the generic subresultant code
//! running over the ring `Z[X]`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{ComplexInterval, ComplexRefinable, Dyadic, Gaussian, Interval, PRECISION_CAP};
use crate::upoly::{self, IntPoly, Poly};

/// Bivariate integer polynomial, `Y`-major.
pub type IntPoly2 = Poly<IntPoly>;

impl Poly<IntPoly> {
    /// Build from `(i, j, c)` triples meaning `c X^i Y^j`.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (usize, usize, C)>) -> IntPoly2 {
        let mut grid: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
        for (i, j, c) in terms {
            *grid.entry((j, i)).or_default() += c.into();
        }
        let ny = grid.keys().map(|k| k.0).max().unwrap_or(0);
        let mut rows: Vec<Vec<BigInt>> = vec![Vec::new(); ny + 1];
        for ((j, i), c) in grid {
            let row = &mut rows[j];
            if row.len() <= i {
                row.resize(i + 1, BigInt::zero());
            }
            row[i] += c;
        }
        Poly::new(rows.into_iter().map(Poly::new).collect())
    }

    /// Polynomial in `X` only.
    pub fn from_x(f: &IntPoly) -> IntPoly2 {
        Poly::constant(f.clone())
    }

    /// Polynomial in `Y` only.
    pub fn from_y(f: &IntPoly) -> IntPoly2 {
        Poly::new(f.coeffs().iter().map(|c| Poly::constant(c.clone())).collect())
    }

    /// Nonzero terms `(i, j, c)` for `c X^i Y^j`, sorted by `(j, i)`.
    pub fn terms(&self) -> Vec<(usize, usize, BigInt)> {
        let mut out = Vec::new();
        for (j, row) in self.coeffs().iter().enumerate() {
            for (i, c) in row.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    out.push((i, j, c.clone()));
                }
            }
        }
        out
    }

    /// Coefficient of `X^i Y^j`.
    pub fn coeff_xy(&self, i: usize, j: usize) -> BigInt {
        self.coeff_ref(j).map(|r| r.coeff(i)).unwrap_or_default()
    }

    pub fn deg_y(&self) -> usize {
        self.deg()
    }

    pub fn deg_x(&self) -> usize {
        self.coeffs().iter().map(|r| r.deg()).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> usize {
        self.terms().iter().map(|(i, j, _)| i + j).max().unwrap_or(0)
    }

    /// Coefficient bitsize bound.
    pub fn tau(&self) -> u64 {
        self.coeffs().iter().map(|r| r.tau()).max().unwrap_or(0)
    }

    /// Swap the roles of `X` and `Y`.
    pub fn transpose(&self) -> IntPoly2 {
        IntPoly2::from_terms(self.terms().into_iter().map(|(i, j, c)| (j, i, c)))
    }

    /// `f_l(X)`, the coefficient of `Y^l`.
    pub fn y_coeff(&self, l: usize) -> IntPoly {
        self.coeff(l)
    }

    /// Leading coefficient in `Y`, a polynomial in `X`.
    pub fn lc_y(&self) -> IntPoly {
        self.lc()
    }

    pub fn diff_y(&self) -> IntPoly2 {
        self.derivative()
    }

    pub fn diff_x(&self) -> IntPoly2 {
        Poly::new(self.coeffs().iter().map(|r| r.derivative()).collect())
    }

    /// Truncation `F_l = sum_{i <= l} f_i(X) Y^i`.
    pub fn truncate_y(&self, l: usize) -> IntPoly2 {
        Poly::new(self.coeffs().iter().take(l + 1).cloned().collect())
    }

    /// `Y`-Taylor coefficient `F^[k] = d^k F / dY^k / k!`.
    pub fn taylor_y(&self, k: usize) -> IntPoly2 {
        self.taylor_coefficient(k)
    }

    /// Gcd of the `Y`-coefficients: the product of vertical lines (plus integer content).
    pub fn content_y(&self) -> Result<IntPoly> {
        let mut g = IntPoly::zero();
        for r in self.coeffs().iter().filter(|r| !r.is_zero()) {
            g = upoly::gcd(&g, r)?;
            if g.deg() == 0 {
                break;
            }
        }
        let cont = self.coeffs().iter().fold(BigInt::zero(), |acc, r| num_integer::Integer::gcd(&acc, &r.content()));
        Ok(g.scale(&cont))
    }

    /// Gcd of the `X`-coefficients, a polynomial in `Y`.
    pub fn content_x(&self) -> Result<IntPoly> {
        self.transpose().content_y()
    }

    pub fn scale_x(&self, c: &IntPoly) -> IntPoly2 {
        self.scale(c)
    }

    /// Exact division by a polynomial in `X`.
    pub fn div_x(&self, c: &IntPoly) -> Result<IntPoly2> {
        self.div_scalar(c).ok_or(Error::NotDivisible)
    }

    /// Exact division by a polynomial in `Y`.
    pub fn div_y(&self, d: &IntPoly) -> Result<IntPoly2> {
        Ok(self.transpose().div_x(d)?.transpose())
    }

    /// `F(X + s Y, Y)`.
    pub fn shear(&self, s: i64) -> IntPoly2 {
        let mut out = IntPoly2::zero();
        // X -> X + sY as a bivariate polynomial.
        let xs: IntPoly2 = Poly::new(vec![IntPoly::from_i64s(&[0, 1]), IntPoly::from_i64s(&[s])]);
        for (j, row) in self.coeffs().iter().enumerate() {
            // Horner in the substituted X.
            let mut acc = IntPoly2::zero();
            for c in row.coeffs().iter().rev() {
                acc = &acc * &xs;
                acc = &acc + &IntPoly2::from_x(&Poly::constant(c.clone()));
            }
            out = &out + &acc.shift(j);
        }
        out
    }

    /// Exact value at a rational point.
    pub fn eval_exact(&self, x: &BigRational, y: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for r in self.coeffs().iter().rev() {
            acc = acc * y + r.eval_rational(x);
        }
        acc
    }

    /// `F(x, Y)` for rational `x`, as an integer polynomial with the same
    /// roots (denominators cleared).
    pub fn specialize_x(&self, x: &BigRational) -> IntPoly {
        let c: Vec<BigRational> = self.coeffs().iter().map(|r| r.eval_rational(x)).collect();
        upoly::clear_denominators(&c)
    }

    /// `F(X, y)` for rational `y`, denominators cleared.
    pub fn specialize_y(&self, y: &BigRational) -> IntPoly {
        self.transpose().specialize_x(y)
    }

    /// Enclosures of the `Y`-coefficients `f_l(z)` for `z` in a complex box.
    pub fn coeff_enclosures(&self, z: &ComplexInterval) -> Vec<ComplexInterval> {
        self.coeffs().iter().map(|r| r.eval_complex(z)).collect()
    }

    /// Enclosure of `F` over a product of complex boxes.
    pub fn eval_box(&self, z: &ComplexInterval, w: &ComplexInterval) -> ComplexInterval {
        let mut acc = ComplexInterval::from_int(0);
        for r in self.coeffs().iter().rev() {
            acc = &(&acc * w) + &r.eval_complex(z);
        }
        acc
    }

    /// Enclosure of `F` over a product of real intervals.
    pub fn eval_real_box(&self, x: &Interval, y: &Interval) -> Interval {
        let mut acc = Interval::from_int(0);
        for r in self.coeffs().iter().rev() {
            acc = &(&acc * y) + &r.eval_interval(x);
        }
        acc
    }

    pub fn resultant_y(&self, g: &IntPoly2) -> Result<IntPoly> {
        if self.is_zero() || g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(upoly::resultant(self, g))
    }

    pub fn resultant_x(&self, g: &IntPoly2) -> Result<IntPoly> {
        self.transpose().resultant_y(&g.transpose())
    }

    /// Principal subresultant coefficients in `Y`, polynomials in `X`.
    pub fn subresultants_y(&self, g: &IntPoly2) -> Result<Vec<IntPoly>> {
        if self.is_zero() || g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(upoly::principal_subresultants(self, g))
    }

    /// `Disc_Y(F)` with `lc_Y(F) Disc_Y(F) = Res_Y(F, dF/dY)`.
    pub fn disc_y(&self) -> IntPoly {
        if self.deg_y() == 0 {
            return IntPoly::one();
        }
        upoly::discriminant(self)
    }

    pub fn disc_x(&self) -> IntPoly {
        self.transpose().disc_y()
    }

    /// Subdiscriminants in `Y`, polynomials in `X`.
    pub fn subdiscriminants_y(&self) -> Vec<IntPoly> {
        upoly::subdiscriminants(self)
    }
}

/// An approximation `g` with `|F(z, w) - g| < 2^-l` (real and imaginary
/// parts each), found by shrinking the input enclosures until the interval
/// evaluation is thin enough.
pub fn eval_enclose(
    f: &IntPoly2,
    z: &mut dyn ComplexRefinable,
    w: &mut dyn ComplexRefinable,
    l: i64,
) -> Result<Gaussian> {
    let mut prec = l.max(8) + 8;
    loop {
        let zb = z.enclose_complex(prec)?;
        let wb = w.enclose_complex(prec)?;
        let v = f.eval_box(&zb, &wb);
        if v.width() < Dyadic::pow2(-l) {
            return Ok(v.mid());
        }
        prec *= 2;
        if prec > PRECISION_CAP {
            return Err(Error::Budget("bivariate evaluation".into()));
        }
    }
}

impl fmt::Display for Poly<IntPoly> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        terms.sort_by_key(|t| std::cmp::Reverse((t.0 + t.1, t.1)));
        for (k, (i, j, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !mag.is_one() || (*i == 0 && *j == 0) {
                parts.push(mag.to_string());
            }
            match i {
                0 => {}
                1 => parts.push("x".into()),
                _ => parts.push(format!("x^{i}")),
            }
            match j {
                0 => {}
                1 => parts.push("y".into()),
                _ => parts.push(format!("y^{j}")),
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    fn circle() -> IntPoly2 {
        IntPoly2::from_terms([(2, 0, 1), (0, 2, 1), (0, 0, -1)])
    }

    #[test]
    fn resultants_in_y() {
        let dy = circle().diff_y();
        assert_eq!(circle().resultant_y(&dy).unwrap(), IntPoly::from_i64s(&[-4, 0, 4]));
        let f = IntPoly2::from_terms([(1, 1, 1), (0, 0, -1)]);
        let g = IntPoly2::from_terms([(1, 0, 1)]);
        assert_eq!(f.resultant_y(&g).unwrap(), IntPoly::from_i64s(&[0, 1]));
    }

    #[test]
    fn exact_evaluation() {
        let f = IntPoly2::from_terms([(1, 1, 1), (0, 0, -1)]);
        assert_eq!(f.eval_exact(&q(1, 1), &q(1, 1)), q(0, 1));
        assert_eq!(circle().eval_exact(&q(0, 1), &q(1, 2)), q(-3, 4));
        let g = IntPoly2::from_terms([(0, 2, 4), (1, 0, -4), (0, 0, -1)]);
        assert_eq!(g.eval_exact(&q(-1, 4), &q(0, 1)), q(0, 1));
    }

    #[test]
    fn transpose_round_trip_and_shear() {
        let f = IntPoly2::from_terms([(3, 1, 2), (0, 2, -5), (1, 0, 7)]);
        assert_eq!(f.transpose().transpose(), f);
        assert_eq!(f.truncate_y(f.deg_y()), f);
        // (x + y) - y = x
        let g = IntPoly2::from_terms([(1, 0, 1)]).shear(1);
        assert_eq!(g, IntPoly2::from_terms([(1, 0, 1), (0, 1, 1)]));
    }

    #[test]
    fn contents() {
        // X Y^2 - X^2 = X (Y^2 - X)
        let p = IntPoly2::from_terms([(1, 2, 1), (2, 0, -1)]);
        assert_eq!(p.content_y().unwrap(), IntPoly::from_i64s(&[0, 1]));
        let d = IntPoly2::from_terms([(1, 1, 1), (0, 1, 1)]);
        assert_eq!(d.content_x().unwrap(), IntPoly::from_i64s(&[0, 1]));
    }

    #[test]
    fn content_skips_zero_coefficients() {
        let p = IntPoly2::from_terms([(0usize, 1usize, 1i64)]);
        assert_eq!(p.content_y().unwrap(), IntPoly::one());
        assert_eq!(p.content_x().unwrap(), IntPoly::from_i64s(&[0, 1]));
    }

    #[test]
    fn enclosure_at_exact_points() {
        let f = IntPoly2::from_terms([(1, 1, 1)]);
        let v = eval_enclose(&f, &mut Dyadic::from(2), &mut Dyadic::from(3), 20).unwrap();
        assert_eq!(v, Gaussian::real(Dyadic::from(6)));
    }

    #[test]
    fn display() {
        assert_eq!(circle().to_string(), "y^2 + x^2 - 1");
    }
}
