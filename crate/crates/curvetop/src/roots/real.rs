//! Real roots of integer polynomials by Descartes' rule of signs.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{Dyadic, Interval, Refinable, PRECISION_CAP};
use crate::upoly::{self, IntPoly};

/// A real root of an integer polynomial.
///
/// `poly` is the primitive square-free factor the root belongs to and
/// `interval` contains exactly one of its roots. Either the interval is a
/// single point (the root is that dyadic) or its endpoints are not roots,
/// so `poly` changes sign across it. `multiplicity` is relative to the
/// polynomial the root was isolated from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealRoot {
    pub poly: IntPoly,
    pub interval: Interval,
    pub multiplicity: usize,
}

impl RealRoot {
    pub fn exact(poly: IntPoly, value: Dyadic, multiplicity: usize) -> Self {
        RealRoot { poly, interval: Interval::point(value), multiplicity }
    }

    pub fn lo(&self) -> &Dyadic {
        &self.interval.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.interval.hi
    }

    pub fn width(&self) -> Dyadic {
        self.interval.width()
    }

    /// The exact value when the defining factor is linear.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.poly.deg() == 1 {
            let c = self.poly.coeffs();
            Some(BigRational::new(-c[0].clone(), c[1].clone()))
        } else if self.interval.is_point() {
            Some(self.interval.lo.to_rational())
        } else {
            None
        }
    }

    /// One bisection step.
    pub fn bisect(&mut self) {
        if self.interval.is_point() {
            return;
        }
        let m = self.interval.mid();
        let sm = self.poly.sign_at(&m);
        if sm == 0 {
            self.interval = Interval::point(m);
            return;
        }
        let slo = self.poly.sign_at(&self.interval.lo);
        if sm == slo {
            self.interval.lo = m;
        } else {
            self.interval.hi = m;
        }
    }

    /// Shrink the interval to width at most `2^-prec`.
    ///
    /// Bisection is combined with a secant guess: when the guess brackets
    /// the root in a slice much smaller than half the interval, that slice
    /// is taken instead, which gives fast convergence near simple roots.
    pub fn refine_to(&mut self, prec: i64) {
        let target = Dyadic::pow2(-prec);
        if let Some(r) = self.as_rational() {
            if self.interval.width() > target {
                let enc = Interval::from_rational(&r, prec);
                // Keep the enclosure inside the isolating interval.
                self.interval = Interval::new(
                    enc.lo.max(self.interval.lo.clone()),
                    enc.hi.min(self.interval.hi.clone()),
                );
            }
            return;
        }
        let mut slices: u32 = 4;
        while self.interval.width() > target {
            if !self.try_secant(slices) {
                self.bisect();
                slices = (slices / 2).max(4);
            } else {
                slices = slices.saturating_mul(2).min(1 << 20);
            }
        }
    }

    fn try_secant(&mut self, slices: u32) -> bool {
        let (lo, hi) = (&self.interval.lo, &self.interval.hi);
        let flo = self.poly.eval_dyadic(lo);
        let fhi = self.poly.eval_dyadic(hi);
        let den = &fhi - &flo;
        if den.is_zero() {
            return false;
        }
        let w = self.interval.width();
        // Slice width as a power of two not exceeding w / slices.
        let slice_exp = w.magnitude_exp() - 1 - (32 - slices.leading_zeros()) as i64;
        let slice = Dyadic::pow2(slice_exp);
        // guess = lo - flo * w / den, snapped to the slice grid.
        let t = Dyadic::div_floor(&(&flo * &w), &den, -slice_exp + 4);
        let guess = (lo - &t).floor_to(-slice_exp);
        let a = (&guess - &slice).max(lo.clone());
        let b = (&guess + &slice + &slice).min(hi.clone());
        if a >= b {
            return false;
        }
        let sa = self.poly.sign_at(&a);
        let sb = self.poly.sign_at(&b);
        if sa == 0 {
            self.interval = Interval::point(a);
            return true;
        }
        if sb == 0 {
            self.interval = Interval::point(b);
            return true;
        }
        if sa != sb && (&b - &a) < w.half() {
            self.interval = Interval::new(a, b);
            return true;
        }
        false
    }

    /// Exact comparison with another real algebraic number.
    pub fn compare(&mut self, other: &mut RealRoot) -> Ordering {
        let h = upoly::gcd(&self.poly, &other.poly).expect("nonzero polys");
        if h.deg() > 0 && root_of(&h, self) && root_of(&h, other) {
            let mut common = isolate_real_roots(&h).expect("nonzero");
            let i = locate(self, &mut common);
            let j = locate(other, &mut common);
            if i == j {
                return Ordering::Equal;
            }
            return i.cmp(&j);
        }
        let mut prec = 4;
        loop {
            if self.interval.hi < other.interval.lo {
                return Ordering::Less;
            }
            if other.interval.hi < self.interval.lo {
                return Ordering::Greater;
            }
            prec += 4;
            self.refine_to(prec);
            other.refine_to(prec);
        }
    }
}

/// Index of the root in `roots` (sorted, disjoint) equal to `r`, knowing
/// that `r` is one of them.
pub fn locate(r: &mut RealRoot, roots: &mut [RealRoot]) -> usize {
    let mut prec = 2;
    loop {
        let hits: Vec<usize> = (0..roots.len()).filter(|&k| roots[k].interval.overlaps(&r.interval)).collect();
        if hits.len() == 1 {
            return hits[0];
        }
        assert!(!hits.is_empty(), "root not among the candidates");
        prec += 4;
        r.refine_to(prec);
        for &k in &hits {
            roots[k].refine_to(prec);
        }
    }
}

/// Whether `r` is a root of `g`, decided exactly.
pub fn root_of(g: &IntPoly, r: &RealRoot) -> bool {
    if g.is_zero() {
        return true;
    }
    let h = match upoly::gcd(g, &r.poly) {
        Ok(h) => h,
        Err(_) => return false,
    };
    if h.deg() == 0 {
        return false;
    }
    if r.interval.is_point() {
        return h.sign_at(&r.interval.lo) == 0;
    }
    // h divides the square-free poly; r is a root of h iff h changes sign
    // across the isolating interval (endpoints are not roots of poly).
    h.sign_at(&r.interval.lo) != h.sign_at(&r.interval.hi)
}

/// Number of real roots of a square-free `f` in the open interval.
pub fn count_in_open(f: &IntPoly, iv: &Interval) -> usize {
    if iv.is_point() {
        return 0;
    }
    isolate_sqfree_in(f, iv).len()
}

/// Isolate the real roots of a nonzero integer polynomial, with multiplicities.
pub fn isolate_real_roots(f: &IntPoly) -> Result<Vec<RealRoot>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    for (g, mult) in upoly::square_free_decomposition(f)? {
        for iv in isolate_sqfree(&g) {
            out.push(RealRoot { poly: g.clone(), interval: iv, multiplicity: mult });
        }
    }
    sort_disjoint(&mut out);
    Ok(out)
}

/// Refine until the intervals are pairwise disjoint, then sort them.
///
/// The roots must be distinct.
pub fn sort_disjoint(roots: &mut [RealRoot]) {
    let mut prec = 0i64;
    loop {
        roots.sort_by(|a, b| a.interval.lo.cmp(&b.interval.lo).then(a.interval.hi.cmp(&b.interval.hi)));
        let mut clash = false;
        for i in 1..roots.len() {
            if roots[i].interval.lo <= roots[i - 1].interval.hi {
                clash = true;
                let w = roots[i].width().max(roots[i - 1].width());
                prec = prec.max(-w.magnitude_exp() + 2);
                roots[i].refine_to(prec);
                roots[i - 1].refine_to(prec);
            }
        }
        if !clash {
            return;
        }
        assert!(prec < PRECISION_CAP, "distinct roots failed to separate");
    }
}

/// Isolating intervals for the real roots of a square-free polynomial.
pub fn isolate_sqfree(f: &IntPoly) -> Vec<Interval> {
    if f.deg() == 0 {
        return Vec::new();
    }
    // Power of two strictly above every root modulus.
    let c = upoly::cauchy_bound(f).expect("nonzero");
    let e = bits_above(&c);
    let b = Dyadic::pow2(e);
    let mut out = Vec::new();
    let mut g = f.clone();
    if g.coeff(0).is_zero() {
        out.push(Interval::point(Dyadic::zero()));
        g = g.exact_div_poly(&IntPoly::x()).expect("X divides f");
    }
    // Negative roots as positive roots of f(-X).
    let neg = isolate_sqfree_in(&g.reflect(), &Interval::new(Dyadic::zero(), b.clone()));
    for iv in neg.into_iter().rev() {
        out.push(Interval::new(-&iv.hi, -&iv.lo));
    }
    out.extend(isolate_sqfree_in(&g, &Interval::new(Dyadic::zero(), b)));
    // Intervals from `g` may end at the root 0 of `f`.
    out.into_iter().map(|iv| if iv.is_point() { iv } else { tighten(f, iv) }).collect()
}

/// Smallest `e` with `2^e > r` (for `r > 0`).
pub fn bits_above(r: &BigRational) -> i64 {
    let mut e: i64 = (r.numer().bits() as i64) - (r.denom().bits() as i64) - 1;
    while Dyadic::pow2(e).to_rational() <= *r {
        e += 1;
    }
    e
}

/// Roots of a square-free `f` inside the open interval `iv` (whose
/// endpoints are assumed not to be roots, or are excluded anyway).
pub fn isolate_sqfree_in(f: &IntPoly, iv: &Interval) -> Vec<Interval> {
    let mut out = Vec::new();
    if f.deg() == 0 || iv.is_point() {
        return out;
    }
    // g(x) = f(lo + w x) scaled to integers; roots in (0, 1).
    let g = affine_to_unit(f, &iv.lo, &iv.width());
    let mut stack: Vec<(IntPoly, BigInt, u64)> = vec![(g, BigInt::zero(), 0)];
    while let Some((g, c, k)) = stack.pop() {
        let v = descartes_unit(&g);
        if v == 0 {
            continue;
        }
        let to_iv = |c: &BigInt, k: u64| {
            let a = &iv.lo + &(&iv.width() * &Dyadic::new(c.clone(), -(k as i64)));
            let b = &iv.lo + &(&iv.width() * &Dyadic::new(c + BigInt::one(), -(k as i64)));
            Interval::new(a, b)
        };
        if v == 1 {
            out.push(tighten(f, to_iv(&c, k)));
            continue;
        }
        // Left half: 2^n g(x / 2); right half: left shifted by one.
        let left = upoly::scale_roots_up(&g, 1).primitive_part();
        let right = upoly::taylor_shift(&left, &BigInt::one()).primitive_part();
        if right.coeff(0).is_zero() {
            // The midpoint is a root.
            let cc = &c * 2 + 1;
            let mid = to_iv(&cc, k + 1).lo;
            out.push(Interval::point(mid));
            let right = right.exact_div_poly(&IntPoly::x()).expect("X divides");
            stack.push((right, &c * 2 + 1, k + 1));
        } else {
            stack.push((right, &c * 2 + 1, k + 1));
        }
        stack.push((left, c * 2, k + 1));
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

/// Shrink an interval holding exactly one simple root of `f` until neither
/// endpoint is a root. An endpoint can be a root when an earlier bisection
/// hit one exactly; just inside it `f` has the sign of `f'` there.
fn tighten(f: &IntPoly, mut iv: Interval) -> Interval {
    let (mut sa, mut sb) = (f.sign_at(&iv.lo), f.sign_at(&iv.hi));
    if sa != 0 && sb != 0 {
        return iv;
    }
    let df = f.derivative();
    let ea = if sa == 0 { df.sign_at(&iv.lo) } else { sa };
    let eb = if sb == 0 { -df.sign_at(&iv.hi) } else { sb };
    while sa == 0 || sb == 0 {
        let m = iv.mid();
        let sm = f.sign_at(&m);
        if sm == 0 {
            return Interval::point(m);
        }
        if sm == ea {
            iv.lo = m;
            sa = sm;
        } else {
            debug_assert_eq!(sm, eb);
            iv.hi = m;
            sb = sm;
        }
    }
    iv
}

/// `f(a + w X)` with denominators cleared (same roots, integer coefficients).
fn affine_to_unit(f: &IntPoly, a: &Dyadic, w: &Dyadic) -> IntPoly {
    // Substitute X -> a + w X exactly in dyadics, then scale to integers.
    let n = f.deg();
    let mut acc: Vec<Dyadic> = vec![Dyadic::zero(); n + 1];
    // Horner: acc = acc * (a + w X) + c
    for c in f.coeffs().iter().rev() {
        let mut next = vec![Dyadic::zero(); n + 1];
        for (i, v) in acc.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            next[i] = &next[i] + &(v * a);
            if i < n {
                next[i + 1] = &next[i + 1] + &(v * w);
            }
        }
        next[0] = &next[0] + &Dyadic::from(c.clone());
        acc = next;
    }
    let min_e = acc.iter().filter(|d| !d.is_zero()).map(|d| d.exponent()).min().unwrap_or(0);
    IntPoly::new(
        acc.iter()
            .map(|d| if d.is_zero() { BigInt::zero() } else { d.mantissa() << (d.exponent() - min_e) as usize })
            .collect(),
    )
    .primitive_part()
}

/// Descartes bound for roots in `(0, 1)`: sign variations of
/// `(X + 1)^n g(1 / (X + 1))`.
fn descartes_unit(g: &IntPoly) -> usize {
    let t = upoly::taylor_shift(&g.reverse(), &BigInt::one());
    sign_variations(t.coeffs())
}

fn sign_variations(c: &[BigInt]) -> usize {
    let mut last = 0;
    let mut v = 0;
    for x in c {
        let s = if x.is_positive() {
            1
        } else if x.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
    }
    v
}

impl Refinable for RealRoot {
    fn enclose(&mut self, prec: i64) -> Result<Interval> {
        if prec > PRECISION_CAP {
            return Err(Error::Budget("real root refinement".into()));
        }
        self.refine_to(prec);
        Ok(self.interval.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn sqrt_two() {
        let r = isolate_real_roots(&p(&[-2, 0, 1])).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r[0].interval.lo >= Dyadic::from(-2) && r[0].interval.hi <= Dyadic::from(-1));
        assert!(r[1].interval.lo >= Dyadic::from(1) && r[1].interval.hi <= Dyadic::from(2));
        assert!(r.iter().all(|x| x.multiplicity == 1));
    }

    #[test]
    fn multiplicities() {
        let r = isolate_real_roots(&p(&[2, -3, 0, 1])).unwrap();
        assert_eq!(r.len(), 2);
        assert_eq!(r[0].as_rational(), Some(BigRational::from_integer((-2).into())));
        assert_eq!(r[0].multiplicity, 1);
        assert_eq!(r[1].as_rational(), Some(BigRational::from_integer(1.into())));
        assert_eq!(r[1].multiplicity, 2);
    }

    #[test]
    fn no_real_roots() {
        assert!(isolate_real_roots(&p(&[1, 0, 1])).unwrap().is_empty());
    }

    #[test]
    fn refinement_width() {
        let mut r = isolate_real_roots(&p(&[-2, 0, 1])).unwrap().pop().unwrap();
        r.refine_to(20);
        assert!(r.width() <= Dyadic::pow2(-20));
        assert_eq!(r.poly.sign_at(&r.interval.lo), -1);
        assert_eq!(r.poly.sign_at(&r.interval.hi), 1);
        r.refine_to(200);
        assert!(r.width() <= Dyadic::pow2(-200));
    }

    #[test]
    fn dyadic_roots_found_exactly() {
        // (2X - 1)(4X + 3)(X - 5)
        let f = &(&p(&[-1, 2]) * &p(&[3, 4])) * &p(&[-5, 1]);
        let r = isolate_real_roots(&f).unwrap();
        assert_eq!(r.len(), 3);
        let want = [Dyadic::new((-3).into(), -2), Dyadic::new(1.into(), -1), Dyadic::from(5)];
        for (mut x, w) in r.into_iter().zip(want) {
            x.refine_to(80);
            assert!(x.interval.contains(&w));
        }
    }

    #[test]
    fn close_roots() {
        // (X - 1)(X - 1 - 2^-10) scaled: (X - 1)(1024 X - 1025)
        let f = &p(&[-1, 1]) * &p(&[-1025, 1024]);
        let r = isolate_real_roots(&f).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r[0].interval.hi < r[1].interval.lo);
    }

    #[test]
    fn comparison() {
        let mut a = isolate_real_roots(&p(&[-2, 0, 1])).unwrap().pop().unwrap();
        let mut b = isolate_real_roots(&p(&[0, -2, 0, 1])).unwrap().pop().unwrap();
        assert_eq!(a.compare(&mut b), Ordering::Equal);
        let mut c = isolate_real_roots(&p(&[-3, 0, 1])).unwrap().pop().unwrap();
        assert_eq!(a.compare(&mut c), Ordering::Less);
    }
}
