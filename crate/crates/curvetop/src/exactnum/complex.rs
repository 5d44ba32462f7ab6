use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Dyadic, Interval};

/// A Gaussian dyadic `re + i*im`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gaussian {
    pub re: Dyadic,
    pub im: Dyadic,
}

impl Gaussian {
    pub fn new(re: Dyadic, im: Dyadic) -> Self {
        Gaussian { re, im }
    }

    pub fn real(re: Dyadic) -> Self {
        Gaussian { re, im: Dyadic::zero() }
    }

    pub fn zero() -> Self {
        Gaussian::real(Dyadic::zero())
    }

    pub fn norm_sq(&self) -> Dyadic {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> Gaussian {
        Gaussian { re: self.re.clone(), im: -&self.im }
    }

    /// Lower and upper bounds on `|self|` on the grid `2^-prec`.
    pub fn abs_bounds(&self, prec: i64) -> (Dyadic, Dyadic) {
        let n = self.norm_sq();
        (n.sqrt_floor(prec), n.sqrt_ceil(prec))
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl<'a> Add<&'a Gaussian> for &'a Gaussian {
    type Output = Gaussian;
    fn add(self, rhs: &Gaussian) -> Gaussian {
        Gaussian { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'a> Sub<&'a Gaussian> for &'a Gaussian {
    type Output = Gaussian;
    fn sub(self, rhs: &Gaussian) -> Gaussian {
        Gaussian { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'a> Mul<&'a Gaussian> for &'a Gaussian {
    type Output = Gaussian;
    fn mul(self, rhs: &Gaussian) -> Gaussian {
        Gaussian {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl fmt::Debug for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} + {:?}i)", self.re, self.im)
    }
}

/// Closed disk `{z : |z - center| <= radius}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Disk {
    pub center: Gaussian,
    pub radius: Dyadic,
}

impl Disk {
    pub fn new(center: Gaussian, radius: Dyadic) -> Self {
        assert!(radius.signum() >= 0, "negative disk radius");
        Disk { center, radius }
    }

    /// Exact membership test.
    pub fn contains(&self, z: &Gaussian) -> bool {
        (z - &self.center).norm_sq() <= &self.radius * &self.radius
    }

    /// Exact test whether the disk meets the real axis.
    pub fn meets_real_axis(&self) -> bool {
        self.center.im.abs() <= self.radius
    }

    /// Exact test whether two closed disks intersect.
    pub fn meets(&self, other: &Disk) -> bool {
        let r = &self.radius + &other.radius;
        (&self.center - &other.center).norm_sq() <= &r * &r
    }

    /// Exact test whether `other` lies inside `self`.
    pub fn contains_disk(&self, other: &Disk) -> bool {
        if other.radius > self.radius {
            return false;
        }
        let r = &self.radius - &other.radius;
        (&self.center - &other.center).norm_sq() <= &r * &r
    }

    /// Lower bound on the distance between points of the two disks
    /// (negative when they may overlap).
    pub fn gap_lower(&self, other: &Disk, prec: i64) -> Dyadic {
        let (d, _) = (&self.center - &other.center).abs_bounds(prec);
        d - &self.radius - &other.radius
    }

    /// Enclosing box.
    pub fn to_box(&self) -> ComplexInterval {
        ComplexInterval {
            re: Interval::new(&self.center.re - &self.radius, &self.center.re + &self.radius),
            im: Interval::new(&self.center.im - &self.radius, &self.center.im + &self.radius),
        }
    }

    pub fn real_interval(&self) -> Interval {
        Interval::new(&self.center.re - &self.radius, &self.center.re + &self.radius)
    }
}

impl fmt::Debug for Disk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D({:?}, r={:?})", self.center, self.radius)
    }
}

/// Rectangular complex enclosure `re + i*im`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ComplexInterval {
    pub re: Interval,
    pub im: Interval,
}

impl ComplexInterval {
    pub fn new(re: Interval, im: Interval) -> Self {
        ComplexInterval { re, im }
    }

    pub fn real(re: Interval) -> Self {
        ComplexInterval { re, im: Interval::from_int(0) }
    }

    pub fn point(z: &Gaussian) -> Self {
        ComplexInterval { re: Interval::point(z.re.clone()), im: Interval::point(z.im.clone()) }
    }

    pub fn from_int(v: i64) -> Self {
        ComplexInterval::real(Interval::from_int(v))
    }

    pub fn is_real_point_zero(&self) -> bool {
        self.re.lo.is_zero() && self.re.hi.is_zero() && self.im.lo.is_zero() && self.im.hi.is_zero()
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn mid(&self) -> Gaussian {
        Gaussian { re: self.re.mid(), im: self.im.mid() }
    }

    /// Larger of the two side lengths.
    pub fn width(&self) -> Dyadic {
        self.re.width().max(self.im.width())
    }

    /// Enclosure of `|z|^2`.
    pub fn norm_sq(&self) -> Interval {
        &self.re.square() + &self.im.square()
    }

    /// Lower bound on `|z|` on the grid `2^-prec`.
    pub fn abs_lower(&self, prec: i64) -> Dyadic {
        self.norm_sq().lo.sqrt_floor(prec)
    }

    /// Upper bound on `|z|` on the grid `2^-prec`.
    pub fn abs_upper(&self, prec: i64) -> Dyadic {
        self.norm_sq().hi.sqrt_ceil(prec)
    }

    pub fn round_out(&self, prec: i64) -> ComplexInterval {
        ComplexInterval { re: self.re.round_out(prec), im: self.im.round_out(prec) }
    }

    pub fn round_rel(&self, bits: u64) -> ComplexInterval {
        let m = self.re.mag().max(self.im.mag());
        if m.is_zero() {
            return self.clone();
        }
        self.round_out(bits as i64 - m.magnitude_exp())
    }

    pub fn scale_pow2(&self, k: i64) -> ComplexInterval {
        ComplexInterval { re: self.re.scale_pow2(k), im: self.im.scale_pow2(k) }
    }

    pub fn scale_real(&self, s: &Interval) -> ComplexInterval {
        ComplexInterval { re: &self.re * s, im: &self.im * s }
    }

    /// Enclosing disk centred at the box midpoint.
    pub fn to_disk(&self) -> Disk {
        let c = self.mid();
        let hw = (self.re.width().max(self.im.width())).half();
        // radius >= half-diagonal; sqrt(2) < 3/2.
        let r = &hw * &Dyadic::new(3.into(), -1);
        Disk::new(c, r)
    }
}

impl<'a> Add<&'a ComplexInterval> for &'a ComplexInterval {
    type Output = ComplexInterval;
    fn add(self, rhs: &ComplexInterval) -> ComplexInterval {
        ComplexInterval { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'a> Sub<&'a ComplexInterval> for &'a ComplexInterval {
    type Output = ComplexInterval;
    fn sub(self, rhs: &ComplexInterval) -> ComplexInterval {
        ComplexInterval { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'a> Mul<&'a ComplexInterval> for &'a ComplexInterval {
    type Output = ComplexInterval;
    fn mul(self, rhs: &ComplexInterval) -> ComplexInterval {
        let im_zero = |z: &ComplexInterval| z.im.lo.is_zero() && z.im.hi.is_zero();
        if im_zero(self) && im_zero(rhs) {
            return ComplexInterval::real(&self.re * &rhs.re);
        }
        ComplexInterval {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}

impl Neg for &ComplexInterval {
    type Output = ComplexInterval;
    fn neg(self) -> ComplexInterval {
        ComplexInterval { re: -&self.re, im: -&self.im }
    }
}

impl fmt::Debug for ComplexInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} + {:?}i", self.re, self.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disk_membership_is_exact() {
        let d = Disk::new(Gaussian::zero(), Dyadic::from(1));
        assert!(d.contains(&Gaussian::new(Dyadic::from(1), Dyadic::zero())));
        assert!(!d.contains(&Gaussian::new(Dyadic::from(1), Dyadic::pow2(-40))));
        assert!(d.meets_real_axis());
    }

    #[test]
    fn complex_interval_product() {
        let i = ComplexInterval::new(Interval::from_int(0), Interval::from_int(1));
        let p = &i * &i;
        assert_eq!(p, ComplexInterval::from_int(-1));
    }
}
