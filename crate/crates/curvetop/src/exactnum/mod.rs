//! Exact numbers: dyadics, rationals, intervals and complex enclosures.
//!
//! Everything that needs refinement is exposed through [`Refinable`], which
//! hands out enclosures of a requested width on demand.

mod complex;
mod dyadic;
mod interval;

pub use complex::{ComplexInterval, Disk, Gaussian};
pub use dyadic::Dyadic;
pub use interval::Interval;

use num_rational::BigRational;

use crate::error::{Error, Result};

/// Exact rational numbers.
pub type Rational = BigRational;

/// Hard cap on requested precision; reaching it means an adaptive loop is
/// not converging, which is a bug rather than a property of the input.
pub const PRECISION_CAP: i64 = 1 << 16;

/// A real number that can be enclosed in arbitrarily thin intervals.
pub trait Refinable {
    /// An enclosure of width at most `2^-prec`.
    fn enclose(&mut self, prec: i64) -> Result<Interval>;
}

impl Refinable for Dyadic {
    fn enclose(&mut self, _prec: i64) -> Result<Interval> {
        Ok(Interval::point(self.clone()))
    }
}

impl Refinable for Rational {
    fn enclose(&mut self, prec: i64) -> Result<Interval> {
        Ok(Interval::from_rational(self, prec))
    }
}

/// A complex number that can be enclosed in arbitrarily small boxes.
pub trait ComplexRefinable {
    /// A box whose sides are at most `2^-prec` long.
    fn enclose_complex(&mut self, prec: i64) -> Result<ComplexInterval>;
}

impl<R: Refinable> ComplexRefinable for R {
    fn enclose_complex(&mut self, prec: i64) -> Result<ComplexInterval> {
        Ok(ComplexInterval::real(self.enclose(prec)?))
    }
}

/// A dyadic `d` with `|x - d| < 2^-l`.
///
/// The result is actually within `2^-(l+2)`, so consecutive calls with
/// `l` and `l + 1` land within `2^-l` of each other.
pub fn approx_abs<R: Refinable + ?Sized>(x: &mut R, l: i64) -> Result<Dyadic> {
    if l > PRECISION_CAP {
        return Err(Error::Budget(format!("approximation to {l} bits")));
    }
    let iv = x.enclose(l + 1)?;
    if iv.width() > Dyadic::pow2(-(l + 1)) {
        return Err(Error::Certification("refinable returned an enclosure wider than requested".into()));
    }
    Ok(iv.mid())
}
