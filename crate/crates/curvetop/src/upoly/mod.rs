//! Univariate polynomial algebra.
//!
//! [`Poly`] is generic over an exact-division [`Ring`], so the same
//! subresultant code runs over the integers and over `Z[X]` (the latter is
//! how bivariate resultants are computed). Integer-specific tools (gcd,
//! square-free decomposition, bounds) live on [`IntPoly`].

mod intpoly;
mod poly;
mod subres;

pub use intpoly::{
    cauchy_bound, clear_denominators, exact_div, gcd, scale_roots_down, scale_roots_up, square_free_decomposition,
    square_free_part, taylor_coefficient, taylor_shift, IntPoly, PolyMetrics,
};
pub use poly::{Poly, Ring};
pub use subres::{
    discriminant, first_nonzero, generalized_discriminant_resultant, principal_subresultants, resultant,
    subdiscriminants, subresultant_polys,
};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::error::{Error, Result};

/// Polynomial with rational coefficients.
pub type RatPoly = Poly<BigRational>;

/// Resultant, subresultant and discriminant data for a pair `(f, g)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SubresultantData {
    /// Principal subresultant coefficients `sr_0 ..= sr_min(deg f, deg g)`.
    pub sr: Vec<BigInt>,
    /// Subdiscriminants of `f`.
    pub sdisc: Vec<BigInt>,
    pub res: BigInt,
    pub disc: BigInt,
}

/// Subresultant data of `(f, g)` together with the subdiscriminants of `f`.
pub fn subresultants(f: &IntPoly, g: &IntPoly) -> Result<SubresultantData> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sr = principal_subresultants(f, g);
    let (sdisc, disc) = if f.deg() >= 1 {
        (subdiscriminants(f), discriminant(f))
    } else {
        (Vec::new(), BigInt::from(1))
    };
    Ok(SubresultantData { res: sr[0].clone(), sr, sdisc, disc })
}

/// `|GDisc(f)| = |tcoeff_U Res_X(f, sum_k U^(k-1) f^[k])| / |lc(f)|`.
pub fn gdisc_abs(f: &IntPoly) -> Result<BigRational> {
    if f.deg() < 1 {
        return Err(Error::ZeroPolynomial);
    }
    let r = generalized_discriminant_resultant(f);
    Ok(BigRational::new(r.tcoeff().abs(), f.lc().abs()))
}

/// Number of distinct complex roots, read off the first nonzero subdiscriminant.
pub fn distinct_root_count(f: &IntPoly) -> usize {
    if f.deg() == 0 {
        return 0;
    }
    let s = subdiscriminants(f);
    f.deg() - first_nonzero(&s).expect("sDisc_{n-1} = n is never zero")
}
