//! Root isolation: real roots by Descartes bisection, complex roots and
//! root clusters by certified Aberth iteration.

pub mod cluster;
mod complex;
mod real;

pub use cluster::{Cluster, ClusterEngine, CoefficientOracle, ExactCoefficients};
pub use complex::{isolate_complex_roots, make_well_isolating, ComplexRoot};
pub use real::{
    bits_above, count_in_open, isolate_real_roots, isolate_sqfree, isolate_sqfree_in, locate, root_of, sort_disjoint,
    RealRoot,
};

use num_traits::Signed;

use crate::error::Result;
use crate::exactnum::{ComplexInterval, ComplexRefinable, Dyadic};
use crate::upoly::IntPoly;

/// A real or complex algebraic number with on-demand refinement.
#[derive(Clone, Debug)]
pub enum AlgebraicNumber {
    Real(RealRoot),
    Complex(ComplexRoot),
}

impl ComplexRefinable for AlgebraicNumber {
    fn enclose_complex(&mut self, prec: i64) -> Result<ComplexInterval> {
        match self {
            AlgebraicNumber::Real(r) => r.enclose_complex(prec),
            AlgebraicNumber::Complex(z) => z.enclose_complex(prec),
        }
    }
}

/// Refine an algebraic number to an enclosure of width at most `2^-l`.
pub fn refine(a: &mut AlgebraicNumber, l: i64) -> Result<ComplexInterval> {
    a.enclose_complex(l)
}

/// For each real root of `f`, the exact signs of every `g` in `gs` there.
pub fn identify_and_sign(f: &IntPoly, gs: &[IntPoly]) -> Result<Vec<(RealRoot, Vec<i32>)>> {
    let roots = isolate_real_roots(f)?;
    let mut out = Vec::with_capacity(roots.len());
    for mut r in roots {
        let mut signs = Vec::with_capacity(gs.len());
        for g in gs {
            signs.push(sign_at_root(g, &mut r));
        }
        out.push((r, signs));
    }
    Ok(out)
}

/// Exact sign of `g` at a real algebraic number.
pub fn sign_at_root(g: &IntPoly, r: &mut RealRoot) -> i32 {
    if g.is_zero() || root_of(g, r) {
        return 0;
    }
    if r.interval.is_point() {
        return g.sign_at(&r.interval.lo);
    }
    // g has no root at r, so it is nonzero on a small enough interval.
    let mut prec = -r.width().magnitude_exp() + 2;
    loop {
        if let Some(s) = g.eval_interval(&r.interval).sign() {
            if s != 0 {
                return s;
            }
        }
        prec += 8;
        r.refine_to(prec);
        if r.interval.is_point() {
            return g.sign_at(&r.interval.lo);
        }
    }
}

/// Enclosure of the Mahler measure `|lc| prod max(1, |z|)` from isolated roots.
pub fn mahler_enclosure(f: &IntPoly, prec: i64) -> Result<(Dyadic, Dyadic)> {
    let mut roots = isolate_complex_roots(f)?;
    let lc = Dyadic::from(f.lc().abs());
    let (mut lo, mut hi) = (lc.clone(), lc);
    for z in roots.iter_mut() {
        let b = z.enclose_complex(prec)?;
        let one = Dyadic::one();
        let low = b.abs_lower(prec + 4).max(one.clone());
        let high = b.abs_upper(prec + 4).max(one);
        for _ in 0..z.multiplicity {
            lo = &lo * &low;
            hi = &hi * &high;
        }
    }
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signs_at_roots() {
        // Signs of X, X^4 - 4 and X^2 - 3 at the roots of X^2 - 2.
        let res = identify_and_sign(
            &IntPoly::from_i64s(&[-2, 0, 1]),
            &[IntPoly::from_i64s(&[0, 1]), IntPoly::from_i64s(&[-4, 0, 0, 0, 1]), IntPoly::from_i64s(&[-3, 0, 1])],
        )
        .unwrap();
        assert_eq!(res[0].1, vec![-1, 0, -1]);
        assert_eq!(res[1].1, vec![1, 0, -1]);
    }

    #[test]
    fn mahler_of_cyclotomic_and_quadratic() {
        let (lo, hi) = mahler_enclosure(&IntPoly::from_i64s(&[1, 1, 1]), 30).unwrap();
        assert!(lo <= Dyadic::one() && Dyadic::one() <= hi);
        // X^2 - 2: M = 2
        let (lo, hi) = mahler_enclosure(&IntPoly::from_i64s(&[-2, 0, 1]), 30).unwrap();
        assert!(lo <= Dyadic::from(2) && Dyadic::from(2) <= hi);
        assert!(&hi - &lo < Dyadic::pow2(-20));
    }
}
