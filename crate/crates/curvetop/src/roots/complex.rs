//! Complex roots of integer polynomials as well-isolated disks.

use std::cell::RefCell;
use std::fmt;
use std::rc::Rc;

use crate::error::{Error, Result};
use crate::exactnum::{ComplexInterval, ComplexRefinable, Disk, Dyadic, PRECISION_CAP};
use crate::upoly::{self, IntPoly};

use super::cluster::{Cluster, ClusterEngine, ExactCoefficients};

type SharedEngine = Rc<RefCell<ClusterEngine<ExactCoefficients>>>;

/// A complex root of an integer polynomial.
///
/// `poly` is the square-free factor carrying the root and `disk` isolates
/// it among the roots of that factor. Roots of one factor share their
/// cluster engine, so refining one refines its siblings' certificates too.
#[derive(Clone)]
pub struct ComplexRoot {
    pub poly: IntPoly,
    pub disk: Disk,
    pub multiplicity: usize,
    engine: SharedEngine,
}

impl fmt::Debug for ComplexRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ComplexRoot({}, {:?}, mult {})", self.poly, self.disk, self.multiplicity)
    }
}

impl ComplexRoot {
    /// Whether the root is real (well-isolated disks meet the axis only then).
    pub fn is_real(&self) -> bool {
        self.disk.meets_real_axis()
    }

    /// Shrink the disk to radius at most `2^target`.
    pub fn refine_to(&mut self, target: i64) -> Result<()> {
        if self.disk.radius <= Dyadic::pow2(target) {
            return Ok(());
        }
        let clusters = self.engine.borrow_mut().isolate(Some(target))?;
        let hit: Vec<&Cluster> = clusters.iter().filter(|c| c.disk.meets(&self.disk)).collect();
        match hit.as_slice() {
            [c] => {
                self.disk = c.disk.clone();
                Ok(())
            }
            _ => Err(Error::Certification("refined disk does not match its parent".into())),
        }
    }
}

impl ComplexRefinable for ComplexRoot {
    fn enclose_complex(&mut self, prec: i64) -> Result<ComplexInterval> {
        if prec > PRECISION_CAP {
            return Err(Error::Budget("complex root refinement".into()));
        }
        // Box side is twice the radius.
        self.refine_to(-prec - 1)?;
        Ok(self.disk.to_box())
    }
}

/// Isolate all complex roots of a nonzero polynomial, with multiplicities.
///
/// The disks are pairwise disjoint and well isolated with respect to the
/// whole root set: each radius times `65 deg f` is below the distance to
/// every other disk.
pub fn isolate_complex_roots(f: &IntPoly) -> Result<Vec<ComplexRoot>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    for (g, mult) in upoly::square_free_decomposition(f)? {
        let engine = Rc::new(RefCell::new(ClusterEngine::new(ExactCoefficients::new(&g), g.deg())));
        let clusters = engine.borrow_mut().isolate(None)?;
        for c in clusters {
            out.push(ComplexRoot { poly: g.clone(), disk: c.disk, multiplicity: mult, engine: engine.clone() });
        }
    }
    make_well_isolating(&mut out, f.deg())?;
    Ok(out)
}

/// Refine disks until each radius times `65 n` is below its gap to every
/// other disk.
pub fn make_well_isolating(roots: &mut [ComplexRoot], n: usize) -> Result<()> {
    let factor = Dyadic::from((65 * n.max(1)) as i64);
    loop {
        let mut worst: Option<(usize, i64)> = None;
        for i in 0..roots.len() {
            for j in 0..roots.len() {
                if i == j {
                    continue;
                }
                let gap = roots[i].disk.gap_lower(&roots[j].disk, 64 - roots[i].disk.radius.magnitude_exp());
                if gap <= &roots[i].disk.radius * &factor {
                    let target = roots[i].disk.radius.magnitude_exp() - 3;
                    if worst.is_none_or(|(_, t)| target < t) {
                        worst = Some((i, target));
                    }
                }
            }
        }
        match worst {
            None => return Ok(()),
            Some((i, t)) => {
                if -t > PRECISION_CAP {
                    return Err(Error::Budget("well isolation".into()));
                }
                roots[i].refine_to(t)?;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Gaussian;

    #[test]
    fn conjugate_pair() {
        let r = isolate_complex_roots(&IntPoly::from_i64s(&[1, 0, 1])).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.iter().all(|z| !z.is_real()));
        assert!(r.iter().any(|z| z.disk.contains(&Gaussian::new(Dyadic::zero(), Dyadic::one()))));
    }

    #[test]
    fn multiple_factors_are_well_isolated() {
        // (X - 1)^2 (X + 2) (X^2 - 2)
        let f = &IntPoly::from_i64s(&[2, -3, 0, 1]) * &IntPoly::from_i64s(&[-2, 0, 1]);
        let mut r = isolate_complex_roots(&f).unwrap();
        assert_eq!(r.len(), 4);
        assert_eq!(r.iter().map(|z| z.multiplicity).sum::<usize>(), 5);
        assert!(r.iter().all(|z| z.is_real()));
        let k = r.iter().position(|z| z.disk.contains(&Gaussian::real(Dyadic::one()))).unwrap();
        assert_eq!(r[k].multiplicity, 2);
        let b = r[0].enclose_complex(100).unwrap();
        assert!(b.width() <= Dyadic::pow2(-100));
    }
}
