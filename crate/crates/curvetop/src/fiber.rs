//! Roots of `F(z, Y)` for `z` ranging over the roots of a univariate `R`.
//!
//! The fiber degree `n(z)` and the gcd degree `k(z)` are read off exact
//! filtrations of the square-free part of `R`, so the number of distinct
//! roots `m(z) = n(z) - k(z)` is known before any numerics start. The
//! cluster engine then only has to find that many certified clusters.

use std::cmp::Ordering;

use num_traits::One;

use crate::bpoly::IntPoly2;
use crate::error::{Error, Result};
use crate::exactnum::{ComplexInterval, ComplexRefinable, Disk, Dyadic, Interval, PRECISION_CAP};
use crate::roots::{
    self, isolate_complex_roots, isolate_real_roots, AlgebraicNumber, Cluster, ClusterEngine, CoefficientOracle,
};
use crate::upoly::{self, IntPoly};

/// Exact data deciding `deg F(z, .)` and `deg gcd(F(z, .), dF/dY(z, .))`
/// for every root `z` of `R`.
///
/// `upto[l]` is `R*_{<=l}`, whose roots are the `z` with fiber degree at
/// most `l`; `exact[l] = R*_{<=l} / R*_{<=l-1}` has exactly the roots with
/// degree `l`. For each `l`, `gcd_upto[l][k]` collects the roots of
/// `exact[l]` where the first `k` subdiscriminants of `F_l` vanish, and
/// `gcd_exact[l][k]` those whose gcd degree is exactly `k`.
#[derive(Clone, Debug)]
pub struct DegreeFiltration {
    pub rstar: IntPoly,
    pub upto: Vec<IntPoly>,
    pub exact: Vec<IntPoly>,
    pub gcd_upto: Vec<Vec<IntPoly>>,
    pub gcd_exact: Vec<Vec<IntPoly>>,
    pub sdisc: Vec<Vec<IntPoly>>,
}

/// Build the degree and gcd-degree filtrations of `R` with respect to `F`.
pub fn degree_filtration(r: &IntPoly, f: &IntPoly2) -> Result<DegreeFiltration> {
    if r.is_zero() || f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let rstar = upoly::square_free_part(r)?;
    let ny = f.deg_y();
    // upto[l] = gcd(R*, f_{l+1}, ..., f_ny), computed from the top down.
    let mut upto = vec![IntPoly::one(); ny + 1];
    upto[ny] = rstar.clone();
    for l in (0..ny).rev() {
        upto[l] = upoly::gcd(&upto[l + 1], &f.y_coeff(l + 1))?;
    }
    let bottom = upoly::gcd(&upto[0], &f.y_coeff(0))?;
    if bottom.deg() > 0 {
        return Err(Error::FiberIdenticallyZero);
    }
    let mut exact = Vec::with_capacity(ny + 1);
    for l in 0..=ny {
        let below = if l == 0 { IntPoly::one() } else { upto[l - 1].clone() };
        exact.push(upoly::exact_div(&upto[l], &below)?);
    }
    let mut gcd_upto = Vec::with_capacity(ny + 1);
    let mut gcd_exact = Vec::with_capacity(ny + 1);
    let mut sdisc = Vec::with_capacity(ny + 1);
    for (l, el) in exact.iter().enumerate() {
        if l == 0 || el.deg() == 0 {
            gcd_upto.push(vec![el.clone()]);
            gcd_exact.push(vec![el.clone()]);
            sdisc.push(Vec::new());
            continue;
        }
        let sd = f.truncate_y(l).subdiscriminants_y();
        let mut chain = vec![el.clone()];
        for s in &sd {
            let next = upoly::gcd(chain.last().expect("nonempty"), s)?;
            chain.push(next);
        }
        let mut quotients = Vec::with_capacity(l);
        for k in 0..l {
            quotients.push(upoly::exact_div(&chain[k], &chain[k + 1])?);
        }
        if chain[l].deg() > 0 {
            return Err(Error::Certification("gcd degree filtration does not terminate".into()));
        }
        gcd_upto.push(chain);
        gcd_exact.push(quotients);
        sdisc.push(sd);
    }
    Ok(DegreeFiltration { rstar, upto, exact, gcd_upto, gcd_exact, sdisc })
}

impl DegreeFiltration {
    /// `(n(z), k(z))` for a root `z` of `R`.
    pub fn degrees_at(&self, z: &mut AlgebraicNumber) -> Result<(usize, usize)> {
        for (l, el) in self.exact.iter().enumerate() {
            if el.deg() == 0 || !vanishes_at(el, z)? {
                continue;
            }
            if l == 0 {
                return Ok((0, 0));
            }
            for (k, q) in self.gcd_exact[l].iter().enumerate() {
                if q.deg() > 0 && vanishes_at(q, z)? {
                    return Ok((l, k));
                }
            }
            return Err(Error::Certification("root missing from the gcd filtration".into()));
        }
        Err(Error::Certification("not a root of the filtered polynomial".into()))
    }
}

/// Whether the integer polynomial `g` vanishes at the algebraic number `z`.
pub fn vanishes_at(g: &IntPoly, z: &mut AlgebraicNumber) -> Result<bool> {
    if g.is_zero() {
        return Ok(true);
    }
    match z {
        AlgebraicNumber::Real(r) => Ok(roots::root_of(g, r)),
        AlgebraicNumber::Complex(c) => {
            let h = upoly::gcd(g, &c.poly)?;
            if h.deg() == 0 {
                return Ok(false);
            }
            // Roots of h are roots of c.poly, and the disk of c isolates
            // exactly one of those, so containment decides equality.
            for mut w in isolate_complex_roots(&h)? {
                loop {
                    if !w.disk.meets(&c.disk) {
                        break;
                    }
                    if c.disk.contains_disk(&w.disk) {
                        return Ok(true);
                    }
                    let t = w.disk.radius.magnitude_exp() - 2;
                    if -t > PRECISION_CAP {
                        return Err(Error::Budget("root identification".into()));
                    }
                    w.refine_to(t)?;
                }
            }
            Ok(false)
        }
    }
}

/// `(n(z), k(z))` for every distinct complex root of `R`, real roots first.
pub fn fiber_degrees(r: &IntPoly, f: &IntPoly2) -> Result<Vec<(AlgebraicNumber, usize, usize)>> {
    let filt = degree_filtration(r, f)?;
    let mut out = Vec::new();
    for (mut z, _) in roots_of(r)? {
        let (n, k) = filt.degrees_at(&mut z)?;
        out.push((z, n, k));
    }
    Ok(out)
}

/// Distinct roots of `R` with multiplicities: real ones as [`RealRoot`]s in
/// increasing order, then the non-real ones.
///
/// [`RealRoot`]: crate::roots::RealRoot
pub fn roots_of(r: &IntPoly) -> Result<Vec<(AlgebraicNumber, usize)>> {
    let mut out: Vec<(AlgebraicNumber, usize)> = Vec::new();
    for x in isolate_real_roots(r)? {
        let m = x.multiplicity;
        out.push((AlgebraicNumber::Real(x), m));
    }
    for c in isolate_complex_roots(r)? {
        if !c.is_real() {
            let m = c.multiplicity;
            out.push((AlgebraicNumber::Complex(c), m));
        }
    }
    Ok(out)
}

/// Coefficients `f_0(z), ..., f_n(z)` of a fiber polynomial.
#[derive(Clone, Debug)]
pub struct FiberCoefficients {
    coeffs: Vec<IntPoly>,
    base: AlgebraicNumber,
    exact: Option<Vec<ComplexInterval>>,
}

impl FiberCoefficients {
    /// `F(z, Y)` truncated at its true degree `n` at `z`.
    pub fn new(f: &IntPoly2, base: AlgebraicNumber, n: usize) -> Self {
        let coeffs: Vec<IntPoly> = (0..=n).map(|l| f.y_coeff(l)).collect();
        let exact = match &base {
            AlgebraicNumber::Real(r) => r.as_rational().map(|q| {
                let v: Vec<_> = coeffs.iter().map(|c| c.eval_rational(&q)).collect();
                let ints = upoly::clear_denominators(&v);
                (0..=n)
                    .map(|i| ComplexInterval::real(Interval::point(Dyadic::from(ints.coeff(i)))))
                    .collect()
            }),
            AlgebraicNumber::Complex(_) => None,
        };
        FiberCoefficients { coeffs, base, exact }
    }

    pub fn base_mut(&mut self) -> &mut AlgebraicNumber {
        &mut self.base
    }
}

impl CoefficientOracle for FiberCoefficients {
    fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn coefficients(&mut self, prec: i64) -> Result<Vec<ComplexInterval>> {
        if let Some(e) = &self.exact {
            return Ok(e.clone());
        }
        let target = Dyadic::pow2(-prec);
        let mut p = prec.max(0) + 8;
        loop {
            if p > PRECISION_CAP {
                return Err(Error::Budget("fiber coefficient evaluation".into()));
            }
            let zb = self.base.enclose_complex(p)?;
            let vals: Vec<ComplexInterval> = self.coeffs.iter().map(|c| c.eval_complex(&zb)).collect();
            if vals.iter().all(|v| v.re.width() <= target && v.im.width() <= target) {
                return Ok(vals);
            }
            p *= 2;
        }
    }
}

/// One distinct root `z'` of `F(z, .)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberRoot {
    pub disk: Disk,
    /// `mu(z, z')`, the multiplicity of `z'` as a root of `F(z, .)`.
    pub multiplicity: usize,
    /// Distance to the nearest other root, within a few percent.
    pub separation: Option<Dyadic>,
    /// Set when both `z` and `z'` are real.
    pub real: bool,
}

/// All roots of `F(z, .)` for one root `z` of `R`.
pub struct FiberSolution {
    pub base_multiplicity: usize,
    pub fiber_degree: usize,
    pub gcd_degree: usize,
    pub roots: Vec<FiberRoot>,
    engine: ClusterEngine<FiberCoefficients>,
}

impl std::fmt::Debug for FiberSolution {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiberSolution")
            .field("n", &self.fiber_degree)
            .field("k", &self.gcd_degree)
            .field("roots", &self.roots)
            .finish()
    }
}

impl FiberSolution {
    /// Isolate the roots of `F(z, .)` knowing `n(z)` and `k(z)`.
    pub fn new(f: &IntPoly2, base: AlgebraicNumber, base_multiplicity: usize, n: usize, k: usize) -> Result<Self> {
        let real_base = matches!(base, AlgebraicNumber::Real(_));
        let mut engine = ClusterEngine::new(FiberCoefficients::new(f, base, n), n - k);
        let clusters = if n == 0 { Vec::new() } else { engine.isolate(None)? };
        let roots = clusters.into_iter().map(|c| to_root(c, real_base)).collect();
        let mut sol = FiberSolution { base_multiplicity, fiber_degree: n, gcd_degree: k, roots, engine };
        sol.order_roots();
        Ok(sol)
    }

    pub fn base(&mut self) -> &mut AlgebraicNumber {
        self.engine.oracle_mut().base_mut()
    }

    pub fn base_is_real(&mut self) -> bool {
        matches!(self.base(), AlgebraicNumber::Real(_))
    }

    /// `m(z) = n(z) - k(z)`.
    pub fn distinct_count(&self) -> usize {
        self.fiber_degree - self.gcd_degree
    }

    /// Indices of the real roots, in increasing order.
    pub fn real_indices(&self) -> Vec<usize> {
        (0..self.roots.len()).filter(|&i| self.roots[i].real).collect()
    }

    /// Enclosure of a real root.
    pub fn real_interval(&self, i: usize) -> Interval {
        self.roots[i].disk.real_interval()
    }

    /// Shrink every disk to radius at most `2^target`.
    pub fn refine_radius(&mut self, target: i64) -> Result<()> {
        if self.roots.iter().all(|r| r.disk.radius <= Dyadic::pow2(target)) {
            return Ok(());
        }
        let real_base = self.base_is_real();
        let fresh = self.engine.isolate(Some(target))?;
        let mut next = Vec::with_capacity(self.roots.len());
        for old in &self.roots {
            let hits: Vec<&Cluster> = fresh.iter().filter(|c| c.disk.meets(&old.disk)).collect();
            match hits.as_slice() {
                [c] if c.multiplicity == old.multiplicity => next.push(to_root((*c).clone(), real_base)),
                _ => return Err(Error::Certification("refined fiber disk does not match its parent".into())),
            }
        }
        self.roots = next;
        self.order_roots();
        Ok(())
    }

    /// Real roots first, by increasing real part.
    fn order_roots(&mut self) {
        self.roots.sort_by(|a, b| match (a.real, b.real) {
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            _ => a.disk.center.re.cmp(&b.disk.center.re).then(a.disk.center.im.cmp(&b.disk.center.im)),
        });
    }

    /// Enclosure `I` of the base point with `I x (real interval of root i)`.
    pub fn real_point(&mut self, i: usize, prec: i64) -> Result<(Interval, Interval)> {
        self.refine_radius(-prec - 1)?;
        let x = match self.base() {
            AlgebraicNumber::Real(r) => r.enclose_complex(prec)?.re,
            AlgebraicNumber::Complex(_) => return Err(Error::Certification("real point over a complex base".into())),
        };
        Ok((x, self.real_interval(i)))
    }

    /// Exact sign of `G` at the real point `(z, z'_i)`, known to be nonzero.
    pub fn sign_at(&mut self, g: &IntPoly2, i: usize) -> Result<i32> {
        let mut prec = 16;
        loop {
            let (x, y) = self.real_point(i, prec)?;
            if let Some(s) = g.eval_real_box(&x, &y).sign() {
                if s != 0 {
                    return Ok(s);
                }
            }
            prec *= 2;
            if prec > PRECISION_CAP {
                return Err(Error::Budget("sign at a fiber point".into()));
            }
        }
    }
}

fn to_root(c: Cluster, real_base: bool) -> FiberRoot {
    let real = real_base && c.disk.meets_real_axis();
    FiberRoot { disk: c.disk, multiplicity: c.multiplicity, separation: c.separation, real }
}

/// Fiber solution for one root, with degrees from the filtration.
pub fn fiber_at(
    f: &IntPoly2,
    filt: &DegreeFiltration,
    mut base: AlgebraicNumber,
    base_multiplicity: usize,
) -> Result<FiberSolution> {
    let (n, k) = filt.degrees_at(&mut base)?;
    FiberSolution::new(f, base, base_multiplicity, n, k)
}

/// Well-isolating disks with multiplicities for the roots of `F(z, .)`, for
/// every root `z` of `R`.
pub fn isolate_fiber_roots(r: &IntPoly, f: &IntPoly2) -> Result<Vec<FiberSolution>> {
    let filt = degree_filtration(r, f)?;
    roots_of(r)?.into_iter().map(|(z, mu)| fiber_at(f, &filt, z, mu)).collect()
}

/// Shrink every disk of the fiber below diameter `2^-l`.
pub fn refine_fiber_roots(sol: &mut FiberSolution, l: i64) -> Result<()> {
    sol.refine_radius(-l - 2)
}

/// Which of `F(z, .)` and `G(z, .)` a root of their product belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    FOnly,
    GOnly,
    Both,
}

/// A root of `H(z, .) = F(z, .) G(z, .)` with its membership and, at real
/// points, the signs of `F` and `G` there.
#[derive(Clone, Debug)]
pub struct MatchedRoot {
    pub root: FiberRoot,
    pub membership: Membership,
    pub sign_f: Option<i32>,
    pub sign_g: Option<i32>,
}

/// Matched roots above one root of `R`.
pub struct MatchedFiber {
    pub solution: FiberSolution,
    pub roots: Vec<MatchedRoot>,
}

/// Decide, for each root `z'` of `F(z, .) G(z, .)`, whether it is a root of
/// `F(z, .)`, `G(z, .)` or both, and the signs of the factors at real points.
pub fn match_fiber_roots(r: &IntPoly, f: &IntPoly2, g: &IntPoly2) -> Result<Vec<MatchedFiber>> {
    let h = f * g;
    let filt_h = degree_filtration(r, &h).ok();
    let filt_f = degree_filtration(r, f).ok();
    let filt_g = degree_filtration(r, g).ok();
    let mut out = Vec::new();
    for (z, mu) in roots_of(r)? {
        let fz = part_fiber(f, filt_f.as_ref(), z.clone(), mu)?;
        let gz = part_fiber(g, filt_g.as_ref(), z.clone(), mu)?;
        let (mut fz, mut gz) = match (fz, gz) {
            (None, None) => return Err(Error::NotFinite),
            // One factor vanishes on the whole line X = z: every root of the
            // other one is a common solution.
            (None, Some(sol)) | (Some(sol), None) => {
                let roots = sol
                    .roots
                    .iter()
                    .map(|root| {
                        let sign = root.real.then_some(0);
                        MatchedRoot { root: root.clone(), membership: Membership::Both, sign_f: sign, sign_g: sign }
                    })
                    .collect();
                out.push(MatchedFiber { solution: sol, roots });
                continue;
            }
            (Some(fz), Some(gz)) => (fz, gz),
        };
        let mut hz = part_fiber(&h, filt_h.as_ref(), z, mu)?.ok_or(Error::FiberIdenticallyZero)?;
        let mut counts = vec![(0usize, 0usize); hz.roots.len()];
        assign(&mut hz, &mut fz, &mut counts, true)?;
        assign(&mut hz, &mut gz, &mut counts, false)?;
        let mut roots = Vec::with_capacity(hz.roots.len());
        for i in 0..hz.roots.len() {
            let (mf, mg) = counts[i];
            if mf + mg != hz.roots[i].multiplicity {
                return Err(Error::Certification("fiber multiplicities do not add up".into()));
            }
            let membership = match (mf > 0, mg > 0) {
                (true, true) => Membership::Both,
                (true, false) => Membership::FOnly,
                (false, true) => Membership::GOnly,
                (false, false) => return Err(Error::Certification("root of the product in neither factor".into())),
            };
            let (mut sign_f, mut sign_g) = (None, None);
            if hz.roots[i].real {
                sign_f = Some(if mf > 0 { 0 } else { hz.sign_at(f, i)? });
                sign_g = Some(if mg > 0 { 0 } else { hz.sign_at(g, i)? });
            }
            roots.push(MatchedRoot { root: hz.roots[i].clone(), membership, sign_f, sign_g });
        }
        out.push(MatchedFiber { solution: hz, roots });
    }
    Ok(out)
}

/// Fiber of one factor, or `None` when it vanishes identically at `z`.
fn part_fiber(
    f: &IntPoly2,
    filt: Option<&DegreeFiltration>,
    mut z: AlgebraicNumber,
    mu: usize,
) -> Result<Option<FiberSolution>> {
    let mut zero = true;
    for c in f.coeffs() {
        if !vanishes_at(c, &mut z)? {
            zero = false;
            break;
        }
    }
    if zero {
        return Ok(None);
    }
    let filt = match filt {
        Some(filt) => filt.clone(),
        // The filtration fails only through roots where f vanishes
        // identically; rebuild it on the part of z's factor that avoids them.
        None => {
            let c = root_factor(&z);
            let lines = upoly::gcd(&c, &f.content_y()?)?;
            degree_filtration(&upoly::exact_div(&c, &lines)?, f)?
        }
    };
    Ok(Some(fiber_at(f, &filt, z, mu)?))
}

fn root_factor(z: &AlgebraicNumber) -> IntPoly {
    match z {
        AlgebraicNumber::Real(r) => r.poly.clone(),
        AlgebraicNumber::Complex(c) => c.poly.clone(),
    }
}

/// Refine the factor's disks until each meets exactly one disk of the
/// product, then record the factor multiplicities.
fn assign(hz: &mut FiberSolution, part: &mut FiberSolution, counts: &mut [(usize, usize)], is_f: bool) -> Result<()> {
    loop {
        let mut done = true;
        let mut found = Vec::with_capacity(part.roots.len());
        for p in &part.roots {
            let hits: Vec<usize> = (0..hz.roots.len()).filter(|&i| hz.roots[i].disk.meets(&p.disk)).collect();
            if hits.len() != 1 {
                done = false;
                break;
            }
            found.push(hits[0]);
        }
        if done {
            for (p, &i) in part.roots.iter().zip(&found) {
                if is_f {
                    counts[i].0 += p.multiplicity;
                } else {
                    counts[i].1 += p.multiplicity;
                }
            }
            return Ok(());
        }
        let r = part.roots.iter().map(|p| p.disk.radius.magnitude_exp()).max().unwrap_or(0);
        if -r > PRECISION_CAP {
            return Err(Error::Budget("matching fiber roots".into()));
        }
        part.refine_radius(r - 2)?;
    }
}

/// A solution `(x, y)` of a bivariate system.
#[derive(Clone, Debug)]
pub struct SystemSolution {
    pub x: ComplexInterval,
    pub y: Disk,
    pub real: bool,
}

/// All complex solutions of `F = G = 0`, each reported once.
pub fn solve_system(f: &IntPoly2, g: &IntPoly2) -> Result<Vec<SystemSolution>> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::NotFinite);
    }
    let r = if f.deg_y() == 0 && g.deg_y() == 0 {
        // Both are polynomials in X alone: common roots are whole lines.
        let h = upoly::gcd(&f.y_coeff(0), &g.y_coeff(0))?;
        if h.deg() > 0 {
            return Err(Error::NotFinite);
        }
        return Ok(Vec::new());
    } else {
        f.resultant_y(g)?
    };
    if r.is_zero() {
        return Err(Error::NotFinite);
    }
    if r.deg() == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for mut fiber in match_fiber_roots(&r, f, g)? {
        for m in &fiber.roots {
            if m.membership != Membership::Both {
                continue;
            }
            let x = fiber.solution.base().enclose_complex(8)?;
            out.push(SystemSolution { x, y: m.root.disk.clone(), real: m.root.real });
        }
    }
    Ok(out)
}

/// Tighten a solution list so that every `x` box and `y` disk has width at
/// most `2^-prec`.
pub fn solve_system_refined(f: &IntPoly2, g: &IntPoly2, prec: i64) -> Result<Vec<SystemSolution>> {
    let r = f.resultant_y(g)?;
    if r.is_zero() {
        return Err(Error::NotFinite);
    }
    if r.deg() == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for mut fiber in match_fiber_roots(&r, f, g)? {
        let both: Vec<usize> =
            (0..fiber.roots.len()).filter(|&i| fiber.roots[i].membership == Membership::Both).collect();
        if both.is_empty() {
            continue;
        }
        fiber.solution.refine_radius(-prec - 1)?;
        let x = fiber.solution.base().enclose_complex(prec)?;
        for i in both {
            let root = &fiber.solution.roots[i];
            out.push(SystemSolution { x: x.clone(), y: root.disk.clone(), real: root.real });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Gaussian;

    fn p2(terms: &[(usize, usize, i64)]) -> IntPoly2 {
        IntPoly2::from_terms(terms.iter().copied())
    }

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn degree_drop_at_zero() {
        // R = X, F = X Y^2 + Y - 1
        let f = p2(&[(1, 2, 1), (0, 1, 1), (0, 0, -1)]);
        let filt = degree_filtration(&p(&[0, 1]), &f).unwrap();
        assert_eq!(filt.exact[1], p(&[0, 1]));
        assert_eq!(filt.exact[2].deg(), 0);
        let d = fiber_degrees(&p(&[0, 1]), &f).unwrap();
        assert_eq!((d[0].1, d[0].2), (1, 0));
    }

    #[test]
    fn constant_leading_coefficient() {
        let f = p2(&[(0, 2, 1), (1, 0, -1)]);
        let filt = degree_filtration(&p(&[-3, 1]), &f).unwrap();
        assert_eq!(filt.exact[2], p(&[-3, 1]));
        assert!(filt.exact[0].deg() == 0 && filt.exact[1].deg() == 0);
    }

    #[test]
    fn identically_zero_fiber() {
        let f = p2(&[(1, 1, 1)]);
        assert_eq!(degree_filtration(&p(&[0, -1, 1]), &f).unwrap_err(), Error::FiberIdenticallyZero);
    }

    #[test]
    fn double_root_fiber() {
        // F = Y^2 - 2XY + X^2 at X = 1
        let f = p2(&[(0, 2, 1), (1, 1, -2), (2, 0, 1)]);
        let d = fiber_degrees(&p(&[-1, 1]), &f).unwrap();
        assert_eq!((d[0].1, d[0].2), (2, 1));
    }

    #[test]
    fn quartic_roots_over_sqrt_two() {
        let f = p2(&[(0, 2, 1), (1, 0, -1)]);
        let mut sols = isolate_fiber_roots(&p(&[-2, 0, 1]), &f).unwrap();
        assert_eq!(sols.len(), 2);
        // Real roots come first in increasing order: -sqrt 2, then sqrt 2.
        assert!(sols[0].roots.iter().all(|r| !r.real));
        assert!(sols[1].roots.iter().all(|r| r.real));
        let s = &mut sols[1];
        refine_fiber_roots(s, 40).unwrap();
        let fourth = 2f64.powf(0.25);
        assert!((s.roots[0].disk.center.re.to_f64() + fourth).abs() < 1e-9);
        assert!((s.roots[1].disk.center.re.to_f64() - fourth).abs() < 1e-9);
        assert!(s.roots.iter().all(|r| r.disk.radius <= Dyadic::pow2(-41)));
    }

    #[test]
    fn triple_root_fiber() {
        let f = p2(&[(0, 3, 1)]);
        let sols = isolate_fiber_roots(&p(&[0, 1]), &f).unwrap();
        assert_eq!(sols[0].roots.len(), 1);
        assert_eq!(sols[0].roots[0].multiplicity, 3);
    }

    #[test]
    fn membership_and_signs() {
        let f = p2(&[(0, 1, 1), (0, 0, -1)]);
        let g = p2(&[(0, 1, 1), (0, 0, 1)]);
        let m = match_fiber_roots(&p(&[0, 1]), &f, &g).unwrap();
        let roots = &m[0].roots;
        assert_eq!(roots.len(), 2);
        // Ordered by real part: -1 then 1.
        assert_eq!(roots[0].membership, Membership::GOnly);
        assert_eq!(roots[0].sign_f, Some(-1));
        assert_eq!(roots[1].membership, Membership::FOnly);
        assert_eq!(roots[1].sign_g, Some(1));
    }

    #[test]
    fn circle_and_diagonal() {
        let f = p2(&[(2, 0, 1), (0, 2, 1), (0, 0, -1)]);
        let g = p2(&[(0, 1, 1), (1, 0, -1)]);
        let sols = solve_system(&f, &g).unwrap();
        assert_eq!(sols.len(), 2);
        assert!(sols.iter().all(|s| s.real));
    }

    #[test]
    fn hyperbola_and_line() {
        let f = p2(&[(1, 1, 1), (0, 0, -1)]);
        let g = p2(&[(0, 1, 1), (0, 0, -1)]);
        let sols = solve_system(&f, &g).unwrap();
        assert_eq!(sols.len(), 1);
        assert!(sols[0].y.contains(&Gaussian::real(Dyadic::one())));
    }

    #[test]
    fn factor_with_a_vertical_line() {
        // G = Y (X - 1) vanishes on X = 1, where F = Y^2 - X has two roots;
        // the branch Y = 0 adds the origin.
        let f = p2(&[(0, 2, 1), (1, 0, -1)]);
        let g = p2(&[(1, 1, 1), (0, 1, -1)]);
        let sols = solve_system(&f, &g).unwrap();
        assert_eq!(sols.len(), 3);
        assert!(sols.iter().all(|s| s.real));
    }
}
