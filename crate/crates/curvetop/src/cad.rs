//! The refined cylindrical decomposition of a real plane curve.
//!
//! Vertical and horizontal lines are split off first. The special `x`
//! values are the real roots of the discriminant and of the leading
//! coefficient in `Y`; together with the `x` coordinates of horizontal
//! tangents they form the roots of `S_X`, and rational buffers sit between
//! consecutive roots. The `y` side is built the same way from `S_Y`.
//!
//! Buffers are dyadic and chosen so that no box corner and no point where a
//! box edge meets a special line lies on the curve. Every incidence test on
//! a box boundary is then an exact univariate computation.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::bpoly::IntPoly2;
use crate::error::{Error, Result};
use crate::exactnum::{Dyadic, Interval, PRECISION_CAP};
use crate::fiber::{degree_filtration, FiberSolution};
use crate::roots::{isolate_real_roots, root_of, sign_at_root, sort_disjoint, AlgebraicNumber, RealRoot};
use crate::upoly::{self, IntPoly};

/// `P = c(X) P~` and `P~ = d(Y) Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveDecomposition {
    pub p: IntPoly2,
    /// Product of the vertical lines (with the integer content of `P`).
    pub c: IntPoly,
    pub ptilde: IntPoly2,
    /// Product of the horizontal lines of `P~`.
    pub d: IntPoly,
    pub q: IntPoly2,
}

/// Split off vertical and horizontal lines, checking square-freeness.
pub fn split_lines(p: &IntPoly2) -> Result<CurveDecomposition> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let c = p.content_y()?;
    let ptilde = p.div_x(&c)?;
    if upoly::square_free_decomposition(&c)?.iter().any(|(_, m)| *m > 1) {
        return Err(Error::NotSquareFree);
    }
    // P~ has no content in Z[X], so a repeated factor would have positive
    // Y-degree and make the discriminant vanish.
    if ptilde.deg_y() > 0 && ptilde.disc_y().is_zero() {
        return Err(Error::NotSquareFree);
    }
    let d = ptilde.content_x()?;
    let q = ptilde.div_y(&d)?;
    Ok(CurveDecomposition { p: p.clone(), c, ptilde, d, q })
}

/// The projection polynomials.
///
/// `S_X = D_X * Res_Y(Q, dQ/dX) * lc_Y(P~)` and
/// `S_Y = D_Y * Res_X(P~, dP~/dY) * lc_X(P~)`, kept as factor lists
/// because the products are only needed on request.
#[derive(Clone, Debug)]
pub struct FramePolys {
    pub dx: IntPoly,
    pub dy: IntPoly,
    pub res_q: IntPoly,
    pub res_p: IntPoly,
    pub lc_y: IntPoly,
    pub lc_x: IntPoly,
}

impl FramePolys {
    pub fn sx(&self) -> IntPoly {
        &(&self.dx * &self.res_q) * &self.lc_y
    }

    pub fn sy(&self) -> IntPoly {
        &(&self.dy * &self.res_p) * &self.lc_x
    }

    /// `T_X = S_X (S_X*)'`.
    pub fn tx(&self) -> Result<IntPoly> {
        let s = self.sx();
        Ok(&s * &upoly::square_free_part(&s)?.derivative())
    }

    /// `T_Y = S_Y (S_Y*)'`.
    pub fn ty(&self) -> Result<IntPoly> {
        let s = self.sy();
        Ok(&s * &upoly::square_free_part(&s)?.derivative())
    }
}

/// Requires `deg_X P~ > 0` and `deg_Y P~ > 0`.
pub fn frame_polys(dec: &CurveDecomposition) -> Result<FramePolys> {
    let pt = &dec.ptilde;
    if pt.deg_x() == 0 || pt.deg_y() == 0 {
        return Err(Error::Certification("frame polynomials of a degenerate curve".into()));
    }
    let dx = pt.disc_y();
    let dy = pt.disc_x();
    let res_q = dec.q.resultant_y(&dec.q.diff_x())?;
    let res_p = pt.resultant_x(&pt.diff_y())?;
    if dx.is_zero() || dy.is_zero() || res_q.is_zero() || res_p.is_zero() {
        return Err(Error::NotSquareFree);
    }
    let lc_y = pt.lc_y();
    let lc_x = pt.transpose().lc_y();
    Ok(FramePolys { dx, dy, res_q, res_p, lc_y, lc_x })
}

/// Sorted distinct real roots of a product of polynomials, each flagged
/// when it is a root of one of the flagged factors, with rational buffers
/// strictly between consecutive roots and beyond the extremes.
#[derive(Clone, Debug)]
pub struct Axis {
    pub roots: Vec<RealRoot>,
    pub special: Vec<bool>,
    /// `buffers[t]` lies between `roots[t - 1]` and `roots[t]`.
    pub buffers: Vec<Dyadic>,
}

impl Axis {
    pub fn new(factors: &[(&IntPoly, bool)]) -> Result<Axis> {
        let mut roots: Vec<RealRoot> = Vec::new();
        let mut special: Vec<bool> = Vec::new();
        for (f, flag) in factors {
            if f.deg() == 0 {
                continue;
            }
            for mut r in isolate_real_roots(f)? {
                r.multiplicity = 1;
                let mut found = None;
                for (t, e) in roots.iter_mut().enumerate() {
                    if e.interval.overlaps(&r.interval) && e.compare(&mut r) == Ordering::Equal {
                        found = Some(t);
                        break;
                    }
                }
                match found {
                    Some(t) => special[t] |= *flag,
                    None => {
                        roots.push(r);
                        special.push(*flag);
                    }
                }
            }
        }
        let mut tagged: Vec<(RealRoot, bool)> = roots.into_iter().zip(special).collect();
        let mut plain: Vec<RealRoot> = tagged.iter().map(|t| t.0.clone()).collect();
        sort_disjoint(&mut plain);
        // Re-attach flags after sorting by matching intervals.
        let mut flags = Vec::with_capacity(plain.len());
        for r in &plain {
            let k = tagged
                .iter()
                .position(|(t, _)| t.poly == r.poly && t.interval.contains_interval(&r.interval))
                .ok_or_else(|| Error::Certification("lost a root while sorting".into()))?;
            flags.push(tagged.swap_remove(k).1);
        }
        let mut axis = Axis { roots: plain, special: flags, buffers: Vec::new() };
        axis.buffers = (0..=axis.roots.len()).map(|t| axis.gap(t).0).collect();
        Ok(axis)
    }

    /// Open interval of admissible buffer values at position `t`, and its
    /// simplest dyadic.
    fn gap(&self, t: usize) -> (Dyadic, Dyadic, Dyadic) {
        let n = self.roots.len();
        let (lo, hi) = if n == 0 {
            (Dyadic::from(-1), Dyadic::from(1))
        } else if t == 0 {
            let hi = self.roots[0].lo().clone();
            (Dyadic::from(hi.floor_int() - 1), hi)
        } else if t == n {
            let lo = self.roots[n - 1].hi().clone();
            (lo.clone(), Dyadic::from(lo.ceil_int() + 1))
        } else {
            (self.roots[t - 1].hi().clone(), self.roots[t].lo().clone())
        };
        (Dyadic::simplest_between(&lo, &hi), lo, hi)
    }

    /// Indices of the flagged roots.
    pub fn special_indices(&self) -> Vec<usize> {
        (0..self.roots.len()).filter(|&t| self.special[t]).collect()
    }

    /// Replace buffer `t` by the first candidate accepted by `ok`.
    fn choose_buffer(&mut self, t: usize, mut ok: impl FnMut(&Dyadic) -> Result<bool>) -> Result<()> {
        let (first, lo, hi) = self.gap(t);
        if ok(&first)? {
            self.buffers[t] = first;
            return Ok(());
        }
        let w = &hi - &lo;
        for s in 1..16 {
            let step = w.shl(-s);
            let mut j = 1i64;
            while j < (1i64 << s) {
                let cand = &lo + &(&step * &Dyadic::from(j));
                if cand != first && ok(&cand)? {
                    self.buffers[t] = cand;
                    return Ok(());
                }
                j += 2;
            }
        }
        Err(Error::Certification("no admissible buffer value".into()))
    }
}

/// Real roots of `F(z, .)` above a special value `alpha_i`.
#[derive(Debug)]
pub struct AlphaFiber {
    /// Position of `alpha_i` among the roots of `S_X`.
    pub index: usize,
    pub solution: FiberSolution,
    /// Indices of the real roots in `solution.roots`, bottom to top.
    pub reals: Vec<usize>,
    /// Multiplicity of each real root.
    pub mult: Vec<usize>,
    /// Level index `k(i, j)` of each critical root, by position in `reals`.
    pub level: Vec<Option<usize>>,
}

impl AlphaFiber {
    pub fn m(&self) -> usize {
        self.reals.len()
    }

    pub fn is_critical(&self, j: usize) -> bool {
        self.mult[j] > 1
    }

    /// Critical positions, 0-based.
    pub fn crit(&self) -> Vec<usize> {
        (0..self.m()).filter(|&j| self.is_critical(j)).collect()
    }

    pub fn interval(&self, j: usize) -> Interval {
        self.solution.real_interval(self.reals[j])
    }

    /// Refine every real root below radius `2^target`.
    pub fn refine(&mut self, target: i64) -> Result<()> {
        self.solution.refine_radius(target)?;
        self.reals = self.solution.real_indices();
        Ok(())
    }
}

/// Everything the counting stage needs.
#[derive(Debug)]
pub struct CadGrid {
    pub frame: FramePolys,
    pub x: Axis,
    pub y: Axis,
    /// Positions of the `alpha_i` in `x.roots`.
    pub alphas: Vec<usize>,
    pub fibers: Vec<AlphaFiber>,
    /// Roots of `P~(a, Y)` for each `x` buffer `a`.
    pub x_buffer_fibers: Vec<Vec<RealRoot>>,
    /// Roots of `P~(X, g)` for each `y` buffer `g`.
    pub y_buffer_fibers: Vec<Vec<RealRoot>>,
}

impl CadGrid {
    pub fn alpha(&self, i: usize) -> &RealRoot {
        &self.x.roots[self.alphas[i]]
    }

    /// `(alpha_i^-, alpha_i^+)`.
    pub fn x_buffers(&self, i: usize) -> (Dyadic, Dyadic) {
        let t = self.alphas[i];
        (self.x.buffers[t].clone(), self.x.buffers[t + 1].clone())
    }

    /// `(gamma_k^-, gamma_k^+)`.
    pub fn y_buffers(&self, k: usize) -> (Dyadic, Dyadic) {
        (self.y.buffers[k].clone(), self.y.buffers[k + 1].clone())
    }

    /// Roots of `P~(alpha_i^-, Y)` and `P~(alpha_i^+, Y)`.
    pub fn side_fibers(&self, i: usize) -> (&[RealRoot], &[RealRoot]) {
        let t = self.alphas[i];
        (&self.x_buffer_fibers[t], &self.x_buffer_fibers[t + 1])
    }
}

/// `P~(a, Y)` for rational `a`, as an integer polynomial.
pub fn fiber_poly_x(f: &IntPoly2, a: &Dyadic) -> IntPoly {
    f.specialize_x(&a.to_rational())
}

/// `P~(X, g)` for rational `g`, as an integer polynomial.
pub fn fiber_poly_y(f: &IntPoly2, g: &Dyadic) -> IntPoly {
    f.specialize_y(&g.to_rational())
}

/// Build the decomposition: grids, fibers over special values, level
/// matching and buffer selection. Requires `deg_X P~ > 0`, `deg_Y P~ > 0`.
pub fn build_grid(dec: &CurveDecomposition) -> Result<CadGrid> {
    let frame = frame_polys(dec)?;
    let x = Axis::new(&[(&frame.dx, true), (&frame.lc_y, true), (&frame.res_q, false)])?;
    let y = build_levels(&frame)?;
    let alphas = x.special_indices();
    let mut grid = CadGrid {
        frame,
        x,
        y,
        alphas,
        fibers: Vec::new(),
        x_buffer_fibers: Vec::new(),
        y_buffer_fibers: Vec::new(),
    };
    if grid.alphas.is_empty() {
        return Ok(grid);
    }
    // One filtration for the product of the distinct defining factors.
    let mut factors: Vec<IntPoly> = Vec::new();
    for &t in &grid.alphas {
        let f = grid.x.roots[t].poly.clone();
        if !factors.contains(&f) {
            factors.push(f);
        }
    }
    let r = factors.iter().fold(IntPoly::one(), |acc, f| &acc * f);
    let filt = degree_filtration(&r, &dec.ptilde)?;
    for &t in &grid.alphas {
        let root = grid.x.roots[t].clone();
        let mut base = AlgebraicNumber::Real(root);
        let (n, k) = filt.degrees_at(&mut base)?;
        let solution = FiberSolution::new(&dec.ptilde, base, 1, n, k)?;
        let reals = solution.real_indices();
        let mult = reals.iter().map(|&q| solution.roots[q].multiplicity).collect();
        grid.fibers.push(AlphaFiber { index: t, solution, level: vec![None; reals.len()], reals, mult });
    }
    match_levels(&mut grid)?;
    disambiguate(&mut grid, &dec.ptilde, &dec.q)?;
    Ok(grid)
}

/// The `y` side: roots of `S_Y` with buffers.
pub fn build_levels(frame: &FramePolys) -> Result<Axis> {
    Axis::new(&[(&frame.dy, true), (&frame.res_p, true), (&frame.lc_x, true)])
}

/// `k(i, j)` for every critical `(alpha_i, beta_ij)`: refine until the
/// fiber interval meets exactly one level interval.
pub fn match_levels(grid: &mut CadGrid) -> Result<()> {
    let CadGrid { fibers, y, .. } = grid;
    for fib in fibers.iter_mut() {
        for j in 0..fib.m() {
            if !fib.is_critical(j) {
                continue;
            }
            let mut prec = 4i64;
            loop {
                let iv = fib.interval(j);
                let hits: Vec<usize> = (0..y.roots.len()).filter(|&k| y.roots[k].interval.overlaps(&iv)).collect();
                if hits.len() == 1 {
                    fib.level[j] = Some(hits[0]);
                    break;
                }
                if hits.is_empty() || prec > PRECISION_CAP {
                    return Err(Error::Certification("critical point without a level".into()));
                }
                prec *= 2;
                fib.refine(-prec)?;
                for k in hits {
                    y.roots[k].refine_to(prec);
                }
            }
        }
    }
    Ok(())
}

/// Choose buffers away from every coincidence, compute the buffer fibers
/// and refine the special fibers until their intervals avoid all `y`
/// buffers and the buffer fibers avoid all buffers of the other axis.
///
/// Afterwards no corner `(alpha^±, gamma^±)` and no point `(alpha_i, gamma^±)`
/// lies on the curve, and a point `(alpha^±, gamma_k)` does only when
/// `Y = gamma_k` is a horizontal line of the curve. `q` is `f` without its
/// horizontal lines.
pub fn disambiguate(grid: &mut CadGrid, f: &IntPoly2, q: &IntPoly2) -> Result<()> {
    // y buffers: P~(alpha_i, g) != 0 for all i.
    let alphas: Vec<RealRoot> = grid.alphas.iter().map(|&t| grid.x.roots[t].clone()).collect();
    for t in 0..grid.y.buffers.len() {
        grid.y.choose_buffer(t, |g| {
            let h = fiber_poly_y(f, g);
            Ok(!h.is_zero() && alphas.iter().all(|a| !root_of(&h, a)))
        })?;
    }
    // x buffers: Q(a, gamma_k) != 0 and P~(a, g) != 0.
    let levels = grid.y.roots.clone();
    let ybuf = grid.y.buffers.clone();
    for t in 0..grid.x.buffers.len() {
        grid.x.choose_buffer(t, |a| {
            let h = fiber_poly_x(q, a);
            if h.is_zero() {
                return Ok(false);
            }
            let ar = a.to_rational();
            Ok(levels.iter().all(|g| !root_of(&h, g)) && ybuf.iter().all(|g| !f.eval_exact(&ar, &g.to_rational()).is_zero()))
        })?;
    }
    let xbuf = grid.x.buffers.clone();
    grid.x_buffer_fibers = Vec::with_capacity(xbuf.len());
    for a in &xbuf {
        let mut rs = isolate_real_roots(&fiber_poly_x(f, a))?;
        separate(&mut rs, &ybuf);
        grid.x_buffer_fibers.push(rs);
    }
    grid.y_buffer_fibers = Vec::with_capacity(ybuf.len());
    for g in &ybuf {
        let mut rs = isolate_real_roots(&fiber_poly_y(f, g))?;
        separate(&mut rs, &xbuf);
        grid.y_buffer_fibers.push(rs);
    }
    for fib in grid.fibers.iter_mut() {
        let mut prec = 8i64;
        while !(0..fib.m()).all(|j| {
            let iv = fib.interval(j);
            ybuf.iter().all(|g| !iv.contains(g))
        }) {
            if prec > PRECISION_CAP {
                return Err(Error::Budget("separating fiber roots from buffers".into()));
            }
            prec *= 2;
            fib.refine(-prec)?;
        }
    }
    Ok(())
}

/// Refine roots until no interval contains any of the given values; the
/// values must not be roots.
fn separate(roots: &mut [RealRoot], values: &[Dyadic]) {
    for r in roots.iter_mut() {
        let mut prec = -r.width().magnitude_exp().max(-8);
        while values.iter().any(|v| r.interval.contains(v)) && !r.interval.is_point() {
            prec += 8;
            r.refine_to(prec);
        }
    }
}

/// Exact comparison of a real root with a dyadic that is not a root.
pub fn cmp_root(r: &RealRoot, v: &Dyadic) -> Ordering {
    if r.interval.is_point() {
        return r.interval.lo.cmp(v);
    }
    if &r.interval.hi < v {
        Ordering::Less
    } else if &r.interval.lo > v {
        Ordering::Greater
    } else {
        let mut r = r.clone();
        let mut prec = -r.width().magnitude_exp();
        while r.interval.contains(v) && !r.interval.is_point() {
            prec += 8;
            r.refine_to(prec);
            assert!(prec < PRECISION_CAP, "comparing a root with one of its own values");
        }
        cmp_root(&r, v)
    }
}

/// Sign of `-dP/dX / dP/dY` at `(a, eta)` with rational `a` and a real root
/// `eta` of `P(a, Y)`.
pub fn slope_at_x(f: &IntPoly2, a: &Dyadic, eta: &mut RealRoot) -> Result<i32> {
    let px = fiber_poly_x(&f.diff_x(), a);
    let py = fiber_poly_x(&f.diff_y(), a);
    slope_sign(sign_at_root(&px, eta), sign_at_root(&py, eta))
}

/// Sign of the slope at `(xi, g)` with rational `g` and a real root `xi` of
/// `P(X, g)`.
pub fn slope_at_y(f: &IntPoly2, g: &Dyadic, xi: &mut RealRoot) -> Result<i32> {
    let px = fiber_poly_y(&f.diff_x(), g);
    let py = fiber_poly_y(&f.diff_y(), g);
    slope_sign(sign_at_root(&px, xi), sign_at_root(&py, xi))
}

/// Sign of the slope at `(alpha_i, beta)` for a regular, non-horizontal
/// real fiber point, by interval evaluation.
pub fn slope_at_fiber(f: &IntPoly2, fib: &mut AlphaFiber, j: usize) -> Result<i32> {
    let (fx, fy) = (f.diff_x(), f.diff_y());
    let q = fib.reals[j];
    let mut prec = 16;
    loop {
        let (x, y) = fib.solution.real_point(q, prec)?;
        fib.reals = fib.solution.real_indices();
        let sx = fx.eval_real_box(&x, &y).sign();
        let sy = fy.eval_real_box(&x, &y).sign();
        if let (Some(a), Some(b)) = (sx, sy) {
            if a != 0 && b != 0 {
                return slope_sign(a, b);
            }
        }
        prec *= 2;
        if prec > PRECISION_CAP {
            return Err(Error::Budget("slope at a fiber point".into()));
        }
    }
}

fn slope_sign(sx: i32, sy: i32) -> Result<i32> {
    if sx == 0 || sy == 0 {
        return Err(Error::Certification("slope undefined or horizontal at a boundary point".into()));
    }
    Ok(-sx * sy)
}

/// Vertical asymptote counts `[Left_{i,0}, Right_{i,0}, Left_{i,m+1}, Right_{i,m+1}]`.
///
/// Every branch tending to `-inf` crosses a low rational level below all
/// critical levels and all special fibers exactly once, and its slope there
/// tells on which side of which `alpha` it ends. The high level is symmetric.
pub fn asymptote_counts(grid: &CadGrid, f: &IntPoly2) -> Result<Vec<[usize; 4]>> {
    let n = grid.alphas.len();
    let mut out = vec![[0usize; 4]; n];
    if n == 0 {
        return Ok(out);
    }
    let mut low = grid.y.buffers[0].clone();
    let mut high = grid.y.buffers[grid.y.buffers.len() - 1].clone();
    for fib in &grid.fibers {
        for j in 0..fib.m() {
            let iv = fib.interval(j);
            low = low.min(iv.lo.clone());
            high = high.max(iv.hi.clone());
        }
    }
    let low = Dyadic::from(low.floor_int() - 1);
    let high = Dyadic::from(high.ceil_int() + 1);
    for (level, top) in [(low, false), (high, true)] {
        let h = fiber_poly_y(f, &level);
        for mut xi in isolate_real_roots(&h)? {
            let s = slope_at_y(f, &level, &mut xi)?;
            // Strip index: number of alphas below xi.
            let mut strip = 0;
            for i in 0..n {
                let mut a = grid.alpha(i).clone();
                match a.compare(&mut xi) {
                    Ordering::Less => strip = i + 1,
                    Ordering::Equal => return Err(Error::Certification("asymptote level meets a special fiber".into())),
                    Ordering::Greater => break,
                }
            }
            // (going down, slope > 0) and (going up, slope < 0) end at the left alpha.
            let to_left_alpha = (s > 0) != top;
            if to_left_alpha {
                if strip >= 1 {
                    out[strip - 1][if top { 3 } else { 1 }] += 1;
                }
            } else if strip < n {
                out[strip][if top { 2 } else { 0 }] += 1;
            }
        }
    }
    Ok(out)
}

/// Number of distinct real roots of `P~(a, Y)`.
pub fn real_root_count(f: &IntPoly2, a: &Dyadic) -> Result<usize> {
    let h = fiber_poly_x(f, a);
    if h.is_zero() {
        return Err(Error::Certification("sample fiber vanishes identically".into()));
    }
    Ok(isolate_real_roots(&h)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn p2(terms: &[(usize, usize, i64)]) -> IntPoly2 {
        IntPoly2::from_terms(terms.iter().copied())
    }

    fn circle() -> IntPoly2 {
        p2(&[(2, 0, 1), (0, 2, 1), (0, 0, -1)])
    }

    #[test]
    fn split_vertical_content() {
        // X Y^2 - X^2 = X (Y^2 - X)
        let dec = split_lines(&p2(&[(1, 2, 1), (2, 0, -1)])).unwrap();
        assert_eq!(dec.c, IntPoly::from_i64s(&[0, 1]));
        assert_eq!(dec.ptilde, p2(&[(0, 2, 1), (1, 0, -1)]));
        let dec = split_lines(&p2(&[(0, 2, 1), (1, 0, -1)])).unwrap();
        assert_eq!(dec.c.deg(), 0);
        assert_eq!(dec.d.deg(), 0);
    }

    #[test]
    fn not_square_free() {
        let f = p2(&[(0, 2, 1), (1, 0, -1)]);
        assert_eq!(split_lines(&(&f * &f)).unwrap_err(), Error::NotSquareFree);
        let xx = p2(&[(2, 1, 1), (2, 0, 1)]);
        assert_eq!(split_lines(&xx).unwrap_err(), Error::NotSquareFree);
    }

    #[test]
    fn circle_frame_and_grid() {
        let dec = split_lines(&circle()).unwrap();
        let frame = frame_polys(&dec).unwrap();
        // Disc_Y(Y^2 + X^2 - 1) is 4 (X^2 - 1) up to the sign convention.
        let dx = &frame.dx;
        assert!(*dx == IntPoly::from_i64s(&[4, 0, -4]) || *dx == IntPoly::from_i64s(&[-4, 0, 4]));
        let grid = build_grid(&dec).unwrap();
        assert_eq!(grid.alphas.len(), 2);
        assert_eq!(grid.y.roots.len(), 3);
        for fib in &grid.fibers {
            assert_eq!(fib.m(), 1);
            assert_eq!(fib.mult, vec![2]);
            assert_eq!(fib.level[0], Some(1));
        }
        assert_eq!(asymptote_counts(&grid, &dec.ptilde).unwrap(), vec![[0; 4]; 2]);
    }

    #[test]
    fn parabola_vertex() {
        let dec = split_lines(&p2(&[(0, 2, 1), (1, 0, -1)])).unwrap();
        let grid = build_grid(&dec).unwrap();
        assert_eq!(grid.alphas.len(), 1);
        assert!(grid.alpha(0).as_rational().unwrap().is_zero());
        assert_eq!(grid.y.special_indices().len(), 1);
    }

    #[test]
    fn hyperbola_asymptotes() {
        let dec = split_lines(&p2(&[(1, 1, 1), (0, 0, -1)])).unwrap();
        let grid = build_grid(&dec).unwrap();
        assert_eq!(grid.alphas.len(), 1);
        assert_eq!(grid.fibers[0].m(), 0);
        // [Left_0, Right_0, Left_top, Right_top]
        assert_eq!(asymptote_counts(&grid, &dec.ptilde).unwrap(), vec![[1, 0, 0, 1]]);
    }

    #[test]
    fn buffers_avoid_the_curve() {
        let dec = split_lines(&circle()).unwrap();
        let grid = build_grid(&dec).unwrap();
        for a in &grid.x.buffers {
            for g in &grid.y.buffers {
                assert!(!dec.ptilde.eval_exact(&a.to_rational(), &g.to_rational()).is_zero());
            }
        }
    }

    fn example_grid() -> (CurveDecomposition, CadGrid) {
        let a = p2(&[(1, 1, 1), (0, 0, -1)]);
        let b = p2(&[(0, 2, 4), (1, 0, -4), (0, 0, -1)]);
        let c = p2(&[(0, 2, 4), (1, 0, 4), (0, 0, -1)]);
        let dec = split_lines(&(&(&a * &b) * &c)).unwrap();
        let grid = build_grid(&dec).unwrap();
        (dec, grid)
    }

    #[test]
    fn example_special_fibers() {
        let (dec, grid) = example_grid();
        assert_eq!(grid.alphas.len(), 5);
        // alpha_2 = -1/4: roots -4, -1/sqrt 2, 0 (double), 1/sqrt 2.
        let f2 = &grid.fibers[1];
        assert_eq!(grid.alpha(1).as_rational(), Some(BigRational::new(int(-1), int(4))));
        assert_eq!(f2.mult, vec![1, 1, 2, 1]);
        assert_eq!(f2.crit(), vec![2]);
        assert!(f2.interval(0).contains(&Dyadic::from(-4)));
        assert!(f2.interval(2).contains(&Dyadic::zero()));
        // alpha_3 = 0: roots -1/2 and 1/2, both double.
        let f3 = &grid.fibers[2];
        assert!(grid.alpha(2).as_rational().unwrap().is_zero());
        assert_eq!(f3.mult, vec![2, 2]);
        for (j, v) in [(0, -1), (1, 1)] {
            let k = f3.level[j].unwrap();
            assert!(grid.y.roots[k].interval.contains(&Dyadic::from(v).shl(-1)));
        }
        let asym = asymptote_counts(&grid, &dec.ptilde).unwrap();
        assert_eq!(asym[2], [1, 0, 0, 1]);
        for i in [0, 1, 3, 4] {
            assert_eq!(asym[i], [0; 4]);
        }
    }

    #[test]
    fn horizontal_line_through_a_singular_point() {
        // Y (Y^2 - X^2): a level buffer may never sit on Y = 0, yet x buffers
        // must accept the line.
        let dec = split_lines(&p2(&[(0, 3, 1), (2, 1, -1)])).unwrap();
        assert_eq!(dec.d, IntPoly::from_i64s(&[0, 1]));
        let grid = build_grid(&dec).unwrap();
        assert_eq!(grid.fibers[0].mult, vec![3]);
    }

}
