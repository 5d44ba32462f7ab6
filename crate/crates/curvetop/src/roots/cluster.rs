//! Certified root clusters of polynomials with refinable coefficients.
//!
//! The caller knows how many distinct roots the polynomial has. Aberth's
//! method produces approximations at a working precision, single-linkage
//! clustering groups them into exactly that many clusters, and each cluster
//! is certified by Pellet's test on a disk whose radius is far below the
//! distance to the other clusters. Since the disks are disjoint and there
//! are as many of them as distinct roots, each contains exactly one root,
//! with multiplicity equal to the certified count. Failure at any stage
//! doubles the precision and tries again.

use crate::error::{Error, Result};
use crate::exactnum::{ComplexInterval, Disk, Dyadic, Gaussian, PRECISION_CAP};
use crate::upoly::IntPoly;

/// Source of coefficient enclosures, lowest degree first.
pub trait CoefficientOracle {
    fn degree(&self) -> usize;

    /// Enclosures whose real and imaginary widths are at most `2^-prec`.
    fn coefficients(&mut self, prec: i64) -> Result<Vec<ComplexInterval>>;
}

/// Coefficients known exactly.
#[derive(Clone, Debug)]
pub struct ExactCoefficients {
    coeffs: Vec<ComplexInterval>,
}

impl ExactCoefficients {
    pub fn new(f: &IntPoly) -> Self {
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| ComplexInterval::point(&Gaussian::real(Dyadic::from(c.clone()))))
            .collect();
        ExactCoefficients { coeffs }
    }
}

impl CoefficientOracle for ExactCoefficients {
    fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn coefficients(&mut self, _prec: i64) -> Result<Vec<ComplexInterval>> {
        Ok(self.coeffs.clone())
    }
}

/// A certified disk containing one distinct root of the given multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cluster {
    pub disk: Disk,
    pub multiplicity: usize,
    /// Distance from the centre to the nearest other centre, which is within
    /// a few percent of the root separation. `None` for a single cluster.
    pub separation: Option<Dyadic>,
}

/// Adaptive cluster isolation for one polynomial.
pub struct ClusterEngine<O> {
    oracle: O,
    distinct: usize,
    prec: i64,
    approx: Vec<Gaussian>,
    clusters: Vec<Cluster>,
}

impl<O: CoefficientOracle> ClusterEngine<O> {
    /// `distinct` is the number of distinct complex roots.
    pub fn new(oracle: O, distinct: usize) -> Self {
        ClusterEngine { oracle, distinct, prec: 64, approx: Vec::new(), clusters: Vec::new() }
    }

    pub fn degree(&self) -> usize {
        self.oracle.degree()
    }

    pub fn precision(&self) -> i64 {
        self.prec
    }

    pub fn oracle_mut(&mut self) -> &mut O {
        &mut self.oracle
    }

    /// Certified clusters, each disk of radius at most `2^target` when given.
    ///
    /// Disks are always well isolated: radius times `65 n` is below the gap
    /// to every other disk.
    pub fn isolate(&mut self, target: Option<i64>) -> Result<Vec<Cluster>> {
        let n = self.oracle.degree();
        if n == 0 {
            return Ok(Vec::new());
        }
        if self.distinct == 0 || self.distinct > n {
            return Err(Error::Certification(format!("{} distinct roots for degree {n}", self.distinct)));
        }
        if !self.clusters.is_empty() && fits(&self.clusters, target) {
            return Ok(self.clusters.clone());
        }
        loop {
            if self.prec > PRECISION_CAP {
                return Err(Error::Budget("cluster isolation did not converge".into()));
            }
            if let Some(c) = self.attempt(target)? {
                self.clusters = c;
                return Ok(self.clusters.clone());
            }
            self.prec *= 2;
        }
    }

    fn attempt(&mut self, target: Option<i64>) -> Result<Option<Vec<Cluster>>> {
        let n = self.oracle.degree();
        let coeffs = self.oracle.coefficients(self.prec)?;
        if coeffs.len() != n + 1 || coeffs[n].contains_zero() {
            return Ok(None);
        }
        let w = (self.prec + 32) as u64;
        let mids: Vec<Gaussian> = coeffs.iter().map(|c| c.mid()).collect();
        if self.approx.len() != n {
            self.approx = initial_points(&mids, w);
            aberth(&mids, &mut self.approx, w, 300 + 8 * n);
        } else {
            aberth(&mids, &mut self.approx, w, 80 + 2 * n);
        }
        let groups = single_linkage(&self.approx, self.distinct);
        let mut centers = Vec::with_capacity(groups.len());
        let mut spreads = Vec::with_capacity(groups.len());
        for g in &groups {
            let pts: Vec<&Gaussian> = g.iter().map(|&i| &self.approx[i]).collect();
            let c = refine_center(&mids, &pts, w);
            let spread = pts.iter().map(|z| abs_upper_pow2(&(*z - &c))).max().unwrap_or_else(Dyadic::zero);
            centers.push(c);
            spreads.push(spread);
        }
        let log_n = ceil_log2(132 * n as u64);
        let bits = w + 64;
        let mut clusters = Vec::with_capacity(groups.len());
        for (i, g) in groups.iter().enumerate() {
            let k = g.len();
            let mut nearest: Option<Dyadic> = None;
            for (j, cj) in centers.iter().enumerate() {
                if i != j {
                    let d = abs_lower(&(&centers[i] - cj), w);
                    if nearest.as_ref().is_none_or(|m| d < *m) {
                        nearest = Some(d);
                    }
                }
            }
            let need = (&spreads[i] * &Dyadic::from((4 * k) as i64)).max(Dyadic::pow2(-(self.prec / (2 * k as i64))));
            let need_exp = pow2_ceil_exp(&need);
            let cap_exp = match (&nearest, target) {
                (Some(d), t) if !d.is_zero() => {
                    let e = d.magnitude_exp() - 1 - log_n;
                    Some(t.map_or(e, |t| t.min(e)))
                }
                (Some(_), _) => return Ok(None),
                (None, t) => t,
            };
            let r_exp = match cap_exp {
                Some(cap) if need_exp > cap => return Ok(None),
                Some(cap) => cap,
                None => need_exp,
            };
            if !pellet(&coeffs, &centers[i], r_exp, k, bits) {
                return Ok(None);
            }
            clusters.push(Cluster {
                disk: Disk::new(centers[i].clone(), Dyadic::pow2(r_exp)),
                multiplicity: k,
                separation: nearest,
            });
        }
        // Disjointness, with the margin that makes the disks well isolated.
        for i in 0..clusters.len() {
            for j in i + 1..clusters.len() {
                let (a, b) = (&clusters[i].disk, &clusters[j].disk);
                let gap = a.gap_lower(b, w as i64);
                let big = a.radius.clone().max(b.radius.clone());
                if gap <= &big * &Dyadic::from((65 * n) as i64) {
                    return Ok(None);
                }
            }
        }
        clusters.sort_by(|a, b| a.disk.center.re.cmp(&b.disk.center.re).then(a.disk.center.im.cmp(&b.disk.center.im)));
        Ok(Some(clusters))
    }
}

fn fits(clusters: &[Cluster], target: Option<i64>) -> bool {
    match target {
        None => true,
        Some(t) => clusters.iter().all(|c| c.disk.radius <= Dyadic::pow2(t)),
    }
}

/// Pellet's test: `|g_k| > sum_{i != k} |g_i|` for `g(x) = f(c + 2^e x)`.
pub fn pellet(coeffs: &[ComplexInterval], c: &Gaussian, e: i64, k: usize, bits: u64) -> bool {
    let g = shifted(coeffs, c, e, bits);
    let gk = &g[k];
    if gk.contains_zero() {
        return false;
    }
    let scale = gk.re.mag().max(gk.im.mag()).magnitude_exp();
    let p = bits as i64 - scale;
    let lower = gk.abs_lower(p);
    let mut rest = Dyadic::zero();
    for (i, gi) in g.iter().enumerate() {
        if i != k {
            rest = &rest + &gi.abs_upper(p);
        }
    }
    lower > rest
}

/// Coefficient enclosures of `f(c + 2^e x)`.
pub fn shifted(coeffs: &[ComplexInterval], c: &Gaussian, e: i64, bits: u64) -> Vec<ComplexInterval> {
    let cz = ComplexInterval::point(c);
    let mut g = coeffs.to_vec();
    let n = g.len();
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let t = &g[j + 1] * &cz;
            g[j] = (&g[j] + &t).round_rel(bits);
        }
    }
    g.iter().enumerate().map(|(i, gi)| gi.scale_pow2(e * i as i64)).collect()
}

/// Points on a circle enclosing every root, slightly rotated off the axes.
fn initial_points(mids: &[Gaussian], w: u64) -> Vec<Gaussian> {
    let n = mids.len() - 1;
    let en = mag_exp(&mids[n]);
    // Fujiwara-style bound as a power of two.
    let mut e = 0i64;
    for (i, a) in mids.iter().enumerate().take(n) {
        if a.re.is_zero() && a.im.is_zero() {
            continue;
        }
        let d = (n - i) as i64;
        let q = (mag_exp(a) - en + 1).div_euclid(d) + 1;
        e = e.max(q);
    }
    (0..n)
        .map(|k| {
            let t = std::f64::consts::TAU * (k as f64 + 0.3) / n as f64 + 0.4;
            let (s, c) = t.sin_cos();
            let z = Gaussian::new(Dyadic::from_f64(c), Dyadic::from_f64(s));
            let z = Gaussian::new(z.re.round_bits(40), z.im.round_bits(40));
            round(&(&z * &Gaussian::real(Dyadic::pow2(e))), w)
        })
        .collect()
}

fn mag_exp(z: &Gaussian) -> i64 {
    z.re.magnitude_exp().max(z.im.magnitude_exp())
}

fn round(z: &Gaussian, w: u64) -> Gaussian {
    Gaussian::new(z.re.round_bits(w), z.im.round_bits(w))
}

fn is_zero(z: &Gaussian) -> bool {
    z.re.is_zero() && z.im.is_zero()
}

/// `a / b` to about `w` relative bits.
fn cdiv(a: &Gaussian, b: &Gaussian, w: u64) -> Gaussian {
    let den = b.norm_sq();
    let num = a * &b.conj();
    let ne = mag_exp(&num);
    if ne == i64::MIN {
        return Gaussian::zero();
    }
    let p = w as i64 - (ne - den.magnitude_exp());
    Gaussian::new(Dyadic::div_floor(&num.re, &den, p), Dyadic::div_floor(&num.im, &den, p))
}

/// Value and derivative by Horner's rule.
fn eval_with_derivative(c: &[Gaussian], z: &Gaussian, w: u64) -> (Gaussian, Gaussian) {
    let mut p = Gaussian::zero();
    let mut d = Gaussian::zero();
    for a in c.iter().rev() {
        d = round(&(&(&d * z) + &p), w);
        p = round(&(&(&p * z) + a), w);
    }
    (p, d)
}

/// Gauss-Seidel Aberth iteration in place.
fn aberth(c: &[Gaussian], z: &mut [Gaussian], w: u64, max_iter: usize) {
    let n = z.len();
    let half = (w / 2) as i64;
    for _ in 0..max_iter {
        let mut converged = true;
        for i in 0..n {
            let (p, d) = eval_with_derivative(c, &z[i], w);
            if is_zero(&p) {
                continue;
            }
            if is_zero(&d) {
                // Nudge off a critical point.
                let bump = Dyadic::pow2(mag_exp(&z[i]).max(0) - half);
                z[i] = Gaussian::new(&z[i].re + &bump, &z[i].im + &bump);
                converged = false;
                continue;
            }
            let ratio = cdiv(&p, &d, w);
            let mut s = Gaussian::zero();
            for j in 0..n {
                if j == i {
                    continue;
                }
                let diff = &z[i] - &z[j];
                if is_zero(&diff) {
                    continue;
                }
                s = &s + &cdiv(&Gaussian::real(Dyadic::one()), &diff, w);
            }
            let denom = &Gaussian::real(Dyadic::one()) - &round(&(&ratio * &s), w);
            let step = if is_zero(&denom) { ratio } else { cdiv(&ratio, &denom, w) };
            if mag_exp(&step) > mag_exp(&z[i]).max(0) - half {
                converged = false;
            }
            z[i] = round(&(&z[i] - &step), w);
        }
        if converged {
            return;
        }
    }
}

/// Cluster the points into exactly `m` groups by single linkage.
fn single_linkage(z: &[Gaussian], m: usize) -> Vec<Vec<usize>> {
    let n = z.len();
    let mut edges: Vec<(Dyadic, usize, usize)> = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            edges.push(((&z[i] - &z[j]).norm_sq(), i, j));
        }
    }
    edges.sort_by(|a, b| a.0.cmp(&b.0));
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut components = n;
    for (_, i, j) in edges {
        if components == m {
            break;
        }
        let (a, b) = (find(&mut parent, i), find(&mut parent, j));
        if a != b {
            parent[a] = b;
            components -= 1;
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut index = vec![usize::MAX; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        if index[r] == usize::MAX {
            index[r] = groups.len();
            groups.push(Vec::new());
        }
        groups[index[r]].push(i);
    }
    groups
}

/// Mean of the cluster, polished by Newton on `f^(k-1)` which has a simple
/// root there.
fn refine_center(c: &[Gaussian], pts: &[&Gaussian], w: u64) -> Gaussian {
    let k = pts.len();
    let mut sum = Gaussian::zero();
    for p in pts {
        sum = &sum + p;
    }
    let kd = Dyadic::from(k as i64);
    let bits = w as i64 - mag_exp(&sum).clamp(-(w as i64), 0);
    let mean = Gaussian::new(Dyadic::div_floor(&sum.re, &kd, bits), Dyadic::div_floor(&sum.im, &kd, bits));
    if k == 1 {
        return round(&mean, w);
    }
    let mut d: Vec<Gaussian> = c.to_vec();
    for _ in 0..k - 1 {
        d = d
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, a)| a * &Gaussian::real(Dyadic::from(i as i64)))
            .collect();
    }
    let spread = pts.iter().map(|z| abs_upper_pow2(&(*z - &mean))).max().unwrap_or_else(Dyadic::zero);
    let mut z = mean.clone();
    for _ in 0..12 {
        let (p, dp) = eval_with_derivative(&d, &z, w);
        if is_zero(&p) || is_zero(&dp) {
            break;
        }
        let step = cdiv(&p, &dp, w);
        z = round(&(&z - &step), w);
        if abs_upper_pow2(&(&z - &mean)) > spread.shl(1) {
            return round(&mean, w);
        }
        if mag_exp(&step) < mag_exp(&z).max(0) - w as i64 + 8 {
            break;
        }
    }
    z
}

/// A power of two at least `|z|` (zero for zero).
pub fn abs_upper_pow2(z: &Gaussian) -> Dyadic {
    let n = z.norm_sq();
    if n.is_zero() {
        return Dyadic::zero();
    }
    // |z|^2 < 2^e, so |z| < 2^ceil(e/2).
    Dyadic::pow2((n.magnitude_exp() + 1).div_euclid(2))
}

/// Lower bound on `|z|` with about `w` bits.
fn abs_lower(z: &Gaussian, w: u64) -> Dyadic {
    let n = z.norm_sq();
    if n.is_zero() {
        return Dyadic::zero();
    }
    let p = w as i64 - n.magnitude_exp() / 2;
    n.sqrt_floor(p)
}

/// Smallest `e` with `x <= 2^e` (for `x > 0`).
fn pow2_ceil_exp(x: &Dyadic) -> i64 {
    let e = x.magnitude_exp();
    if x.abs() == Dyadic::pow2(e - 1) {
        e - 1
    } else {
        e
    }
}

fn ceil_log2(v: u64) -> i64 {
    64 - (v - 1).leading_zeros() as i64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn engine(c: &[i64], m: usize) -> ClusterEngine<ExactCoefficients> {
        ClusterEngine::new(ExactCoefficients::new(&IntPoly::from_i64s(c)), m)
    }

    #[test]
    fn imaginary_unit() {
        let cl = engine(&[1, 0, 1], 2).isolate(None).unwrap();
        assert_eq!(cl.len(), 2);
        let i = Gaussian::new(Dyadic::zero(), Dyadic::one());
        assert!(cl.iter().any(|c| c.disk.contains(&i)));
        assert!(cl.iter().any(|c| c.disk.contains(&i.conj())));
        assert!(cl.iter().all(|c| !c.disk.meets_real_axis()));
    }

    #[test]
    fn triple_root() {
        let cl = engine(&[0, 0, 0, 1], 1).isolate(None).unwrap();
        assert_eq!(cl.len(), 1);
        assert_eq!(cl[0].multiplicity, 3);
        assert!(cl[0].disk.contains(&Gaussian::zero()));
    }

    #[test]
    fn mixed_multiplicities_with_target() {
        // (X - 1)^2 (X + 2) (X^2 + 1)
        let f = &IntPoly::from_i64s(&[2, -3, 0, 1]) * &IntPoly::from_i64s(&[1, 0, 1]);
        let mut e = ClusterEngine::new(ExactCoefficients::new(&f), 4);
        let cl = e.isolate(Some(-40)).unwrap();
        assert_eq!(cl.iter().map(|c| c.multiplicity).sum::<usize>(), 5);
        let one = Gaussian::real(Dyadic::one());
        let c1 = cl.iter().find(|c| c.disk.contains(&one)).unwrap();
        assert_eq!(c1.multiplicity, 2);
        assert!(cl.iter().all(|c| c.disk.radius <= Dyadic::pow2(-40)));
    }

    #[test]
    fn wilkinson_like() {
        let mut f = IntPoly::from_i64s(&[1]);
        for k in 1..=12 {
            f = &f * &IntPoly::from_i64s(&[-k, 1]);
        }
        let cl = engine(f.coeffs().iter().map(|c| i64::try_from(c.clone()).unwrap()).collect::<Vec<_>>().as_slice(), 12)
            .isolate(None)
            .unwrap();
        assert_eq!(cl.len(), 12);
        for k in 1..=12 {
            assert!(cl.iter().any(|c| c.disk.contains(&Gaussian::real(Dyadic::from(k)))));
        }
    }
}
