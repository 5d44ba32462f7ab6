//! Exact rational interval arithmetic on term lists, written independently
//! of the library, with two oracles built on it: counting curve crossings
//! along a sampled path and certifying real solutions of a system.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// `sum c x^i y^j`.
#[derive(Clone, Debug)]
pub struct Terms(pub Vec<(usize, usize, BigInt)>);

impl Terms {
    pub fn eval(&self, x: &Q, y: &Q) -> Q {
        self.0.iter().fold(Q::zero(), |acc, (i, j, c)| {
            acc + Q::from_integer(c.clone()) * pow(x, *i) * pow(y, *j)
        })
    }

    pub fn dx(&self) -> Terms {
        Terms(self.0.iter().filter(|t| t.0 > 0).map(|(i, j, c)| (i - 1, *j, c * BigInt::from(*i))).collect())
    }

    pub fn dy(&self) -> Terms {
        Terms(self.0.iter().filter(|t| t.1 > 0).map(|(i, j, c)| (*i, j - 1, c * BigInt::from(*j))).collect())
    }

    pub fn eval_box(&self, x: &Iv, y: &Iv) -> Iv {
        self.0.iter().fold(Iv::point(Q::zero()), |acc, (i, j, c)| {
            acc.add(&x.pow(*i).mul(&y.pow(*j)).scale(&Q::from_integer(c.clone())))
        })
    }
}

fn pow(x: &Q, k: usize) -> Q {
    (0..k).fold(Q::one(), |acc, _| acc * x)
}

/// Closed rational interval.
#[derive(Clone, Debug, PartialEq)]
pub struct Iv {
    pub lo: Q,
    pub hi: Q,
}

impl Iv {
    pub fn new(lo: Q, hi: Q) -> Iv {
        assert!(lo <= hi);
        Iv { lo, hi }
    }

    pub fn point(v: Q) -> Iv {
        Iv { lo: v.clone(), hi: v }
    }

    pub fn add(&self, o: &Iv) -> Iv {
        Iv::new(&self.lo + &o.lo, &self.hi + &o.hi)
    }

    pub fn sub(&self, o: &Iv) -> Iv {
        Iv::new(&self.lo - &o.hi, &self.hi - &o.lo)
    }

    pub fn mul(&self, o: &Iv) -> Iv {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Iv::new(lo, hi)
    }

    pub fn scale(&self, s: &Q) -> Iv {
        if s.is_negative() {
            Iv::new(&self.hi * s, &self.lo * s)
        } else {
            Iv::new(&self.lo * s, &self.hi * s)
        }
    }

    /// Tight power: even powers of an interval containing zero start at zero.
    pub fn pow(&self, k: usize) -> Iv {
        if k == 0 {
            return Iv::point(Q::one());
        }
        let (a, b) = (pow(&self.lo, k), pow(&self.hi, k));
        if k % 2 == 1 {
            Iv::new(a, b)
        } else if self.lo.is_negative() && self.hi.is_positive() {
            Iv::new(Q::zero(), a.max(b))
        } else {
            Iv::new(a.clone().min(b.clone()), a.max(b))
        }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn mid(&self) -> Q {
        (&self.lo + &self.hi) / Q::from_integer(2.into())
    }

    pub fn width(&self) -> Q {
        &self.hi - &self.lo
    }

    pub fn strictly_inside(&self, o: &Iv) -> bool {
        o.lo < self.lo && self.hi < o.hi
    }

    pub fn meet(&self, o: &Iv) -> Option<Iv> {
        let lo = self.lo.clone().max(o.lo.clone());
        let hi = self.hi.clone().min(o.hi.clone());
        (lo <= hi).then(|| Iv::new(lo, hi))
    }
}

/// Number of sign changes of `p` along a polyline, sampled at the
/// midpoints of `steps` equal pieces of each segment so that corners and
/// dyadic grid points are never hit. Panics on an exact zero.
pub fn sign_changes(p: &Terms, path: &[(Q, Q)], steps: usize) -> usize {
    let mut last = 0i32;
    let mut changes = 0;
    for w in path.windows(2) {
        let ((x0, y0), (x1, y1)) = (&w[0], &w[1]);
        for s in 0..steps {
            let t = q(2 * s as i64 + 1, 2 * steps as i64);
            let x = x0 + (x1 - x0) * &t;
            let y = y0 + (y1 - y0) * &t;
            let v = p.eval(&x, &y);
            assert!(!v.is_zero(), "sample point ({x}, {y}) on the curve");
            let sg = if v.is_positive() { 1 } else { -1 };
            if last != 0 && sg != last {
                changes += 1;
            }
            last = sg;
        }
    }
    changes
}

/// A box certified by the Krawczyk test to hold exactly one real solution.
#[derive(Clone, Debug)]
pub struct RootBox {
    pub x: Iv,
    pub y: Iv,
}

struct System<'a> {
    f: &'a Terms,
    g: &'a Terms,
    jac: [[Terms; 2]; 2],
}

enum Step {
    /// `K(B)` lies in the interior of `B`: exactly one solution, inside `K(B)`.
    Unique(Iv, Iv),
    /// `K(B)` misses `B`: no solution.
    Empty,
    Unknown,
}

impl System<'_> {
    fn krawczyk(&self, bx: &Iv, by: &Iv) -> Step {
        let (mx, my) = (bx.mid(), by.mid());
        let j: Vec<Q> = self.jac.iter().flatten().map(|t| t.eval(&mx, &my)).collect();
        let det = &j[0] * &j[3] - &j[1] * &j[2];
        if det.is_zero() {
            return Step::Unknown;
        }
        // Y = J(m)^-1.
        let yi = [[&j[3] / &det, -&j[1] / &det], [-&j[2] / &det, &j[0] / &det]];
        let (fm, gm) = (self.f.eval(&mx, &my), self.g.eval(&mx, &my));
        let jb: Vec<Vec<Iv>> = self.jac.iter().map(|row| row.iter().map(|t| t.eval_box(bx, by)).collect()).collect();
        let dx = bx.sub(&Iv::point(mx.clone()));
        let dy = by.sub(&Iv::point(my.clone()));
        let mut k = Vec::with_capacity(2);
        for r in 0..2 {
            let center = [&mx, &my][r] - (&yi[r][0] * &fm + &yi[r][1] * &gm);
            let mut acc = Iv::point(center);
            for (col, d) in [&dx, &dy].into_iter().enumerate() {
                // Entry (r, col) of I - Y J(B).
                let yj = jb[0][col].scale(&yi[r][0]).add(&jb[1][col].scale(&yi[r][1]));
                let id = if r == col { Q::one() } else { Q::zero() };
                acc = acc.add(&Iv::point(id).sub(&yj).mul(d));
            }
            k.push(acc);
        }
        if k[0].strictly_inside(bx) && k[1].strictly_inside(by) {
            Step::Unique(k[0].clone(), k[1].clone())
        } else if k[0].meet(bx).is_none() || k[1].meet(by).is_none() {
            Step::Empty
        } else {
            Step::Unknown
        }
    }

    /// Iterate `B <- K(B) meet B` on a certified box until its sides are
    /// below `2^-bits`, rounding outward to keep the rationals small.
    fn tighten(&self, mut bx: Iv, mut by: Iv, bits: u32) -> RootBox {
        let eps = q(1, 1i64 << bits.min(62));
        for _ in 0..60 {
            if bx.width() < eps && by.width() < eps {
                break;
            }
            let (kx, ky) = match self.krawczyk(&bx, &by) {
                Step::Unique(kx, ky) => (kx, ky),
                _ => break,
            };
            bx = round_out(&kx.meet(&bx).expect("the solution stays inside"), bits + 8);
            by = round_out(&ky.meet(&by).expect("the solution stays inside"), bits + 8);
        }
        RootBox { x: bx, y: by }
    }
}

/// A point slightly right of the middle, rounded to a dyadic with a few
/// more bits than the width so that the numbers stay short. Off-centre
/// splits keep simple rational solutions off box edges.
fn split_point(v: &Iv) -> Q {
    let target = &v.lo + v.width() * q(33, 64);
    let mut s = Q::from_integer(BigInt::from(1) << 8u32);
    while v.width() * &s < Q::from_integer(BigInt::from(1) << 8u32) {
        s *= Q::from_integer(BigInt::from(1) << 8u32);
    }
    (target * &s).round() / s
}

fn round_out(v: &Iv, bits: u32) -> Iv {
    let s = Q::from_integer(BigInt::from(1) << bits);
    Iv::new((&v.lo * &s).floor() / &s, (&v.hi * &s).ceil() / &s)
}

/// All real solutions of `f = g = 0` inside the box, by exclusion and the
/// Krawczyk inclusion test, each tightened to sides below `2^-bits`.
/// `None` once a box deeper than `max_depth` is still undecided or more than
/// `budget` boxes have been examined, which happens near tangential
/// solutions or ones sitting on a split line.
pub fn krawczyk_solve(
    f: &Terms,
    g: &Terms,
    x: Iv,
    y: Iv,
    max_depth: usize,
    budget: usize,
    bits: u32,
) -> Option<Vec<RootBox>> {
    let sys = System { f, g, jac: [[f.dx(), f.dy()], [g.dx(), g.dy()]] };
    let mut out = Vec::new();
    let mut stack = vec![(x, y, 0usize)];
    let mut seen = 0;
    while let Some((bx, by, depth)) = stack.pop() {
        seen += 1;
        if seen > budget || depth > max_depth {
            return None;
        }
        if !f.eval_box(&bx, &by).contains_zero() || !g.eval_box(&bx, &by).contains_zero() {
            continue;
        }
        match sys.krawczyk(&bx, &by) {
            Step::Unique(kx, ky) => {
                out.push(sys.tighten(kx, ky, bits));
                continue;
            }
            Step::Empty => continue,
            Step::Unknown => {}
        }
        let d = depth + 1;
        if bx.width() >= by.width() {
            let s = split_point(&bx);
            stack.push((Iv::new(bx.lo.clone(), s.clone()), by.clone(), d));
            stack.push((Iv::new(s, bx.hi.clone()), by, d));
        } else {
            let s = split_point(&by);
            stack.push((bx.clone(), Iv::new(by.lo.clone(), s.clone()), d));
            stack.push((bx, Iv::new(s, by.hi.clone()), d));
        }
    }
    Some(out)
}

/// Cauchy bound `1 + max |a_i / a_n|` on the roots of a univariate
/// coefficient list (lowest degree first).
pub fn cauchy(c: &[BigInt]) -> Q {
    let n = c.len() - 1;
    let lc = Q::from_integer(c[n].abs());
    Q::one() + c[..n].iter().map(|a| Q::from_integer(a.abs()) / &lc).max().unwrap_or_else(Q::zero)
}
