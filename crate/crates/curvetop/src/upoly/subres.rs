//! Subresultants over an arbitrary exact-division ring.
//!
//! The determinant definition is the contract: `S_k(f, g)` is the polynomial
//! built from the Sylvester submatrix with `deg g - k` shifted copies of `f`
//! on top and `deg f - k` copies of `g` below, and `sr_k` is its coefficient
//! of `X^k`. The values are computed with Ducos' variant of the subresultant
//! remainder sequence, which produces exactly those determinants.

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::{Poly, Ring};

/// Principal subresultant coefficients `sr_0 ..= sr_{min(deg f, deg g)}`.
///
/// Both inputs must be nonzero.
pub fn principal_subresultants<T: Ring>(f: &Poly<T>, g: &Poly<T>) -> Vec<T> {
    assert!(!f.is_zero() && !g.is_zero(), "subresultants of a zero polynomial");
    let (n, m) = (f.deg(), g.deg());
    if n < m {
        // sr_k(f, g) = (-1)^((n-k)(m-k)) sr_k(g, f)
        let mut s = principal_subresultants(g, f);
        for (k, v) in s.iter_mut().enumerate() {
            if ((n - k) * (m - k)) % 2 == 1 {
                *v = -v.clone();
            }
        }
        return s;
    }
    let seq = subresultant_polys(f, g);
    seq.iter().enumerate().map(|(k, s)| s.coeff(k)).collect()
}

/// Subresultant polynomials `S_0 ..= S_{deg g}` for `deg f >= deg g`.
///
/// `S_{deg g}` is `lc(g)^(deg f - deg g - 1) g` when the degrees differ and
/// `g` itself otherwise (its principal coefficient is then reported as 1).
pub fn subresultant_polys<T: Ring>(f: &Poly<T>, g: &Poly<T>) -> Vec<Poly<T>> {
    let (n, m) = (f.deg(), g.deg());
    assert!(n >= m, "subresultant_polys expects deg f >= deg g");
    let mut out: Vec<Poly<T>> = vec![Poly::zero(); m + 1];
    if m == 0 {
        // Sylvester matrix is diagonal with lc(g) = g.
        out[0] = Poly::constant(g.lc().pow(n));
        return out;
    }
    let delta0 = n - m;
    out[m] = if delta0 == 0 {
        // The principal coefficient of an empty determinant is 1; keep g's
        // shape but normalise the leading coefficient.
        Poly::monomial(T::one(), m)
    } else {
        g.scale(&g.lc().pow(delta0 - 1))
    };
    let mut s = g.lc().pow(delta0);
    let mut a = g.clone();
    let mut b = f.prem(&-g);
    loop {
        if b.is_zero() {
            return out;
        }
        let d = a.deg();
        let e = b.deg();
        out[d - 1] = b.clone();
        let delta = d - e;
        let c = if delta > 1 {
            let c = lazard(&b, &s, delta);
            out[e] = c.clone();
            c
        } else {
            b.clone()
        };
        if e == 0 {
            return out;
        }
        let denom = s.pow(delta) * a.lc();
        let next = a.prem(&-&b).div_scalar(&denom).expect("subresultant division must be exact");
        a = c;
        s = a.lc();
        b = next;
    }
}

/// `lc(b)^(delta-1) b / s^(delta-1)` computed with intermediate exact
/// divisions to limit coefficient growth.
fn lazard<T: Ring>(b: &Poly<T>, s: &T, delta: usize) -> Poly<T> {
    let lb = b.lc();
    let mut x = lb.clone();
    for _ in 1..delta - 1 {
        x = (x * lb.clone()).exact_div(s).expect("Lazard step must divide exactly");
    }
    b.scale(&x).div_scalar(s).expect("Lazard step must divide exactly")
}

/// Resultant `Res(f, g) = sr_0(f, g)`, with `Res(f, c) = c^deg f` and
/// `Res(c, g) = c^deg g` for constants.
pub fn resultant<T: Ring>(f: &Poly<T>, g: &Poly<T>) -> T {
    if f.is_zero() || g.is_zero() {
        return T::zero();
    }
    principal_subresultants(f, g).swap_remove(0)
}

/// Discriminant with the convention `lc(f) Disc(f) = Res(f, f')`.
pub fn discriminant<T: Ring>(f: &Poly<T>) -> T {
    assert!(f.deg() >= 1, "discriminant of a constant");
    if f.deg() == 1 {
        return T::one();
    }
    resultant(f, &f.derivative()).exact_div(&f.lc()).expect("lc divides Res(f, f')")
}

/// Subdiscriminants `sDisc_0 ..= sDisc_{n-1}` with `lc(f) sDisc_k = sr_k(f, f')`.
pub fn subdiscriminants<T: Ring>(f: &Poly<T>) -> Vec<T> {
    assert!(f.deg() >= 1, "subdiscriminants of a constant");
    let lc = f.lc();
    principal_subresultants(f, &f.derivative())
        .into_iter()
        .map(|s| s.exact_div(&lc).expect("lc divides every sr_k(f, f')"))
        .collect()
}

/// Index of the first nonzero entry, i.e. the degree of the gcd when
/// applied to principal subresultants.
pub fn first_nonzero(seq: &[impl Ring]) -> Option<usize> {
    seq.iter().position(|v| !v.is_zero())
}

/// `tcoeff_U Res_X(f, sum_k U^(k-1) f^[k])` as a polynomial in `U`.
pub fn generalized_discriminant_resultant(f: &Poly<BigInt>) -> Poly<BigInt> {
    let n = f.deg();
    let lift = f.map(|c| Poly::constant(c.clone()));
    let mut g: Vec<Poly<BigInt>> = vec![Poly::zero(); n];
    for k in 1..=n {
        let t = f.taylor_coefficient(k);
        for (j, c) in t.coeffs().iter().enumerate() {
            g[j] = &g[j] + &Poly::monomial(c.clone(), k - 1);
        }
    }
    resultant(&lift, &Poly::new(g))
}
