//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use curvetop::{Poly, Ring};

/// Determinant by fraction-free Gaussian elimination (Bareiss).
pub fn bareiss_det<T: Ring>(mut m: Vec<Vec<T>>) -> T {
    let n = m.len();
    if n == 0 {
        return T::one();
    }
    let mut sign = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return T::zero();
            };
            m.swap(k, r);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = v.exact_div(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// `sr_k(f, g)` straight from the Sylvester submatrix: `deg g - k` shifted
/// copies of `f` above `deg f - k` shifted copies of `g`, keeping the columns
/// of degrees `deg f + deg g - k - 1` down to `k`.
pub fn sylvester_sr<T: Ring>(f: &Poly<T>, g: &Poly<T>, k: usize) -> T {
    let (n, m) = (f.deg(), g.deg());
    let size = n + m - 2 * k;
    let top = n + m - k - 1;
    let mut rows = Vec::new();
    for (p, cnt) in [(f, m - k), (g, n - k)] {
        for s in (0..cnt).rev() {
            // p * X^s
            let row: Vec<T> = (0..size).map(|c| {
                let deg = top - c;
                if deg >= s && deg - s <= p.deg() { p.coeff(deg - s) } else { T::zero() }
            }).collect();
            rows.push(row);
        }
    }
    bareiss_det(rows)
}

pub mod intervals;
pub mod random;
