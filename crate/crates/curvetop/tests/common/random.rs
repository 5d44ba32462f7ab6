//! Seeded random polynomials.

use curvetop::IntPoly2;
use rand::Rng;

/// Terms `c x^i y^j` with `i + j <= d`, each present with probability 1/2,
/// coefficients uniform in `[-c, c]`.
pub fn poly<R: Rng>(rng: &mut R, d: usize, c: i64) -> IntPoly2 {
    let mut terms = Vec::new();
    for i in 0..=d {
        for j in 0..=d - i {
            if rng.gen_bool(0.5) {
                terms.push((i, j, rng.gen_range(-c..=c)));
            }
        }
    }
    IntPoly2::from_terms(terms)
}

/// A polynomial of total degree at most `d` drawn either dense-ish with
/// coefficients up to `c`, or as a product of two small factors so that
/// the curve has crossings and singular points.
pub fn curve<R: Rng>(rng: &mut R, d: usize, c: i64) -> IntPoly2 {
    if rng.gen_bool(0.5) {
        let d = rng.gen_range(2..=d);
        poly(rng, d, c)
    } else {
        let a = rng.gen_range(1..=d / 2);
        let b = rng.gen_range(1..=d - a);
        let f = poly(rng, a, 3);
        &f * &poly(rng, b, 3)
    }
}
