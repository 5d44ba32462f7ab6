//! Boundary counts of an adjacency box and the number of branches that
//! reach its critical point from each side.

use std::cmp::Ordering;

use crate::bpoly::IntPoly2;
use crate::cad::{cmp_root, slope_at_fiber, slope_at_x, slope_at_y, CadGrid};
use crate::error::{Error, Result};
use crate::exactnum::Dyadic;
use crate::roots::RealRoot;

/// Curve points on the boundary of the box `[a-, a+] x [g-, g+]` around a
/// critical point `(alpha, beta)`, together with the four slope signs.
///
/// Field names read as `l` + edge + position: `am`/`ap` are the left and
/// right edges, `gm`/`gp` the bottom and top edges, `a` the vertical line
/// through the critical point. `eq_*` counts points at an ambiguous corner
/// or midpoint.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BoxCounts {
    pub l_am: usize,
    pub lgm_eq_am: usize,
    pub lgm_lt_a: usize,
    pub lgm_eq_a: usize,
    pub lgp_eq_am: usize,
    pub lgp_lt_a: usize,
    pub lgp_eq_a: usize,
    pub la_gt_b: usize,
    pub la_lt_b: usize,
    pub l_ap: usize,
    pub lgm_eq_ap: usize,
    pub lgm_gt_a: usize,
    pub lgp_eq_ap: usize,
    pub lgp_gt_a: usize,
    pub sigma_p: i32,
    pub sigma_m: i32,
    pub tau_p: i32,
    pub tau_m: i32,
}

impl BoxCounts {
    /// The box with no curve points on its boundary.
    pub fn empty() -> BoxCounts {
        BoxCounts { sigma_p: 1, sigma_m: 1, tau_p: 1, tau_m: 1, ..Default::default() }
    }
}

/// Points of one boundary list with their slope signs.
#[derive(Default)]
struct Side {
    signs: Vec<i32>,
}

impl Side {
    fn push(&mut self, s: i32) {
        self.signs.push(s);
    }

    /// The common slope sign, `+1` for an empty list.
    fn sign(&self, what: &str) -> Result<i32> {
        match self.signs.first() {
            None => Ok(1),
            Some(&s) if self.signs.iter().all(|&t| t == s) => Ok(s),
            _ => Err(Error::Certification(format!("slope signs disagree on the {what} boundary list"))),
        }
    }
}

/// Counts for the critical point `j` (position among the real roots) of
/// fiber `i`.
///
/// Buffers never meet the curve at corners or at the points where box edges
/// cross the special lines, so the `eq_*` counts are zero and every
/// membership below is decided exactly.
pub fn box_counts(grid: &mut CadGrid, f: &IntPoly2, i: usize, j: usize) -> Result<BoxCounts> {
    let k = grid.fibers[i].level[j].ok_or_else(|| Error::Certification("critical point without a level".into()))?;
    let (am, ap) = grid.x_buffers(i);
    let (gm, gp) = grid.y_buffers(k);
    let alpha = grid.alpha(i).clone();
    let beta = grid.y.roots[k].clone();
    let mut c = BoxCounts::default();
    let (mut sp, mut sm, mut tp, mut tm) = (Side::default(), Side::default(), Side::default(), Side::default());

    let (left, right) = grid.side_fibers(i);
    let (left, right) = (left.to_vec(), right.to_vec());
    for (edge, a, count, upper, lower) in [(left, &am, &mut c.l_am, &mut sp, &mut sm), (right, &ap, &mut c.l_ap, &mut tp, &mut tm)] {
        for mut eta in edge {
            if cmp_root(&eta, &gm) != Ordering::Greater || cmp_root(&eta, &gp) != Ordering::Less {
                continue;
            }
            *count += 1;
            // A horizontal line through the critical point meets the edge at
            // height beta and belongs to neither half.
            match eta.compare(&mut beta.clone()) {
                Ordering::Greater => upper.push(slope_at_x(f, a, &mut eta)?),
                Ordering::Less => lower.push(slope_at_x(f, a, &mut eta)?),
                Ordering::Equal => {}
            }
        }
    }

    let below = grid.y_buffer_fibers[k].clone();
    let above = grid.y_buffer_fibers[k + 1].clone();
    for (edge, g, top) in [(below, &gm, false), (above, &gp, true)] {
        for mut xi in edge {
            if cmp_root(&xi, &am) != Ordering::Greater || cmp_root(&xi, &ap) != Ordering::Less {
                continue;
            }
            let s = slope_at_y(f, g, &mut xi)?;
            match (xi.compare(&mut alpha.clone()), top) {
                (Ordering::Less, true) => {
                    c.lgp_lt_a += 1;
                    sp.push(s);
                }
                (Ordering::Less, false) => {
                    c.lgm_lt_a += 1;
                    sm.push(s);
                }
                (Ordering::Greater, true) => {
                    c.lgp_gt_a += 1;
                    tp.push(s);
                }
                (Ordering::Greater, false) => {
                    c.lgm_gt_a += 1;
                    tm.push(s);
                }
                (Ordering::Equal, _) => return Err(Error::Certification("buffer level meets a special fiber".into())),
            }
        }
    }

    let fib = &mut grid.fibers[i];
    for jj in 0..fib.m() {
        if jj == j {
            continue;
        }
        let iv = fib.interval(jj);
        if iv.hi < gm || iv.lo > gp {
            continue;
        }
        let s = slope_at_fiber(f, fib, jj)?;
        if jj > j {
            c.la_gt_b += 1;
            sp.push(s);
            tp.push(s);
        } else {
            c.la_lt_b += 1;
            sm.push(s);
            tm.push(s);
        }
    }
    c.sigma_p = sp.sign("upper left")?;
    c.sigma_m = sm.sign("lower left")?;
    c.tau_p = tp.sign("upper right")?;
    c.tau_m = tm.sign("lower right")?;
    Ok(c)
}

/// Branches reaching the critical point from the left and from the right.
pub fn left_right(c: &BoxCounts) -> Result<(usize, usize)> {
    let n = |v: usize| v as i64;
    let on_line = n(c.la_gt_b) + n(c.la_lt_b);
    let left = n(c.l_am)
        + match (c.sigma_p > 0, c.sigma_m > 0) {
            (true, true) => -(n(c.lgp_lt_a) + n(c.lgp_eq_a)) + n(c.lgm_lt_a) + n(c.lgm_eq_am),
            (true, false) => -(n(c.lgp_lt_a) + n(c.lgp_eq_a)) - (n(c.lgm_lt_a) + n(c.lgm_eq_a)),
            (false, true) => n(c.lgp_lt_a) + n(c.lgp_eq_am) + n(c.lgm_lt_a) + n(c.lgm_eq_am),
            (false, false) => n(c.lgp_lt_a) + n(c.lgp_eq_am) - (n(c.lgm_lt_a) + n(c.lgm_eq_a)),
        }
        - on_line;
    let right = n(c.l_ap)
        + match (c.tau_p > 0, c.tau_m > 0) {
            (false, false) => -(n(c.lgp_gt_a) + n(c.lgp_eq_a)) + n(c.lgm_gt_a) + n(c.lgm_eq_ap),
            (false, true) => -(n(c.lgp_gt_a) + n(c.lgp_eq_a)) - (n(c.lgm_gt_a) + n(c.lgm_eq_a)),
            (true, false) => n(c.lgp_gt_a) + n(c.lgp_eq_ap) + n(c.lgm_gt_a) + n(c.lgm_eq_ap),
            (true, true) => n(c.lgp_gt_a) + n(c.lgp_eq_ap) - (n(c.lgm_gt_a) + n(c.lgm_eq_a)),
        }
        - on_line;
    if left < 0 || right < 0 {
        return Err(Error::Certification(format!("negative branch count ({left}, {right})")));
    }
    Ok((left as usize, right as usize))
}

/// Whether the real root lies strictly between two dyadics.
pub fn strictly_between(r: &RealRoot, lo: &Dyadic, hi: &Dyadic) -> bool {
    cmp_root(r, lo) == Ordering::Greater && cmp_root(r, hi) == Ordering::Less
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_box() {
        assert_eq!(left_right(&BoxCounts::empty()).unwrap(), (0, 0));
        let mut c = BoxCounts::empty();
        c.sigma_m = -1;
        c.tau_p = -1;
        assert_eq!(left_right(&c).unwrap(), (0, 0));
    }

    #[test]
    fn worked_left_count() {
        // Left counts (7, 0, 1, 0, 0, 2, 0, 2, 2) with both upper and lower
        // slopes positive.
        let c = BoxCounts {
            l_am: 7,
            lgm_lt_a: 1,
            lgp_lt_a: 2,
            la_gt_b: 2,
            la_lt_b: 2,
            l_ap: 4,
            ..BoxCounts::empty()
        };
        assert_eq!(left_right(&c).unwrap().0, 2);
    }

    #[test]
    fn cusp_right_count() {
        let c = BoxCounts { l_ap: 2, tau_m: -1, ..BoxCounts::empty() };
        assert_eq!(left_right(&c).unwrap(), (0, 2));
    }

    #[test]
    fn negative_is_an_error() {
        let c = BoxCounts { lgp_lt_a: 1, ..BoxCounts::empty() };
        assert!(left_right(&c).is_err());
    }
}
