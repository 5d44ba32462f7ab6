//! From a polynomial to its topology: branch counting around critical
//! points, the list encoding, vertical lines, the planar graph and output.

pub mod counts;
pub mod graph;
pub mod io;
pub mod list;

use std::cmp::Ordering;

use crate::bpoly::IntPoly2;
use crate::cad::{asymptote_counts, build_grid, real_root_count, split_lines, CadGrid, CurveDecomposition};
use crate::error::{Error, Result};
use crate::exactnum::Dyadic;
use crate::roots::{isolate_real_roots, RealRoot};
use crate::upoly;

pub use counts::{box_counts, left_right, BoxCounts};
pub use graph::{embed_graph, PlanarGraph};
pub use io::{emit, parse_poly, to_json, Format};
pub use list::{FiberTopology, TopologyList};

/// Default cap on the total degree of the input.
pub const DEFAULT_MAX_DEGREE: usize = 64;

#[derive(Clone, Debug)]
pub struct Options {
    pub max_degree: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options { max_degree: DEFAULT_MAX_DEGREE }
    }
}

/// Size of the computation, for `--stats`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Stats {
    pub total_degree: usize,
    pub special_values: usize,
    pub sx_roots: usize,
    pub sy_roots: usize,
    pub critical_points: usize,
    pub vertical_lines: usize,
    /// Facts checked by the certificate audit.
    pub audited: usize,
}

#[derive(Debug)]
pub struct Analysis {
    pub decomposition: CurveDecomposition,
    pub list: TopologyList,
    pub graph: PlanarGraph,
    pub stats: Stats,
}

/// Full analysis of the curve `P = 0`.
pub fn analyze(p: &IntPoly2, opts: &Options) -> Result<Analysis> {
    let total_degree = p.total_degree();
    if total_degree > opts.max_degree {
        return Err(Error::DegreeCap { found: total_degree, cap: opts.max_degree });
    }
    let dec = split_lines(p)?;
    let mut stats = Stats { total_degree, ..Default::default() };
    let pt = &dec.ptilde;

    let mut grid = None;
    let mut list = if pt.deg_x() == 0 {
        // Horizontal lines only, or no curve at all.
        single_strip(isolate_real_roots(&pt.transpose().y_coeff(0))?.len())
    } else {
        let g = grid.insert(build_grid(&dec)?);
        if g.alphas.is_empty() {
            single_strip(real_root_count(pt, &Dyadic::zero())?)
        } else {
            full_list(g, pt, &mut stats)?
        }
    };
    stats.vertical_lines = reinsert_vertical_lines(&mut list, &dec, grid.as_ref())?;
    list.check_conservation().map_err(Error::Certification)?;
    if let Some(g) = grid.as_ref() {
        stats.special_values = g.alphas.len();
        stats.sx_roots = g.x.roots.len();
        stats.sy_roots = g.y.roots.len();
        stats.audited = audit(g).map_err(Error::Certification)?;
    }
    let graph = embed_graph(&list);
    if let Some((e, f)) = graph.find_crossing() {
        return Err(Error::Certification(format!("embedded edges {e:?} and {f:?} cross")));
    }
    if let Some((v, e)) = graph.find_vertex_on_edge() {
        return Err(Error::Certification(format!("vertex {v} lies inside edge {e:?}")));
    }
    Ok(Analysis { decomposition: dec, list, graph, stats })
}

fn single_strip(m: usize) -> TopologyList {
    TopologyList { fibers: Vec::new(), between: vec![m], vlines: vec![0] }
}

fn full_list(grid: &mut CadGrid, pt: &IntPoly2, stats: &mut Stats) -> Result<TopologyList> {
    let asym = asymptote_counts(grid, pt)?;
    let n = grid.alphas.len();
    let mut fibers = Vec::with_capacity(n);
    for i in 0..n {
        let m = grid.fibers[i].m();
        let (mut left, mut right) = (vec![1; m + 2], vec![1; m + 2]);
        [left[0], right[0], left[m + 1], right[m + 1]] = asym[i];
        let crit = grid.fibers[i].crit();
        for &j in &crit {
            let c = box_counts(grid, pt, i, j)?;
            (left[j + 1], right[j + 1]) = left_right(&c)?;
        }
        stats.critical_points += crit.len();
        fibers.push(FiberTopology {
            alpha: grid.alpha(i).interval.clone(),
            m,
            crit: crit.iter().map(|j| j + 1).collect(),
            left,
            right,
            vline: false,
        });
    }
    let mut between = Vec::with_capacity(n + 1);
    between.push(real_root_count(pt, &grid.x_buffers(0).0)?);
    for i in 0..n {
        between.push(real_root_count(pt, &grid.x_buffers(i).1)?);
    }
    Ok(TopologyList { fibers, between, vlines: vec![0; n + 1] })
}

/// Mark `w_i` and count `v_i`; returns the number of vertical lines.
fn reinsert_vertical_lines(list: &mut TopologyList, dec: &CurveDecomposition, grid: Option<&CadGrid>) -> Result<usize> {
    if dec.c.deg() == 0 {
        return Ok(0);
    }
    let cstar = upoly::square_free_part(&dec.c)?;
    let lines = isolate_real_roots(&cstar)?;
    let alphas: Vec<RealRoot> = grid.map(|g| (0..g.alphas.len()).map(|i| g.alpha(i).clone()).collect()).unwrap_or_default();
    for mut rho in lines.iter().cloned() {
        let mut strip = 0;
        let mut on_alpha = None;
        for (i, a) in alphas.iter().enumerate() {
            match a.clone().compare(&mut rho) {
                Ordering::Less => strip = i + 1,
                Ordering::Equal => {
                    on_alpha = Some(i);
                    break;
                }
                Ordering::Greater => break,
            }
        }
        match on_alpha {
            Some(i) => list.fibers[i].vline = true,
            None => list.vlines[strip] += 1,
        }
    }
    Ok(lines.len())
}

/// Check the certificates behind the decomposition from raw interval data.
/// Returns the number of facts checked.
pub fn audit(grid: &CadGrid) -> std::result::Result<usize, String> {
    let mut checks = 0;
    // Buffers separate consecutive roots on both axes.
    for (name, axis) in [("x", &grid.x), ("y", &grid.y)] {
        for (t, r) in axis.roots.iter().enumerate() {
            if !(axis.buffers[t] < *r.lo() && *r.hi() < axis.buffers[t + 1]) {
                return Err(format!("{name} root {t} is not bracketed by its buffers"));
            }
            checks += 1;
        }
    }
    for (i, fib) in grid.fibers.iter().enumerate() {
        let sol = &fib.solution;
        let n = sol.fiber_degree as i64;
        // Well isolation: every disk is tiny compared to its distance to the others.
        for a in 0..sol.roots.len() {
            for b in a + 1..sol.roots.len() {
                let (da, db) = (&sol.roots[a].disk, &sol.roots[b].disk);
                let big = da.radius.clone().max(db.radius.clone());
                let need = &(&da.radius + &db.radius) + &(&big * &Dyadic::from(64 * n));
                if (&da.center - &db.center).norm_sq() < &need * &need {
                    return Err(format!("fiber {} roots {a} and {b} are not well isolated", i + 1));
                }
                checks += 1;
            }
        }
        let mult: usize = sol.roots.iter().map(|r| r.multiplicity).sum();
        if mult != sol.fiber_degree {
            return Err(format!("fiber {} multiplicities add up to {mult}, not {}", i + 1, sol.fiber_degree));
        }
        checks += 1;
        for j in 0..fib.m() {
            let iv = fib.interval(j);
            if grid.y.buffers.iter().any(|g| iv.contains(g)) {
                return Err(format!("fiber {} root {} straddles a level buffer", i + 1, j + 1));
            }
            checks += 1;
            if let Some(k) = fib.level[j] {
                let (gm, gp) = grid.y_buffers(k);
                let hits = grid.y.roots.iter().filter(|r| r.interval.overlaps(&iv)).count();
                if !(gm < iv.lo && iv.hi < gp) || hits != 1 || !grid.y.roots[k].interval.overlaps(&iv) {
                    return Err(format!("critical point ({}, {}) is not pinned to its level", i + 1, j + 1));
                }
                checks += 1;
            }
        }
    }
    // Boundary points of the boxes never sit on a grid line of the other axis.
    for (fibs, bufs, name) in [(&grid.x_buffer_fibers, &grid.y.buffers, "vertical"), (&grid.y_buffer_fibers, &grid.x.buffers, "horizontal")] {
        for (t, roots) in fibs.iter().enumerate() {
            for r in roots {
                if bufs.iter().any(|b| r.interval.contains(b)) {
                    return Err(format!("{name} buffer fiber {t} is not separated from the other buffers"));
                }
                checks += 1;
            }
        }
    }
    Ok(checks)
}
