//! A straight-line planar graph isotopic to the curve.
//!
//! Special value `alpha_i` is drawn at `x = 2i` and the strip to its right
//! is sampled at `x = 2i + 1`; the picture lives in `[0, 2N + 2] x [0, h]`
//! with `h = d' + 1`. Branches going to infinity along a vertical asymptote
//! end on the bottom or top border, each at its own vertex.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::list::TopologyList;

pub type Point = (BigRational, BigRational);

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PlanarGraph {
    pub vertices: Vec<Point>,
    pub edges: Vec<(usize, usize)>,
    /// Drawing height `d' + 1`.
    pub height: BigInt,
    index: HashMap<Point, usize>,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl PlanarGraph {
    fn vertex(&mut self, p: Point) -> usize {
        if let Some(&v) = self.index.get(&p) {
            return v;
        }
        self.vertices.push(p.clone());
        self.index.insert(p, self.vertices.len() - 1);
        self.vertices.len() - 1
    }

    fn edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.edges.push((u.min(v), u.max(v)));
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64
    }

    /// Connected components, isolated vertices included.
    pub fn components(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(p: &mut [usize], mut v: usize) -> usize {
            while p[v] != v {
                p[v] = p[p[v]];
                v = p[v];
            }
            v
        }
        let mut count = self.vertices.len();
        for &(u, v) in &self.edges {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a] = b;
                count -= 1;
            }
        }
        count
    }

    /// First pair of edges that meet away from a shared endpoint.
    pub fn find_crossing(&self) -> Option<((usize, usize), (usize, usize))> {
        for (s, &e) in self.edges.iter().enumerate() {
            for &g in &self.edges[s + 1..] {
                if e == g || segments_meet_badly(&self.vertices, e, g) {
                    return Some((e, g));
                }
            }
        }
        None
    }

    /// Vertices passed through by an edge without being one of its ends.
    pub fn find_vertex_on_edge(&self) -> Option<(usize, (usize, usize))> {
        for &(u, v) in &self.edges {
            for (w, p) in self.vertices.iter().enumerate() {
                if w != u && w != v && on_segment(&self.vertices[u], &self.vertices[v], p) {
                    return Some((w, (u, v)));
                }
            }
        }
        None
    }

    /// Split every edge crossing `x = x0` and return the crossing vertices
    /// sorted by height.
    fn cut_vertical(&mut self, x0: &BigRational) -> Vec<usize> {
        let mut hits = Vec::new();
        let edges = std::mem::take(&mut self.edges);
        for (u, v) in edges {
            let (p, q) = (self.vertices[u].clone(), self.vertices[v].clone());
            if p.0 == *x0 {
                hits.push(u);
            }
            if q.0 == *x0 {
                hits.push(v);
            }
            let strictly = (&p.0 < x0 && x0 < &q.0) || (&q.0 < x0 && x0 < &p.0);
            if strictly {
                let y = &p.1 + (&q.1 - &p.1) * (x0 - &p.0) / (&q.0 - &p.0);
                let w = self.vertex((x0.clone(), y));
                hits.push(w);
                self.edge(u, w);
                self.edge(w, v);
            } else {
                self.edge(u, v);
            }
        }
        hits.sort_by(|a, b| self.vertices[*a].1.cmp(&self.vertices[*b].1));
        hits.dedup();
        hits
    }

    /// A vertical line at `x0` from the bottom to the top border through the
    /// given vertices.
    fn vertical_path(&mut self, x0: &BigRational, through: &[usize]) {
        let bottom = self.vertex((x0.clone(), BigRational::zero()));
        let top = self.vertex((x0.clone(), BigRational::from_integer(self.height.clone())));
        let mut prev = bottom;
        for &w in through {
            self.edge(prev, w);
            prev = w;
        }
        self.edge(prev, top);
    }
}

fn orient(a: &Point, b: &Point, c: &Point) -> i32 {
    let v = (&b.0 - &a.0) * (&c.1 - &a.1) - (&b.1 - &a.1) * (&c.0 - &a.0);
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

fn on_segment(a: &Point, b: &Point, p: &Point) -> bool {
    orient(a, b, p) == 0
        && a.0.clone().min(b.0.clone()) <= p.0
        && p.0 <= a.0.clone().max(b.0.clone())
        && a.1.clone().min(b.1.clone()) <= p.1
        && p.1 <= a.1.clone().max(b.1.clone())
}

/// Two segments meet at a point that is not a common endpoint.
fn segments_meet_badly(vs: &[Point], e: (usize, usize), g: (usize, usize)) -> bool {
    let (a, b, c, d) = (&vs[e.0], &vs[e.1], &vs[g.0], &vs[g.1]);
    let shared = [e.0, e.1].iter().filter(|x| **x == g.0 || **x == g.1).count();
    if shared == 2 {
        return true;
    }
    let (o1, o2, o3, o4) = (orient(a, b, c), orient(a, b, d), orient(c, d, a), orient(c, d, b));
    if shared == 1 {
        // Sharing one endpoint, they may only overlap when collinear.
        let (p, q) = if e.0 == g.0 || e.0 == g.1 { (b, if e.0 == g.0 { d } else { c }) } else { (a, if e.1 == g.0 { d } else { c }) };
        let s = if e.0 == g.0 || e.0 == g.1 { a } else { b };
        return orient(s, p, q) == 0 && ((&p.0 - &s.0) * (&q.0 - &s.0) + (&p.1 - &s.1) * (&q.1 - &s.1)).is_positive();
    }
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    (o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) || (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b))
}

/// Embed the decorated list.
pub fn embed_graph(t: &TopologyList) -> PlanarGraph {
    let n = t.fibers.len() as i64;
    let dp = t.between.iter().chain(t.fibers.iter().map(|f| &f.m)).copied().max().unwrap_or(0) as i64;
    let h = dp + 1;
    let mut g = PlanarGraph { height: BigInt::from(h), ..Default::default() };
    let hr = BigRational::from_integer(BigInt::from(h));

    // I_{i,j}, P_{i,j}: the j-th of m points on column x, 1-based.
    let column = |g: &mut PlanarGraph, x: BigRational, m: usize| -> Vec<usize> {
        (1..=m).map(|j| g.vertex((x.clone(), rat(j as i64 * h, m as i64 + 1)))).collect()
    };
    let inter: Vec<Vec<usize>> = (0..=n).map(|i| column(&mut g, rat(2 * i + 1, 1), t.between[i as usize])).collect();
    let pts: Vec<Vec<usize>> = (1..=n).map(|i| column(&mut g, rat(2 * i, 1), t.fibers[i as usize - 1].m)).collect();
    let far_left = column(&mut g, rat(0, 1), t.between[0]);
    let far_right = column(&mut g, rat(2 * (n + 1), 1), t.between[n as usize]);
    for (a, b) in far_left.iter().zip(&inter[0]) {
        g.edge(*a, *b);
    }
    for (a, b) in inter[n as usize].iter().zip(&far_right) {
        g.edge(*a, *b);
    }

    for (idx, f) in t.fibers.iter().enumerate() {
        let i = idx as i64 + 1;
        let m = f.m;
        for (counts, side, dir) in [(&f.left, &inter[idx], -1i64), (&f.right, &inter[idx + 1], 1i64)] {
            let mut next = 0usize;
            for (j, &cnt) in counts.iter().enumerate() {
                let block = &side[next..next + cnt];
                next += cnt;
                let k = cnt as i64;
                for (t_, &u) in block.iter().enumerate() {
                    let t1 = t_ as i64 + 1;
                    let end = if j == 0 {
                        // Towards -inf: the lowest branch ends nearest its column.
                        let x = rat(2 * i, 1) + rat(dir, 2) - rat(dir * t1, 2 * (k + 1));
                        g.vertex((x, BigRational::zero()))
                    } else if j == m + 1 {
                        // Towards +inf: the lowest branch ends nearest the asymptote.
                        let x = rat(2 * i, 1) + rat(dir * t1, 2 * (k + 1));
                        g.vertex((x, hr.clone()))
                    } else {
                        pts[idx][j - 1]
                    };
                    g.edge(u, end);
                }
            }
        }
    }

    // Vertical lines: the curve edges are cut where a line crosses them.
    for (s, &v) in t.vlines.iter().enumerate() {
        for l in 1..=v as i64 {
            let x0 = rat(2 * s as i64, 1) + rat(1, 2) + rat(l, v as i64 + 1);
            let hits = g.cut_vertical(&x0);
            g.vertical_path(&x0, &hits);
        }
    }
    for (idx, f) in t.fibers.iter().enumerate() {
        if f.vline {
            let through = pts[idx].clone();
            g.vertical_path(&rat(2 * (idx as i64 + 1), 1), &through);
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::super::list::FiberTopology;
    use super::*;
    use crate::exactnum::Interval;

    fn fib(m: usize, left: Vec<usize>, right: Vec<usize>) -> FiberTopology {
        FiberTopology { alpha: Interval::from_int(0), m, crit: vec![], left, right, vline: false }
    }

    #[test]
    fn circle_is_a_cycle() {
        let t = TopologyList {
            fibers: vec![fib(1, vec![0, 0, 0], vec![0, 2, 0]), fib(1, vec![0, 2, 0], vec![0, 0, 0])],
            between: vec![0, 2, 0],
            vlines: vec![0, 0, 0],
        };
        let g = embed_graph(&t);
        assert_eq!((g.vertex_count(), g.edges.len()), (4, 4));
        assert_eq!(g.components(), 1);
        assert_eq!(g.euler_characteristic(), 0);
        assert!(g.find_crossing().is_none());
    }

    #[test]
    fn hyperbola_branches_stay_apart() {
        let t = TopologyList { fibers: vec![fib(0, vec![1, 0], vec![0, 1])], between: vec![1, 1], vlines: vec![0, 0] };
        let g = embed_graph(&t);
        assert_eq!(g.components(), 2);
        assert_eq!(g.euler_characteristic(), 2);
        assert!(g.find_crossing().is_none());
    }

    #[test]
    fn vertical_lines_split_edges() {
        // Two horizontal branches crossed by one vertical line: a grid of
        // three lines with two crossings.
        let t = TopologyList { fibers: vec![], between: vec![2], vlines: vec![1] };
        let g = embed_graph(&t);
        assert_eq!(g.components(), 1);
        assert!(g.find_crossing().is_none());
        assert!(g.find_vertex_on_edge().is_none());
        // Three segments glued at two points.
        assert_eq!(g.euler_characteristic(), 1);
    }

    #[test]
    fn crossing_detection() {
        let mut g = PlanarGraph::default();
        let a = g.vertex((rat(0, 1), rat(0, 1)));
        let b = g.vertex((rat(2, 1), rat(2, 1)));
        let c = g.vertex((rat(0, 1), rat(2, 1)));
        let d = g.vertex((rat(2, 1), rat(0, 1)));
        g.edge(a, b);
        g.edge(c, d);
        assert!(g.find_crossing().is_some());
        let mut g = PlanarGraph::default();
        let a = g.vertex((rat(0, 1), rat(0, 1)));
        let b = g.vertex((rat(2, 1), rat(0, 1)));
        let c = g.vertex((rat(1, 1), rat(0, 1)));
        g.edge(a, b);
        g.edge(a, c);
        assert!(g.find_crossing().is_some());
    }
}
