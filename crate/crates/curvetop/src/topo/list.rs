//! The combinatorial encoding of the curve.

use serde_json::{json, Value};

use crate::exactnum::Interval;

/// What happens above one special value `alpha_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberTopology {
    /// Isolating interval of `alpha_i`.
    pub alpha: Interval,
    /// Number of distinct real curve points above `alpha_i`.
    pub m: usize,
    /// 1-based indices of the critical points among them.
    pub crit: Vec<usize>,
    /// `Left_{i,j}` for `0 <= j <= m + 1`; the end slots count vertical
    /// asymptotes towards `-inf` and `+inf`.
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    /// Whether `X = alpha_i` is a vertical line of the curve.
    pub vline: bool,
}

impl FiberTopology {
    fn pairs(&self) -> Value {
        Value::Array(self.left.iter().zip(&self.right).map(|(l, r)| json!([l, r])).collect())
    }
}

/// `[m'_0, L_1, m'_1, ..., L_N, m'_N]` together with the vertical lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopologyList {
    pub fibers: Vec<FiberTopology>,
    /// `m'_i`: branches over the open strip right of `alpha_i`.
    pub between: Vec<usize>,
    /// `v_i`: vertical lines inside that strip.
    pub vlines: Vec<usize>,
}

impl TopologyList {
    pub fn n_special(&self) -> usize {
        self.fibers.len()
    }

    pub fn has_vertical_lines(&self) -> bool {
        self.vlines.iter().any(|&v| v > 0) || self.fibers.iter().any(|f| f.vline)
    }

    /// The list without vertical lines.
    pub fn reduced(&self) -> Value {
        let mut out = vec![json!(self.between[0])];
        for (f, m) in self.fibers.iter().zip(&self.between[1..]) {
            out.push(json!([f.m, f.pairs()]));
            out.push(json!(m));
        }
        Value::Array(out)
    }

    /// The decorated list, with `[m, w]` and `[m', v]` pairs.
    pub fn decorated(&self) -> Value {
        let mut out = vec![json!([self.between[0], self.vlines[0]])];
        for (i, f) in self.fibers.iter().enumerate() {
            out.push(json!([[f.m, f.vline as usize], f.pairs()]));
            out.push(json!([self.between[i + 1], self.vlines[i + 1]]));
        }
        Value::Array(out)
    }

    /// Bracket notation: the decorated list when vertical lines exist.
    pub fn to_text(&self) -> String {
        let v = if self.has_vertical_lines() { self.decorated() } else { self.reduced() };
        serde_json::to_string(&v).expect("lists serialize")
    }

    /// Branch conservation across every strip.
    pub fn check_conservation(&self) -> Result<(), String> {
        for (i, f) in self.fibers.iter().enumerate() {
            let (l, r): (usize, usize) = (f.left.iter().sum(), f.right.iter().sum());
            if l != self.between[i] || r != self.between[i + 1] {
                return Err(format!(
                    "branch conservation fails at special value {}: left {l} vs {}, right {r} vs {}",
                    i + 1,
                    self.between[i],
                    self.between[i + 1]
                ));
            }
        }
        Ok(())
    }
}
