//! Reading polynomials and writing results.
//!
//! Text input follows a small grammar: integers, `x`, `y`, `+ - * ^` and
//! parentheses, with explicit multiplication only. JSON input lists terms as
//! `{"terms": [[i, j, "coefficient"], ...]}` for `coefficient * x^i * y^j`.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::graph::PlanarGraph;
use super::Analysis;
use crate::bpoly::IntPoly2;
use crate::error::{Error, Result};
use crate::upoly::IntPoly;

/// Largest exponent accepted by the parser; anything bigger would exceed
/// every sensible degree cap long before it could be expanded.
const MAX_EXPONENT: usize = 4096;

fn parse_err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

/// Parse either input format, picking JSON when the text starts with `{`.
pub fn parse_poly(src: &str) -> Result<IntPoly2> {
    if src.trim_start().starts_with('{') {
        parse_json_terms(src)
    } else {
        Parser { s: src.as_bytes(), pos: 0 }.parse()
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<IntPoly2> {
        if self.peek().is_none() {
            return Err(parse_err(self.pos, "empty expression"));
        }
        let p = self.expr()?;
        match self.peek() {
            None => Ok(p),
            Some(c) if c == b'(' || c == b'x' || c == b'y' || c.is_ascii_digit() => {
                Err(parse_err(self.pos, "implicit multiplication is not allowed; use '*'"))
            }
            Some(c) => Err(parse_err(self.pos, format!("unexpected character '{}'", c as char))),
        }
    }

    fn expr(&mut self) -> Result<IntPoly2> {
        let mut acc = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if op == b'+' { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<IntPoly2> {
        let mut acc = self.unary()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.unary()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<IntPoly2> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<IntPoly2> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        let digits = self.digits();
        if digits.is_empty() {
            return Err(parse_err(start, "exponent must be a nonnegative integer"));
        }
        let e: usize = digits
            .parse()
            .ok()
            .filter(|&e| e <= MAX_EXPONENT)
            .ok_or_else(|| parse_err(start, format!("exponent larger than {MAX_EXPONENT}")))?;
        let mut out = IntPoly2::one();
        for _ in 0..e {
            out = &out * &base;
        }
        Ok(out)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.s[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<IntPoly2> {
        let start = self.pos;
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(IntPoly2::constant(IntPoly::x()))
            }
            Some(b'y') => {
                self.pos += 1;
                Ok(IntPoly2::x())
            }
            Some(b'(') => {
                self.pos += 1;
                let p = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(parse_err(self.pos, "expected ')'"));
                }
                self.pos += 1;
                Ok(p)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits();
                if matches!(self.s.get(self.pos), Some(b'.' | b'e' | b'E' | b'/')) {
                    return Err(parse_err(self.pos, "non-integer coefficient"));
                }
                let n = BigInt::from_str(&d).expect("digits");
                Ok(IntPoly2::constant(IntPoly::constant(n)))
            }
            Some(c) => Err(parse_err(self.pos, format!("unexpected character '{}'", c as char))),
            None => Err(parse_err(start.max(self.pos), "unexpected end of input")),
        }
    }
}

fn parse_json_terms(src: &str) -> Result<IntPoly2> {
    let v: Value = serde_json::from_str(src).map_err(|e| parse_err(e.column(), format!("invalid JSON: {e}")))?;
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err(0, "expected an object with a \"terms\" array"))?;
    let mut out = Vec::with_capacity(terms.len());
    for (k, t) in terms.iter().enumerate() {
        let bad = || parse_err(k, format!("term {k} must be [i, j, \"coefficient\"]"));
        let a = t.as_array().filter(|a| a.len() == 3).ok_or_else(bad)?;
        let i = a[0].as_u64().ok_or_else(bad)? as usize;
        let j = a[1].as_u64().ok_or_else(bad)? as usize;
        let c = match &a[2] {
            Value::String(s) => parse_integer_decimal(s).ok_or_else(|| parse_err(k, format!("non-integer coefficient \"{s}\"")))?,
            Value::Number(n) if n.is_i64() || n.is_u64() => BigInt::from_str(&n.to_string()).map_err(|_| bad())?,
            Value::Number(n) => return Err(parse_err(k, format!("non-integer coefficient {n}"))),
            _ => return Err(bad()),
        };
        if i > MAX_EXPONENT || j > MAX_EXPONENT {
            return Err(parse_err(k, format!("exponent larger than {MAX_EXPONENT}")));
        }
        out.push((i, j, c));
    }
    Ok(IntPoly2::from_terms(out))
}

/// An integer written in decimal, optionally with a zero fractional part.
fn parse_integer_decimal(s: &str) -> Option<BigInt> {
    let s = s.trim();
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    if !frac.bytes().all(|b| b == b'0') {
        return None;
    }
    let digits = int.strip_prefix(['+', '-']).unwrap_or(int);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(int.strip_prefix('+').unwrap_or(int)).ok()
}

/// Output formats.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
    Svg,
    ListText,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "dot" => Ok(Format::Dot),
            "svg" => Ok(Format::Svg),
            "list-text" => Ok(Format::ListText),
            _ => Err(format!("unsupported format '{s}' (expected json, dot, svg or list-text)")),
        }
    }
}

pub fn emit(a: &Analysis, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(&to_json(a)).expect("json") + "\n",
        Format::Dot => to_dot(&a.graph),
        Format::Svg => to_svg(&a.graph),
        Format::ListText => a.list.to_text() + "\n",
    }
}

fn int_value(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

/// The stable machine-readable result.
pub fn to_json(a: &Analysis) -> Value {
    let t = &a.list;
    let fibers: Vec<Value> = t
        .fibers
        .iter()
        .map(|f| {
            json!({
                "alpha": f.alpha.to_decimal_pair(),
                "m": f.m,
                "crit": f.crit,
                "left": f.left,
                "right": f.right,
                "vline": f.vline as usize,
            })
        })
        .collect();
    let between: Vec<Value> = t.between.iter().zip(&t.vlines).map(|(c, v)| json!({"count": c, "vlines": v})).collect();
    let vertices: Vec<Value> = a
        .graph
        .vertices
        .iter()
        .map(|(x, y)| json!([int_value(x.numer()), int_value(x.denom()), int_value(y.numer()), int_value(y.denom())]))
        .collect();
    let edges: Vec<Value> = a.graph.edges.iter().map(|(u, v)| json!([u, v])).collect();
    json!({
        "n_special": t.n_special(),
        "fibers": fibers,
        "between": between,
        "list": t.decorated(),
        "graph": {"vertices": vertices, "edges": edges},
        "components": a.graph.components(),
        "euler_characteristic": a.graph.euler_characteristic(),
    })
}

/// Fixed-point decimal rendering, rounded to nearest.
fn fixed(r: &BigRational, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = r * BigRational::from_integer(scale.clone());
    let n = (scaled + BigRational::new(BigInt::one(), BigInt::from(2))).floor().to_integer();
    let (q, rem) = n.abs().div_rem(&scale);
    let sign = if n.is_negative() { "-" } else { "" };
    let frac = format!("{:0>width$}", rem.to_string(), width = digits as usize);
    let frac = frac.trim_end_matches('0');
    if frac.is_empty() {
        format!("{sign}{q}")
    } else {
        format!("{sign}{q}.{frac}")
    }
}

fn to_dot(g: &PlanarGraph) -> String {
    let mut s = String::from("graph curve {\n  node [shape=point];\n");
    for (i, (x, y)) in g.vertices.iter().enumerate() {
        let _ = writeln!(s, "  v{i} [pos=\"{},{}!\"];", fixed(x, 4), fixed(y, 4));
    }
    for (u, v) in &g.edges {
        let _ = writeln!(s, "  v{u} -- v{v};");
    }
    s.push_str("}\n");
    s
}

fn to_svg(g: &PlanarGraph) -> String {
    let unit = BigRational::from_integer(BigInt::from(60));
    let margin = BigRational::from_integer(BigInt::from(20));
    let width = g.vertices.iter().map(|p| p.0.clone()).max().unwrap_or_else(BigRational::zero);
    let height = BigRational::from_integer(g.height.clone());
    let sx = |x: &BigRational| fixed(&(x * &unit + &margin), 2);
    let sy = |y: &BigRational| fixed(&((&height - y) * &unit + &margin), 2);
    let two = BigRational::from_integer(BigInt::from(2));
    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\">",
        fixed(&(&width * &unit + &margin * &two), 0),
        fixed(&(&height * &unit + &margin * &two), 0)
    );
    for (u, v) in &g.edges {
        let (a, b) = (&g.vertices[*u], &g.vertices[*v]);
        let _ = writeln!(
            s,
            "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\" stroke-width=\"2\"/>",
            sx(&a.0),
            sy(&a.1),
            sx(&b.0),
            sy(&b.1)
        );
    }
    for (x, y) in &g.vertices {
        let _ = writeln!(s, "  <circle cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"black\"/>", sx(x), sy(y));
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2(terms: &[(usize, usize, i64)]) -> IntPoly2 {
        IntPoly2::from_terms(terms.iter().copied())
    }

    #[test]
    fn circle_text() {
        assert_eq!(parse_poly("x^2 + y^2 - 1").unwrap(), p2(&[(2, 0, 1), (0, 2, 1), (0, 0, -1)]));
    }

    #[test]
    fn product_text() {
        let p = parse_poly("(x*y-1)*(4*y^2-4*x-1)*(4*y^2+4*x-1)").unwrap();
        let a = p2(&[(1, 1, 1), (0, 0, -1)]);
        let b = p2(&[(0, 2, 4), (1, 0, -4), (0, 0, -1)]);
        let c = p2(&[(0, 2, 4), (1, 0, 4), (0, 0, -1)]);
        assert_eq!(p, &(&a * &b) * &c);
    }

    #[test]
    fn rejects_fractions_and_juxtaposition() {
        assert!(matches!(parse_poly("x^2 + 0.5"), Err(Error::Parse { pos: 7, .. })));
        assert!(matches!(parse_poly("2x"), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("x^-1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("(x+1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn unary_minus_binds_looser_than_power() {
        assert_eq!(parse_poly("-x^2").unwrap(), p2(&[(2, 0, -1)]));
        assert_eq!(parse_poly("--y").unwrap(), p2(&[(0, 1, 1)]));
    }

    #[test]
    fn json_terms() {
        let p = parse_poly(r#"{"terms": [[2, 0, "1"], [0, 2, "1"], [0, 0, "-1"]]}"#).unwrap();
        assert_eq!(p, p2(&[(2, 0, 1), (0, 2, 1), (0, 0, -1)]));
        assert!(parse_poly(r#"{"terms": [[2, 0, "0.5"]]}"#).is_err());
        assert_eq!(parse_poly(r#"{"terms": [[1, 0, "3.00"]]}"#).unwrap(), p2(&[(1, 0, 3)]));
        assert!(parse_poly(r#"{"terms": [[1, 0]]}"#).is_err());
    }

    #[test]
    fn fixed_point() {
        assert_eq!(fixed(&BigRational::new(BigInt::from(1), BigInt::from(3)), 4), "0.3333");
        assert_eq!(fixed(&BigRational::new(BigInt::from(-5), BigInt::from(2)), 2), "-2.5");
        assert_eq!(fixed(&BigRational::from_integer(BigInt::from(7)), 2), "7");
    }
}
