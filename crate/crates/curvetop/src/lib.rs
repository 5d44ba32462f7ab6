//! Certified topology of real planar algebraic curves.
//!
//! Given a square-free `P in Z[X, Y]`, [`topo::analyze`] computes a refined
//! cylindrical decomposition of the real zero set and a straight-line planar
//! graph isotopic to it, without changing coordinates. All decisions are
//! exact or backed by interval certificates.
//!
//! The modules stack bottom-up: [`exactnum`] (dyadics, intervals),
//! [`upoly`] and [`bpoly`] (polynomial algebra), [`roots`] (certified root
//! isolation), [`fiber`] (roots of `F(z, Y)` over algebraic `z`), [`cad`]
//! (the decomposition itself) and [`topo`] (counting, lists, graphs, I/O).

pub mod bpoly;
pub mod cad;
pub mod error;
pub mod exactnum;
pub mod fiber;
pub mod roots;
pub mod topo;
pub mod upoly;

pub use bpoly::IntPoly2;
pub use error::{Error, Result};
pub use exactnum::{Dyadic, Interval, Rational};
pub use upoly::{IntPoly, Poly, RatPoly, Ring};
