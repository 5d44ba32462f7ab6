use thiserror::Error;

/// Everything that can go wrong between parsing a polynomial and emitting
/// its topology.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("input polynomial is not square-free")]
    NotSquareFree,
    #[error("degree {found} exceeds the cap {cap}")]
    DegreeCap { found: usize, cap: usize },
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial does not divide exactly")]
    NotDivisible,
    #[error("fiber polynomial vanishes identically above a root")]
    FiberIdenticallyZero,
    #[error("system has infinitely many solutions")]
    NotFinite,
    #[error("refinement budget exceeded: {0}")]
    Budget(String),
    #[error("certification failure: {0}")]
    Certification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
