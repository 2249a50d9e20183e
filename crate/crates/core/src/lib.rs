//! Exact computer algebra for the unique 12-dimensional Hopf algebra without
//! the dual Chevalley property: the Drinfeld double and its representation
//! catalog, Yetter-Drinfeld modules and braidings, Nichols algebras via
//! quantum symmetrizers and skew derivations, and the 216-dimensional lifting
//! families — everything computed and certified in exact cyclotomic
//! arithmetic.

pub mod exactmath;
pub mod freealg;
pub mod hopfcore;
pub mod report;
pub mod liftings;
pub mod nichols;
pub mod repmod;
pub mod ydbraid;

pub use exactmath::{CycQ6, Mat, Theta};

use thiserror::Error as ThisError;

/// Errors surfaced by the exact kernels.
#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
pub enum Error {
    #[error("division by zero in Q(xi)")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("word degree {0} exceeds the rewriting cap {1}")]
    DegreeOverflow(usize, usize),
    #[error("completion exceeded the degree cap {cap}; partial system returned")]
    CapExceeded { cap: usize },
    #[error("basis element {0} is not grouplike")]
    NotGrouplike(usize),
    #[error("invalid catalog label: {0}")]
    InvalidLabel(String),
    #[error("module does not decompose over the catalog: {0}")]
    UnknownSummand(String),
    #[error("Yetter-Drinfeld compatibility failed at (h={h}, v={v})")]
    YdCheckFailed { h: usize, v: usize },
    #[error("Nichols algebra not certified finite: {0}")]
    NotFinite(String),
    #[error("{0}")]
    Other(String),
}
