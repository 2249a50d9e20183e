//! Exact arithmetic in Q(xi) (xi a primitive 6th root of unity) and dense
//! exact linear algebra over that field.
//!
//! All values are immutable after construction; operations are pure functions
//! and safe to share across threads.

mod cyc;
mod mat;

pub use cyc::{CycQ6, Theta};
pub use mat::Mat;
