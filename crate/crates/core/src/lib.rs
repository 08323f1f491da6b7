//! Exact computations in free Lie rings, their metabelian and tensor powers,
//! and the torsion of `(L')^p / [(L')^p, L]` for the free Lie ring of rank 2.

pub mod charp;
pub mod cli;
pub mod coeff;
pub mod combination;
pub mod error;
pub mod json;
pub mod lie;
pub mod powers;
pub mod torsion;
pub mod zlinalg;

pub use error::{Error, Result};
