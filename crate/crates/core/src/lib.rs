//! Exact-arithmetic construction and verification of the quadratic Poisson
//! structures attached to standard classical r-matrices: r-matrix catalogs,
//! fundamental multivector fields, Schouten brackets, cotangent bracket
//! tables, the SO(n) star-involution reality check and the SU(n) families.

pub mod error;
pub mod exactalg;
pub mod reality;
pub mod sunspace;
pub mod liealg;
pub mod brackets;
pub mod mvfield;

pub use error::{Error, Result};
