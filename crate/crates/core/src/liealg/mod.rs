//! Lie algebra catalog, r-matrices, algebraic Schouten brackets, the
//! stabilizer criterion and the classical Yang-Baxter defect.

pub mod algebra;
pub mod cybe;
pub mod matrix;
pub mod omega;
pub mod rmatrix;
pub mod stabilizer;
pub mod tensor;

pub use algebra::{build_algebra, build_poincare, AlgKind, LieAlgebra};
pub use cybe::{cybe_defect, TripleOp};
pub use matrix::{GMat, RatMat};
pub use omega::omega_poincare;
pub use rmatrix::{ad_action, algebraic_schouten, end_ad_defect, invariant_s, standard_r, symmetric_modification};
pub use stabilizer::{basis_point, perp_criterion, stabilizer, CriterionReport, Stabilizer, Violation};
pub use tensor::{AltTensor, EndTensor, PairTensor};
