//! Poisson structures as generator bracket tables: constructors for the
//! paper's phase-space tables, Jacobiator verification, Casimirs,
//! nondegeneracy and constraint analysis.

pub mod analysis;
pub mod cotangent;
pub mod table;

pub use analysis::{casimir_residual, jacobiator, jacobiator_nonzero, lagrangian_section_check, SectionReport};
pub use cotangent::{
    cotangent_ring, general_cotangent_table, general_cotangent_table_unchecked, pi0_table,
    quadratic_table, slxx_table, triangular_cotangent_table, xxpp_mixed1_table,
};
pub use table::{bivector_from_table, bracket_matrix_at, table_from_bivector, BracketTable};
