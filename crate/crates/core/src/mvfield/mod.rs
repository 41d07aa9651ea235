//! Polynomial multivector fields, fundamental fields of actions, wedge
//! products, evaluation and the field-level Schouten bracket.

pub mod action;
pub mod field;

pub use action::{
    catalog_action, fundamental_field, lorentz_action, poincare_action, su_action, su_swap,
    vector_action, ActionSpec, AffineMap,
};
pub use field::{schouten_field, MultivectorField};
