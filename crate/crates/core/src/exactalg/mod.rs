//! Exact coefficient arithmetic: Gaussian rationals with formal parameters,
//! multivariate polynomials, reduced rational functions, differentiation and
//! conjugation. No floating point anywhere.

mod flat;
mod gauss;
mod poly;
mod ratfn;
mod scalar;

pub use gauss::GaussRat;
pub use poly::{Mono, Poly, Ring};
pub use ratfn::{poly_div_exact, subst_rational, RationalFn};
pub use scalar::{ParamPow, Scalar, NPARAMS, PARAMS};
