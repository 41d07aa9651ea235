//! The invariant trivector of the Poincare algebra,
//! Omega = g^{jk} g^{lm} e_j ^ e_l ^ Omega_{km}.

use super::algebra::{build_poincare, LieAlgebra};
use super::tensor::AltTensor;
use crate::error::{Error, Result};
use crate::exactalg::Scalar;

/// Build Omega for signature (p, q), p + q > 3, over the poincare(p,q)
/// basis (translations first, then rotations).
pub fn omega_poincare(p: usize, q: usize) -> Result<(LieAlgebra, AltTensor)> {
    let n = p + q;
    if n <= 3 {
        return Err(Error::UnsupportedAlgebra {
            kind: "poincare".into(),
            n,
        });
    }
    let alg = build_poincare(p, q)?;
    let metric = |a: usize| if a < p { 1i64 } else { -1i64 };
    let mut omega = AltTensor::zero(alg.dim(), 3);
    // diagonal metric: the contraction collapses to ordered pairs (j, l)
    for j in 0..n {
        for l in 0..n {
            if j == l {
                continue;
            }
            let (rot, sign) = if j < l {
                (format!("Om({j},{l})"), 1)
            } else {
                (format!("Om({l},{j})"), -1)
            };
            let rot_idx = alg.basis_index(&rot).expect("rotation in basis");
            let c = Scalar::from_int(metric(j) * metric(l) * sign);
            omega.add_term(&[j, l, rot_idx], c);
        }
    }
    Ok((alg, omega))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::rmatrix::ad_action;

    #[test]
    fn collapsed_components_and_invariance() {
        for (p, q) in [(1usize, 3usize), (2, 2)] {
            let (alg, omega) = omega_poincare(p, q).unwrap();
            // 6 unordered translation pairs at n = 4
            assert_eq!(omega.coeffs.len(), 6);
            for x in 0..alg.dim() {
                assert!(ad_action(&alg, x, &omega).is_zero(), "not invariant");
            }
        }
        assert!(omega_poincare(1, 2).is_err());
    }
}
