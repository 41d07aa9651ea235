//! The r-matrix catalog: standard r-matrices, invariant symmetric elements,
//! the lambda-modification, the algebraic Schouten bracket and the adjoint
//! action on tensors.

use super::algebra::{AlgKind, LieAlgebra};
use super::tensor::{AltTensor, EndTensor, PairTensor};
use crate::error::{Error, Result};
use crate::exactalg::Scalar;

fn idx(alg: &LieAlgebra, name: &str) -> usize {
    alg.basis_index(name)
        .unwrap_or_else(|| panic!("basis element `{name}` missing"))
}

/// Standard classical r-matrix in the paper's explicit per-algebra form,
/// with the deformation parameter eps carried formally.
pub fn standard_r(alg: &LieAlgebra) -> Result<AltTensor> {
    let eps = Scalar::eps();
    let n = alg.n;
    let mut r = AltTensor::zero(alg.dim(), 2);
    match alg.kind {
        AlgKind::Sl | AlgKind::Gl => {
            for j in 1..=n {
                for k in j + 1..=n {
                    r.add_term(
                        &[idx(alg, &format!("E({j},{k})")), idx(alg, &format!("E({k},{j})"))],
                        eps.clone(),
                    );
                }
            }
        }
        AlgKind::Sp => {
            for j in 1..=n {
                for k in j + 1..=n {
                    r.add_term(
                        &[idx(alg, &format!("d({j},{k})")), idx(alg, &format!("d({k},{j})"))],
                        eps.clone(),
                    );
                }
            }
            // 1/2 sum_{j,k} a_{jk} ^ b^{jk} over the symmetric extension
            for j in 1..=n {
                r.add_term(
                    &[idx(alg, &format!("a({j},{j})")), idx(alg, &format!("b({j},{j})"))],
                    eps.mul(&Scalar::from_frac(1, 2)),
                );
                for k in j + 1..=n {
                    r.add_term(
                        &[idx(alg, &format!("a({j},{k})")), idx(alg, &format!("b({j},{k})"))],
                        eps.clone(),
                    );
                }
            }
        }
        AlgKind::So => {
            // eps sum_{j<k<j'} M_j^k ^ M_k^{j'}, j' = n+1-j; anti-diagonal Cartan
            for j in 1..=n {
                let jp = n + 1 - j;
                for k in j + 1..jp {
                    r.add_term(
                        &[idx(alg, &format!("M({j},{k})")), idx(alg, &format!("M({k},{jp})"))],
                        eps.clone(),
                    );
                }
            }
        }
        AlgKind::Su => {
            for j in 1..=n {
                for k in j + 1..=n {
                    r.add_term(
                        &[idx(alg, &format!("F({j},{k})")), idx(alg, &format!("G({j},{k})"))],
                        eps.mul(&Scalar::from_frac(1, 2)),
                    );
                }
            }
        }
        AlgKind::Lorentz | AlgKind::Poincare => {
            return Err(Error::NoStandardR(alg.kind.to_string()));
        }
    }
    Ok(r)
}

/// Invariant symmetric element s of g (x) g for the quasitriangular cases.
pub fn invariant_s(alg: &LieAlgebra) -> Result<PairTensor> {
    let eps = Scalar::eps();
    let n = alg.n;
    let mut s = PairTensor::zero(alg.dim());
    match alg.kind {
        AlgKind::Gl => {
            for j in 1..=n {
                for k in 1..=n {
                    s.add_term(
                        idx(alg, &format!("E({j},{k})")),
                        idx(alg, &format!("E({k},{j})")),
                        eps.clone(),
                    );
                }
            }
        }
        AlgKind::So => {
            // (eps/2) sum_{j,k} M_j^k (x) M_k^j collapses on the basis to
            // -eps sum_{j<k} M(j,k) (x) M(j,k)
            for j in 1..=n {
                for k in j + 1..=n {
                    let a = idx(alg, &format!("M({j},{k})"));
                    s.add_term(a, a, eps.neg());
                }
            }
        }
        _ => return Err(Error::NoInvariantS(alg.kind.to_string())),
    }
    debug_assert!(s.is_symmetric());
    Ok(s)
}

/// Find lambda such that s + lambda I(x)I satisfies the index symmetry
/// (s_lambda)^{jk}_{lm} = (s_lambda)^{kj}_{lm}. The defect is affine in
/// lambda with slope +-1 exactly on the indices where I(x)I breaks the
/// symmetry, so the solution is unique whenever it exists.
pub fn symmetric_modification(s: &EndTensor) -> Result<Scalar> {
    let n = s.n;
    let mut required: Option<Scalar> = None;
    let mut witness_slope = None;
    for j in 0..n {
        for k in 0..n {
            for l in 0..n {
                for m in 0..n {
                    let defect = s.get(j, k, l, m).sub(&s.get(k, j, l, m));
                    // slope of lambda in defect: delta^j_l delta^k_m - delta^k_l delta^j_m
                    let slope = i64::from(j == l && k == m) - i64::from(k == l && j == m);
                    if slope == 0 {
                        if !defect.is_zero() {
                            return Err(Error::NoModification((j, k, l, m)));
                        }
                    } else {
                        let lam = defect
                            .mul(&Scalar::from_frac(-1, slope))
                            .clone();
                        match &required {
                            None => {
                                required = Some(lam);
                                witness_slope = Some((j, k, l, m));
                            }
                            Some(r) if *r != lam => {
                                return Err(Error::NoModification((j, k, l, m)));
                            }
                            _ => {}
                        }
                    }
                }
            }
        }
    }
    let _ = witness_slope;
    required.ok_or(Error::NoModification((0, 0, 0, 0)))
}

/// Algebraic Schouten bracket Lambda^2 g x Lambda^2 g -> Lambda^3 g:
/// [a^b, c^d] = [a,c]^b^d - [a,d]^b^c - [b,c]^a^d + [b,d]^a^c,
/// extended bilinearly using the cached structure constants.
pub fn algebraic_schouten(alg: &LieAlgebra, u: &AltTensor, v: &AltTensor) -> Result<AltTensor> {
    if u.dim != alg.dim() || v.dim != alg.dim() {
        return Err(Error::AlgebraMismatch);
    }
    assert_eq!((u.degree, v.degree), (2, 2));
    let mut out = AltTensor::zero(alg.dim(), 3);
    for (ku, cu) in &u.coeffs {
        let (a, b) = (ku[0], ku[1]);
        for (kv, cv) in &v.coeffs {
            let (c, d) = (kv[0], kv[1]);
            let coeff = cu.mul(cv);
            let mut put = |x: usize, y: usize, rest: [usize; 2], sign: i64| {
                for (e, sc) in &alg.structure[x][y] {
                    let c = coeff
                        .mul_gauss(&crate::exactalg::GaussRat::new(
                            sc * num_rational::BigRational::from_integer(sign.into()),
                            num_traits::Zero::zero(),
                        ));
                    out.add_term(&[*e, rest[0], rest[1]], c);
                }
            };
            put(a, c, [b, d], 1);
            put(a, d, [b, c], -1);
            put(b, c, [a, d], -1);
            put(b, d, [a, c], 1);
        }
    }
    Ok(out)
}

/// Adjoint action of basis element x_idx on Lambda^k g, via structure
/// constants: ad_X(u1^...^uk) = sum_i u1^...^[X,u_i]^...^uk.
pub fn ad_action(alg: &LieAlgebra, x_idx: usize, t: &AltTensor) -> AltTensor {
    let mut out = AltTensor::zero(t.dim, t.degree);
    for (key, c) in &t.coeffs {
        for pos in 0..key.len() {
            for (e, sc) in &alg.structure[x_idx][key[pos]] {
                let mut idx = key.clone();
                idx[pos] = *e;
                out.add_term(
                    &idx,
                    c.mul_gauss(&crate::exactalg::GaussRat::new(
                        sc.clone(),
                        num_traits::Zero::zero(),
                    )),
                );
            }
        }
    }
    out
}

/// Ad-invariance defect [X (x) 1 + 1 (x) X, rho] in End V (x) End V
/// coordinates, for a concrete matrix X.
pub fn end_ad_defect(rho: &EndTensor, x: &super::matrix::GMat) -> EndTensor {
    let n = rho.n;
    let mut out = EndTensor::zero(n);
    for (&(j, k, l, m), c) in &rho.coeffs {
        for a in 0..n {
            // (X (x) 1) rho : X_{aj} moves j -> a
            if !x[(a, j)].is_zero() {
                out.add_term((a, k, l, m), c.mul_gauss(&x[(a, j)]));
            }
            // (1 (x) X) rho
            if !x[(a, k)].is_zero() {
                out.add_term((j, a, l, m), c.mul_gauss(&x[(a, k)]));
            }
            // - rho (X (x) 1): e_j^l X = sum_c X_{lc} e_j^c
            if !x[(l, a)].is_zero() {
                out.add_term((j, k, a, m), c.mul_gauss(&x[(l, a)]).neg());
            }
            // - rho (1 (x) X)
            if !x[(m, a)].is_zero() {
                out.add_term((j, k, l, a), c.mul_gauss(&x[(m, a)]).neg());
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::algebra::build_algebra;

    #[test]
    fn sl2_standard_r() {
        let sl2 = build_algebra(AlgKind::Sl, 2).unwrap();
        let r = standard_r(&sl2).unwrap();
        assert_eq!(r.coeffs.len(), 1);
        let e12 = sl2.basis_index("E(1,2)").unwrap();
        let e21 = sl2.basis_index("E(2,1)").unwrap();
        let (key, c) = r.coeffs.iter().next().unwrap();
        let (mut a, mut b, mut sign) = (e12, e21, Scalar::eps());
        if a > b {
            std::mem::swap(&mut a, &mut b);
            sign = sign.neg();
        }
        assert_eq!(key, &vec![a, b]);
        assert_eq!(c, &sign);
    }

    #[test]
    fn so3_standard_r_single_triple() {
        // only j=1, k=2, j'=3 survives at n=3: r = eps M(1,2)^M(2,3)
        let so3 = build_algebra(AlgKind::So, 3).unwrap();
        let r = standard_r(&so3).unwrap();
        assert_eq!(r.coeffs.len(), 1);
        let m12 = so3.basis_index("M(1,2)").unwrap();
        let m23 = so3.basis_index("M(2,3)").unwrap();
        assert!(r.coeffs.contains_key(&vec![m12.min(m23), m12.max(m23)]));
    }

    #[test]
    fn lorentz_r_squared_matches_paper_sign() {
        // r- = i lambda X+ ^ X- ; [r-,r-] = 4 lambda^2 X+ ^ H ^ X-
        let lor = build_algebra(AlgKind::Lorentz, 4).unwrap();
        let lam = Scalar::param("lambda").unwrap();
        let mut r = AltTensor::zero(lor.dim(), 2);
        r.add_term(
            &[lor.basis_index("X+").unwrap(), lor.basis_index("X-").unwrap()],
            Scalar::i().mul(&lam),
        );
        let sq = algebraic_schouten(&lor, &r, &r).unwrap();
        // expected: 4 lambda^2 X+ ^ H ^ X- = -4 lambda^2 H ^ X+ ^ X-
        let mut expected = AltTensor::zero(lor.dim(), 3);
        expected.add_term(
            &[
                lor.basis_index("X+").unwrap(),
                lor.basis_index("H").unwrap(),
                lor.basis_index("X-").unwrap(),
            ],
            lam.mul(&lam).mul(&Scalar::from_int(4)),
        );
        assert_eq!(sq, expected);
    }

    #[test]
    fn borel_r_is_triangular() {
        let gl2 = build_algebra(AlgKind::Gl, 2).unwrap();
        // H ^ X+ inside gl(2): H = E(1,1) - E(2,2) requires combination;
        // use the wedge bilinearity: r = (E(1,1) - E(2,2)) ^ E(1,2)
        let e11 = gl2.basis_index("E(1,1)").unwrap();
        let e22 = gl2.basis_index("E(2,2)").unwrap();
        let e12 = gl2.basis_index("E(1,2)").unwrap();
        let mut r = AltTensor::zero(gl2.dim(), 2);
        r.add_term(&[e11, e12], Scalar::one());
        r.add_term(&[e22, e12], Scalar::from_int(-1));
        let sq = algebraic_schouten(&gl2, &r, &r).unwrap();
        assert!(sq.is_zero());
    }

    #[test]
    fn schouten_is_symmetric_in_arguments() {
        let so4 = build_algebra(AlgKind::So, 4).unwrap();
        let mut u = AltTensor::zero(so4.dim(), 2);
        let mut v = AltTensor::zero(so4.dim(), 2);
        u.add_term(&[0, 3], Scalar::from_int(2));
        u.add_term(&[1, 4], Scalar::eps());
        v.add_term(&[2, 5], Scalar::from_int(-1));
        v.add_term(&[0, 1], Scalar::one());
        let uv = algebraic_schouten(&so4, &u, &v).unwrap();
        let vu = algebraic_schouten(&so4, &v, &u).unwrap();
        assert_eq!(uv, vu);
    }

    #[test]
    fn gl_symmetric_modification_is_eps() {
        let gl2 = build_algebra(AlgKind::Gl, 2).unwrap();
        let s = EndTensor::from_pair(&gl2, &invariant_s(&gl2).unwrap());
        assert_eq!(symmetric_modification(&s).unwrap(), Scalar::eps());
        // (s_eps)^{jk}_{lm} = eps (d^j_m d^k_l + d^j_l d^k_m)
        let s_eps = s.add_lambda_identity(&Scalar::eps());
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    for m in 0..2 {
                        let expect = Scalar::eps().mul(&Scalar::from_int(
                            i64::from(j == m && k == l) + i64::from(j == l && k == m),
                        ));
                        assert_eq!(s_eps.get(j, k, l, m), expect);
                    }
                }
            }
        }
    }

    #[test]
    fn zero_tensor_needs_no_modification() {
        let s = EndTensor::zero(2);
        assert_eq!(symmetric_modification(&s).unwrap(), Scalar::zero());
    }
}
