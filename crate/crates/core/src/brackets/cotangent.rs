//! Cotangent bracket-table constructors: the canonical table, the
//! triangular case and the quasitriangular (general) case with its
//! lambda-modified symmetric term.

use super::table::BracketTable;
use crate::error::Result;
use crate::exactalg::{Poly, Ring, Scalar};
use crate::liealg::tensor::EndTensor;
use std::sync::Arc;

/// Coordinates (x^1..x^n, p_1..p_n).
pub fn cotangent_ring(n: usize) -> Arc<Ring> {
    let mut vars: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    vars.extend((1..=n).map(|i| format!("p{i}")));
    Ring::new(vars)
}

/// Canonical table: {x^k, p_l} = -delta^k_l, everything else zero.
pub fn pi0_table(n: usize) -> BracketTable {
    let ring = cotangent_ring(n);
    let mut t = BracketTable::new(&ring, "canonical pi0");
    for k in 0..n {
        t.set_poly(k, n + k, Poly::from_int(&ring, -1));
    }
    t
}

fn quadratic_entries(t: &mut BracketTable, r: &EndTensor, w: &EndTensor, n: usize, with_delta: bool) {
    let ring = t.ring.clone();
    let x = |i: usize| Poly::var(&ring, i);
    let p = |i: usize| Poly::var(&ring, n + i);
    // {x^j, x^k} = sum r^{jk}_{lm} x^l x^m
    for j in 0..n {
        for k in j + 1..n {
            let mut acc = Poly::zero(&ring);
            for l in 0..n {
                for m in 0..n {
                    let c = r.get(j, k, l, m);
                    if !c.is_zero() {
                        acc = acc.add(&x(l).mul(&x(m)).mul_scalar(&c));
                    }
                }
            }
            t.set_poly(j, k, acc);
        }
    }
    // {p_l, p_m} = sum p_j p_k r^{jk}_{lm}
    for l in 0..n {
        for m in l + 1..n {
            let mut acc = Poly::zero(&ring);
            for j in 0..n {
                for k in 0..n {
                    let c = r.get(j, k, l, m);
                    if !c.is_zero() {
                        acc = acc.add(&p(j).mul(&p(k)).mul_scalar(&c));
                    }
                }
            }
            t.set_poly(n + l, n + m, acc);
        }
    }
    // {x^k, p_l} = -delta^k_l + sum_{jm} p_j w^{jk}_{lm} x^m
    for k in 0..n {
        for l in 0..n {
            let mut acc = if with_delta && k == l {
                Poly::from_int(&ring, -1)
            } else {
                Poly::zero(&ring)
            };
            for j in 0..n {
                for m in 0..n {
                    let c = w.get(j, k, l, m);
                    if !c.is_zero() {
                        acc = acc.add(&p(j).mul(&x(m)).mul_scalar(&c));
                    }
                }
            }
            t.set_poly(k, n + l, acc);
        }
    }
}

/// Triangular case, Poisson brackets (PB1)/(PB2): the same r supplies the
/// x-x, p-p and cross relations, plus the canonical -delta term.
pub fn triangular_cotangent_table(r: &EndTensor, n: usize) -> BracketTable {
    let ring = cotangent_ring(n);
    let mut t = BracketTable::new(&ring, "triangular (PB1)/(PB2)");
    quadratic_entries(&mut t, r, r, n, true);
    t
}

/// General quasitriangular case: x-x and p-p from r alone, the cross block
/// from w_lambda = r + s_lambda. The caller supplies s_lambda with any
/// required prefactor (e.g. -i s_lambda for the imaginary-quasitriangular
/// so(n) case) already folded into its coefficients. Fails unless s_lambda
/// satisfies the index symmetry (symsl).
pub fn general_cotangent_table(r: &EndTensor, s_lambda: &EndTensor) -> Result<BracketTable> {
    s_lambda.check_upper_symmetry()?;
    Ok(general_cotangent_table_unchecked(r, s_lambda))
}

/// As [`general_cotangent_table`] but without the (symsl) check; used to
/// exhibit the Jacobi failure for off-symmetric modifications.
pub fn general_cotangent_table_unchecked(r: &EndTensor, s_lambda: &EndTensor) -> BracketTable {
    let n = r.n;
    let w = r.add(s_lambda);
    let ring = cotangent_ring(n);
    let mut t = BracketTable::new(&ring, "Eq. (general) with w_lambda");
    quadratic_entries(&mut t, r, &w, n, true);
    t
}

/// The purely quadratic part (quadr): as the general table but without the
/// -delta term; w is supplied directly.
pub fn quadratic_table(r: &EndTensor, w: &EndTensor) -> BracketTable {
    let n = r.n;
    let ring = cotangent_ring(n);
    let mut t = BracketTable::new(&ring, "quadratic part (quadr)");
    quadratic_entries(&mut t, r, w, n, false);
    t
}

/// The sl(n)/gl(n) coordinate table: {x^j, x^k} = eps x^j x^k for j < k.
pub fn slxx_table(n: usize) -> BracketTable {
    let ring = Ring::new((1..=n).map(|i| format!("x{i}")).collect::<Vec<_>>());
    let mut t = BracketTable::new(&ring, "(slxx)");
    let eps = Scalar::eps();
    for j in 0..n {
        for k in j + 1..n {
            t.set_poly(j, k, Poly::var(&ring, j).mul(&Poly::var(&ring, k)).mul_scalar(&eps));
        }
    }
    t
}

fn sgn(x: i64) -> i64 {
    x.signum()
}

/// Direct transcription of the quadratic phase-space brackets (xxpp) with
/// the canonical modification (mixed1).
pub fn xxpp_mixed1_table(n: usize) -> BracketTable {
    let ring = cotangent_ring(n);
    let mut t = BracketTable::new(&ring, "(xxpp)+(mixed1)");
    let eps = Scalar::eps();
    let x = |i: usize| Poly::var(&ring, i);
    let p = |i: usize| Poly::var(&ring, n + i);
    for j in 0..n {
        for k in j + 1..n {
            t.set_poly(j, k, x(j).mul(&x(k)).mul_scalar(&eps));
            t.set_poly(n + j, n + k, p(j).mul(&p(k)).mul_scalar(&eps.neg()));
        }
    }
    for j in 0..n {
        for k in 0..n {
            // {x^j, p_k} = -delta + eps [ x^j p_k + delta * sum_i (1 - sgn(i-j)) x^i p_i ]
            let mut acc = x(j).mul(&p(k));
            if j == k {
                for i in 0..n {
                    let c = 1 - sgn(i as i64 - j as i64);
                    if c != 0 {
                        acc = acc.add(&x(i).mul(&p(i)).mul_scalar(&Scalar::from_int(c)));
                    }
                }
            }
            let mut entry = acc.mul_scalar(&eps);
            if j == k {
                entry = entry.sub(&Poly::one(&ring));
            }
            t.set_poly(j, n + k, entry);
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::RationalFn;
    use crate::liealg::algebra::{build_algebra, AlgKind};
    use crate::liealg::rmatrix::{invariant_s, standard_r};
    use crate::liealg::tensor::EndTensor;

    #[test]
    fn r_zero_gives_canonical_table() {
        let t = triangular_cotangent_table(&EndTensor::zero(2), 2);
        assert_eq!(t.entry(0, 2), RationalFn::from_poly(Poly::from_int(&t.ring, -1)));
        assert!(t.entry(0, 1).is_zero());
        assert_eq!(t.to_json()["entries"], pi0_table(2).to_json()["entries"]);
    }

    #[test]
    fn gl_general_equals_xxpp_mixed1() {
        for n in [2usize, 3] {
            let gl = build_algebra(AlgKind::Gl, n).unwrap();
            let r = EndTensor::from_wedge(&gl, &standard_r(&gl).unwrap());
            let s = EndTensor::from_pair(&gl, &invariant_s(&gl).unwrap())
                .add_lambda_identity(&Scalar::eps());
            let t = general_cotangent_table(&r, &s).unwrap();
            let reference = xxpp_mixed1_table(n);
            for i in 0..2 * n {
                for j in 0..2 * n {
                    assert_eq!(t.entry(i, j), reference.entry(i, j), "entry ({i},{j}) n={n}");
                }
            }
        }
    }

    #[test]
    fn mixed1_diagonal_entry() {
        // {x^1, p_1} = -1 + 2 eps x^1 p_1 at any n
        for n in [1usize, 2, 4] {
            let t = xxpp_mixed1_table(n);
            let ring = t.ring.clone();
            let expect = Poly::var(&ring, 0)
                .mul(&Poly::var(&ring, n))
                .mul_scalar(&Scalar::eps().mul(&Scalar::from_int(2)))
                .sub(&Poly::one(&ring));
            assert_eq!(t.entry(0, n), RationalFn::from_poly(expect));
        }
    }

    #[test]
    fn symsl_check_rejects_bare_s() {
        let gl2 = build_algebra(AlgKind::Gl, 2).unwrap();
        let r = EndTensor::from_wedge(&gl2, &standard_r(&gl2).unwrap());
        let s = EndTensor::from_pair(&gl2, &invariant_s(&gl2).unwrap());
        assert!(general_cotangent_table(&r, &s).is_err());
    }
}
