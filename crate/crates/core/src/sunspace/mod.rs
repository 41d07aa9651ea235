//! The SU(n) story on C^n: the fundamental bivector in (z, zbar)
//! coordinates, the invariant ansatz Delta = a/2 pi0 + b/2 z^Jz, the
//! solvability condition a a' + b (a - a' t) = t and the three explicit
//! bracket families (spheres, twisted CCR, the degree-4 case).

use crate::brackets::{casimir_residual, table_from_bivector, BracketTable};
use crate::error::{Error, Result};
use crate::exactalg::{Poly, RationalFn, Ring, Scalar};
use crate::mvfield::MultivectorField;
use std::sync::Arc;

/// Coordinates (z^1..z^n, zb^1..zb^n).
pub fn sun_ring(n: usize) -> Arc<Ring> {
    let mut vars: Vec<String> = (1..=n).map(|i| format!("z{i}")).collect();
    vars.extend((1..=n).map(|i| format!("zb{i}")));
    Ring::new(vars)
}

/// The single-variable ring of the ansatz functions a(t), b(t); t stands
/// for ||z||^2.
pub fn t_ring() -> Arc<Ring> {
    Ring::new(vec!["t"])
}

/// ||z||^2 = sum z^k zb^k.
pub fn norm2(n: usize, ring: &Arc<Ring>) -> Poly {
    let mut acc = Poly::zero(ring);
    for k in 0..n {
        acc = acc.add(&Poly::var(ring, k).mul(&Poly::var(ring, n + k)));
    }
    acc
}

fn sgn(x: i64) -> i64 {
    x.signum()
}

/// The fundamental bivector of the standard su(n) r-matrix on C^n, with
/// eps carried formally:
/// r_V = i eps sum_{jk} sgn(k-j) ( 1/2 nabla_j ^ nabla_k
///        - 1/2 nb_j ^ nb_k + |z^j|^2 d_k ^ db_k ).
pub fn sun_r_field(n: usize) -> MultivectorField {
    let ring = sun_ring(n);
    let mut out = MultivectorField::zero(&ring, 2);
    let ie = Scalar::i().mul(&Scalar::eps());
    let z = |i: usize| Poly::var(&ring, i);
    let zb = |i: usize| Poly::var(&ring, n + i);
    for j in 0..n {
        for k in 0..n {
            let s = sgn(k as i64 - j as i64);
            if s == 0 {
                continue;
            }
            let c = ie.mul(&Scalar::from_frac(s, 2));
            // (1/2) nabla_j ^ nabla_k = (1/2) z^j z^k d_j ^ d_k
            out.add_term(&[j, k], z(j).mul(&z(k)).mul_scalar(&c));
            // -(1/2) nb_j ^ nb_k
            out.add_term(&[n + j, n + k], zb(j).mul(&zb(k)).mul_scalar(&c.neg()));
            // |z^j|^2 d_k ^ db_k
            out.add_term(
                &[k, n + k],
                z(j).mul(&zb(j)).mul_scalar(&ie.mul(&Scalar::from_int(s))),
            );
        }
    }
    out
}

/// pi0 = 2 i sum_k d_k ^ db_k, the canonical constant bivector on C^n.
pub fn pi0_field(n: usize) -> MultivectorField {
    let ring = sun_ring(n);
    let mut out = MultivectorField::zero(&ring, 2);
    let c = Scalar::i().mul(&Scalar::from_int(2));
    for k in 0..n {
        out.add_term(&[k, n + k], Poly::constant(&ring, c.clone()));
    }
    out
}

/// The radial field z = sum (z^b d_b + zb^b db_b).
pub fn euler_field(n: usize) -> MultivectorField {
    let ring = sun_ring(n);
    let mut out = MultivectorField::zero(&ring, 1);
    for b in 0..n {
        out.add_term(&[b], Poly::var(&ring, b));
        out.add_term(&[n + b], Poly::var(&ring, n + b));
    }
    out
}

/// Jz = i sum (z^b d_b - zb^b db_b).
pub fn jz_field(n: usize) -> MultivectorField {
    let ring = sun_ring(n);
    let mut out = MultivectorField::zero(&ring, 1);
    let i = Scalar::i();
    for b in 0..n {
        out.add_term(&[b], Poly::var(&ring, b).mul_scalar(&i));
        out.add_term(&[n + b], Poly::var(&ring, n + b).mul_scalar(&i.neg()));
    }
    out
}

/// ||z||^2 Jz ^ pi0, the right-hand side of the Schouten identities.
pub fn jz_wedge_pi0(n: usize) -> MultivectorField {
    let t = norm2(n, &sun_ring(n));
    jz_field(n)
        .wedge(&pi0_field(n))
        .expect("same space")
        .mul_poly(&t)
}

/// The invariant ansatz Delta = 1/2 a(||z||^2) pi0 + 1/2 b(||z||^2) z ^ Jz
/// for polynomial a, b in the t-ring.
pub fn invariant_delta(a: &Poly, b: &Poly, n: usize) -> MultivectorField {
    let ring = sun_ring(n);
    let t = norm2(n, &ring);
    let a_sub = a.substitute(&ring, &[t.clone()]).expect("single variable");
    let b_sub = b.substitute(&ring, &[t]).expect("single variable");
    let half = Scalar::from_frac(1, 2);
    let zjz = euler_field(n).wedge(&jz_field(n)).expect("same space");
    pi0_field(n)
        .mul_poly(&a_sub)
        .scale(&half)
        .add(&zjz.mul_poly(&b_sub).scale(&half))
}

/// The solvability residual a a' + b (a - a' t) - t in the t-ring;
/// identically zero iff [Delta, Delta] = ||z||^2 Jz ^ pi0.
pub fn warunek_residual(a: &RationalFn, b: &RationalFn) -> RationalFn {
    let ring = a.ring().clone();
    let t = RationalFn::from_poly(Poly::var(&ring, 0));
    let ap = a.diff(0);
    a.mul(&ap)
        .add(&b.mul(&a.sub(&ap.mul(&t))))
        .sub(&t)
}

/// The rational b = (t - a a') / (a - a' t) solving the condition for a
/// given a; errors when the denominator vanishes identically.
pub fn solve_for_b(a: &Poly) -> Result<RationalFn> {
    let ring = a.ring.clone();
    let t = Poly::var(&ring, 0);
    let ap = a.diff(0);
    let den = a.sub(&ap.mul(&t));
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let num = t.sub(&a.mul(&ap));
    Ok(RationalFn::from_poly(num)
        .div(&RationalFn::from_poly(den))
        .expect("nonzero denominator"))
}

/// Contraction of a bivector with d||z||^2; zero iff the field is tangent
/// to the spheres ||z|| = const.
pub fn tangency_defect(delta: &MultivectorField) -> MultivectorField {
    let n = delta.space.nvars() / 2;
    let t = norm2(n, &delta.space);
    delta.contract_first(&t)
}

/// The cataloged families of Poisson structures on C^n.
#[derive(Debug, Clone)]
pub enum SunCase {
    /// a = sigma t, b = sigma: tangent to spheres, ||z||^2 is a Casimir.
    Sphere { sigma: i64 },
    /// a = a0 + sigma t, b = -sigma with h = eps a0 kept formal.
    TwistedCcr { sigma: i64 },
    /// a = h, b = t/h with formal h != 0.
    Degree4 { h: Scalar },
    /// Arbitrary polynomial ansatz (a, b) in t.
    Custom { a: Poly, b: Poly },
}

impl SunCase {
    pub fn label(&self) -> String {
        match self {
            SunCase::Sphere { sigma } => format!("sphere(sigma={sigma})"),
            SunCase::TwistedCcr { sigma } => format!("twisted-ccr(sigma={sigma})"),
            SunCase::Degree4 { .. } => "degree4(h)".into(),
            SunCase::Custom { a, b } => format!("custom(a={}, b={})", a.render(), b.render()),
        }
    }
}

/// A family table together with its case tag.
pub struct SunFamily {
    pub case: SunCase,
    pub table: BracketTable,
}

fn validate_sigma(sigma: i64) -> Result<()> {
    if sigma == 1 || sigma == -1 {
        Ok(())
    } else {
        Err(Error::Invalid(format!("sigma must be +1 or -1, got {sigma}")))
    }
}

/// Build the bracket table of a family exactly as displayed, with sigma
/// concrete and eps, h formal.
pub fn family_table(case: SunCase, n: usize) -> Result<SunFamily> {
    if n < 2 {
        return Err(Error::UnsupportedAlgebra { kind: "su".into(), n });
    }
    let ring = sun_ring(n);
    let mut t = BracketTable::new(&ring, format!("su family {}", case.label()));
    let eps = Scalar::eps();
    let ie = Scalar::i().mul(&eps);
    let z = |i: usize| Poly::var(&ring, i);
    let zb = |i: usize| Poly::var(&ring, n + i);
    let abs2 = |i: usize| z(i).mul(&zb(i));
    // common holomorphic part {z^j, z^k} = i eps z^j z^k and its conjugate
    for j in 0..n {
        for k in j + 1..n {
            t.set_poly(j, k, z(j).mul(&z(k)).mul_scalar(&ie));
            t.set_poly(n + j, n + k, zb(j).mul(&zb(k)).mul_scalar(&ie.neg()));
        }
    }
    let nz2 = norm2(n, &ring);
    match &case {
        SunCase::Sphere { sigma } => {
            validate_sigma(*sigma)?;
            let s = *sigma;
            for j in 0..n {
                for k in 0..n {
                    if j != k {
                        t.set_poly(
                            j,
                            n + k,
                            z(j).mul(&zb(k)).mul_scalar(&ie.mul(&Scalar::from_int(-s))),
                        );
                    } else {
                        // 2 sigma i eps sum_{sigma k < sigma j} |z^k|^2
                        let mut acc = Poly::zero(&ring);
                        for k0 in 0..n {
                            if s * (k0 as i64 + 1) < s * (j as i64 + 1) {
                                acc = acc.add(&abs2(k0));
                            }
                        }
                        t.set_poly(j, n + j, acc.mul_scalar(&ie.mul(&Scalar::from_int(2 * s))));
                    }
                }
            }
        }
        SunCase::TwistedCcr { sigma } => {
            validate_sigma(*sigma)?;
            let s = *sigma;
            let ih = Scalar::i().mul(&Scalar::param("h")?);
            for j in 0..n {
                for k in 0..n {
                    if j != k {
                        t.set_poly(
                            j,
                            n + k,
                            z(j).mul(&zb(k)).mul_scalar(&ie.mul(&Scalar::from_int(s))),
                        );
                    } else {
                        // i h + 2 sigma i eps sum_{sigma k <= sigma j} |z^k|^2
                        let mut acc = Poly::zero(&ring);
                        for k0 in 0..n {
                            if s * (k0 as i64 + 1) <= s * (j as i64 + 1) {
                                acc = acc.add(&abs2(k0));
                            }
                        }
                        let entry = acc
                            .mul_scalar(&ie.mul(&Scalar::from_int(2 * s)))
                            .add(&Poly::constant(&ring, ih.clone()));
                        t.set_poly(j, n + j, entry);
                    }
                }
            }
        }
        SunCase::Degree4 { h } => {
            if h.is_zero() {
                return Err(Error::Invalid("degree4 family needs h != 0".into()));
            }
            let h_inv = h
                .unit_inverse()
                .ok_or_else(|| Error::Invalid("h must be an invertible parameter monomial".into()))?;
            for j in 0..n {
                for k in 0..n {
                    if j != k {
                        // -i (eps/h) ||z||^2 z^j zb^k
                        t.set_poly(
                            j,
                            n + k,
                            nz2.mul(&z(j))
                                .mul(&zb(k))
                                .mul_scalar(&ie.mul(&h_inv).neg()),
                        );
                    } else {
                        // i eps h + i eps ( -(1/h)||z||^2 |z^j|^2 + sum_k sgn(j-k)|z^k|^2 )
                        let mut acc = nz2.mul(&abs2(j)).mul_scalar(&h_inv.neg());
                        for k0 in 0..n {
                            let s0 = sgn(j as i64 - k0 as i64);
                            if s0 != 0 {
                                acc = acc.add(&abs2(k0).mul_scalar(&Scalar::from_int(s0)));
                            }
                        }
                        let entry = acc
                            .add(&Poly::constant(&ring, h.clone()))
                            .mul_scalar(&ie);
                        t.set_poly(j, n + j, entry);
                    }
                }
            }
        }
        SunCase::Custom { a, b } => {
            let a_sub = a.substitute(&ring, &[nz2.clone()]).expect("single variable");
            let b_sub = b.substitute(&ring, &[nz2.clone()]).expect("single variable");
            for j in 0..n {
                for k in 0..n {
                    if j != k {
                        t.set_poly(j, n + k, b_sub.mul(&z(j)).mul(&zb(k)).mul_scalar(&ie.neg()));
                    } else {
                        let mut acc = a_sub.sub(&b_sub.mul(&abs2(j)));
                        for k0 in 0..n {
                            let s0 = sgn(j as i64 - k0 as i64);
                            if s0 != 0 {
                                acc = acc.add(&abs2(k0).mul_scalar(&Scalar::from_int(s0)));
                            }
                        }
                        t.set_poly(j, n + j, acc.mul_scalar(&ie));
                    }
                }
            }
        }
    }
    Ok(SunFamily { case, table: t })
}

/// ||z||^2 residuals under a family table; all zero iff it is a Casimir.
pub fn sphere_casimir(fam: &SunFamily) -> Vec<RationalFn> {
    let n = fam.table.n_generators() / 2;
    let f = RationalFn::from_poly(norm2(n, &fam.table.ring));
    casimir_residual(&fam.table, &f)
}

/// Hermiticity of a family table: conj{f, g} = {conj f, conj g} on the
/// generators, via the z <-> zb swap with eps real.
pub fn hermiticity_defects(fam: &SunFamily) -> Vec<Poly> {
    let n = fam.table.n_generators() / 2;
    let swap = crate::mvfield::su_swap(n);
    let mut out = Vec::new();
    for i in 0..2 * n {
        for j in i + 1..2 * n {
            let lhs = fam
                .table
                .entry(i, j)
                .as_poly()
                .expect("polynomial family entry")
                .conjugate(&swap)
                .expect("involution");
            let rhs = fam
                .table
                .entry(swap[i], swap[j])
                .as_poly()
                .expect("polynomial family entry")
                .clone();
            let d = lhs.sub(&rhs);
            if !d.is_zero() {
                out.push(d);
            }
        }
    }
    out
}

/// The bivector of a custom family must match r_V + eps * Delta(a, b).
pub fn custom_family_bivector(a: &Poly, b: &Poly, n: usize) -> MultivectorField {
    sun_r_field(n).add(&invariant_delta(a, b, n).scale(&Scalar::eps()))
}

/// A family table built from its bivector, for cross-checking the
/// transcribed entries.
pub fn table_from_custom_bivector(a: &Poly, b: &Poly, n: usize) -> BracketTable {
    table_from_bivector(&custom_family_bivector(a, b, n), "custom bivector")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brackets::jacobiator_nonzero;

    #[test]
    fn warunek_cataloged_cases() {
        let ring = t_ring();
        let t = Poly::var(&ring, 0);
        let poly = |p: Poly| RationalFn::from_poly(p);
        // case 1: a = t, b = b0 arbitrary
        let b0 = Poly::constant(&ring, Scalar::param("b0").unwrap());
        assert!(warunek_residual(&poly(t.clone()), &poly(b0.clone())).is_zero());
        // case 1 with a1 = -1
        assert!(warunek_residual(&poly(t.neg()), &poly(b0)).is_zero());
        // case 2: a = a0 + t, b = -1
        let a0 = Poly::constant(&ring, Scalar::param("a0").unwrap());
        assert!(warunek_residual(
            &poly(a0.add(&t)),
            &poly(Poly::from_int(&ring, -1))
        )
        .is_zero());
        // degree-4: a = h, b = t/h
        let h = Poly::constant(&ring, Scalar::param("h").unwrap());
        let b = RationalFn::from_poly(t.clone())
            .div(&RationalFn::from_poly(h.clone()))
            .unwrap();
        assert!(warunek_residual(&poly(h), &b).is_zero());
        // a = 1 - t^2 with b from the solution formula; denominator 1 + t^2
        let a = Poly::one(&ring).sub(&t.mul(&t));
        let b = solve_for_b(&a).unwrap();
        let bc = b.canonical();
        assert_eq!(bc.den().render(), "t^2 + 1");
        assert!(warunek_residual(&poly(a), &b).is_zero());
        // a violating pair: a = 1, b = 1 leaves residual 1 - t
        let res = warunek_residual(&poly(Poly::one(&ring)), &poly(Poly::one(&ring)));
        assert!(!res.is_zero());
    }

    #[test]
    fn sphere_table_matches_displayed_entries() {
        let fam = family_table(SunCase::Sphere { sigma: 1 }, 2).unwrap();
        let ring = &fam.table.ring;
        // {z1, zb1} = 0 ; {z2, zb2} = 2 i eps |z1|^2
        assert!(fam.table.entry(0, 2).is_zero());
        let expect = Poly::var(ring, 0)
            .mul(&Poly::var(ring, 2))
            .mul_scalar(&Scalar::i().mul(&Scalar::eps()).mul(&Scalar::from_int(2)));
        assert_eq!(fam.table.entry(1, 3), RationalFn::from_poly(expect));
    }

    #[test]
    fn families_are_poisson_and_hermitian_n2() {
        for case in [
            SunCase::Sphere { sigma: 1 },
            SunCase::Sphere { sigma: -1 },
            SunCase::TwistedCcr { sigma: 1 },
            SunCase::TwistedCcr { sigma: -1 },
            SunCase::Degree4 {
                h: Scalar::param("h").unwrap(),
            },
        ] {
            let fam = family_table(case, 2).unwrap();
            assert!(
                jacobiator_nonzero(&fam.table).is_empty(),
                "{} not Poisson",
                fam.case.label()
            );
            assert!(hermiticity_defects(&fam).is_empty());
        }
    }

    #[test]
    fn sphere_casimir_and_ccr_noncasimir() {
        let sph = family_table(SunCase::Sphere { sigma: -1 }, 2).unwrap();
        assert!(sphere_casimir(&sph).iter().all(|r| r.is_zero()));
        let ccr = family_table(SunCase::TwistedCcr { sigma: 1 }, 2).unwrap();
        assert!(sphere_casimir(&ccr).iter().any(|r| !r.is_zero()));
    }

    #[test]
    fn degree4_rejects_zero_h() {
        assert!(family_table(SunCase::Degree4 { h: Scalar::zero() }, 2).is_err());
    }

    #[test]
    fn custom_table_equals_bivector_route() {
        // sphere sigma=+1 as the custom ansatz a = t, b = 1
        let ring = t_ring();
        let a = Poly::var(&ring, 0);
        let b = Poly::one(&ring);
        let fam = family_table(SunCase::Custom { a: a.clone(), b: b.clone() }, 2).unwrap();
        let via_bivector = table_from_custom_bivector(&a, &b, 2);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(fam.table.entry(i, j), via_bivector.entry(i, j));
            }
        }
        // and it agrees with the sphere table entry by entry
        let sph = family_table(SunCase::Sphere { sigma: 1 }, 2).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(fam.table.entry(i, j), sph.table.entry(i, j));
            }
        }
    }

    #[test]
    fn tangency_iff_a_equals_bt() {
        let ring = t_ring();
        let t = Poly::var(&ring, 0);
        // a = t, b = 1: tangent
        let d = invariant_delta(&t, &Poly::one(&ring), 2);
        assert!(tangency_defect(&d).is_zero());
        // a = 1, b = 0: not tangent
        let d2 = invariant_delta(&Poly::one(&ring), &Poly::zero(&ring), 2);
        assert!(!tangency_defect(&d2).is_zero());
        // r_V itself is tangent to spheres
        assert!(tangency_defect(&sun_r_field(2)).is_zero());
    }
}
