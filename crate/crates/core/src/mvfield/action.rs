//! Actions of the cataloged algebras on coordinate spaces and the
//! fundamental multivector fields they induce.
//!
//! Fundamental vector fields use the homomorphism normalization
//! X_M(x) = -(A x + b) (the flow of exp(-tX)), so [X_M, Y_M] = [X,Y]_M holds
//! with plain matrix-commutator structure constants; on even degrees this
//! agrees with the w_M(x) = wx convention.

use super::field::MultivectorField;
use crate::error::{Error, Result};
use crate::exactalg::{GaussRat, Poly, Ring, Scalar};
use crate::liealg::algebra::{AlgKind, LieAlgebra};
use crate::liealg::matrix::GMat;
use crate::liealg::tensor::AltTensor;
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct AffineMap {
    pub linear: GMat,
    pub translation: Vec<GaussRat>,
}

/// An algebra action: one affine map per basis element, acting on the
/// declared coordinate space.
#[derive(Debug, Clone)]
pub struct ActionSpec {
    pub space: Arc<Ring>,
    pub maps: Vec<AffineMap>,
}

impl ActionSpec {
    pub fn dim(&self) -> usize {
        self.maps.len()
    }

    /// The fundamental vector field of basis element `idx`.
    pub fn fundamental_vector(&self, idx: usize) -> MultivectorField {
        let n = self.space.nvars();
        let map = &self.maps[idx];
        let mut out = MultivectorField::zero(&self.space, 1);
        for r in 0..n {
            let mut p = Poly::constant(&self.space, Scalar::from_gauss(map.translation[r].clone()).neg());
            for c in 0..n {
                if !map.linear[(r, c)].is_zero() {
                    p = p.sub(
                        &Poly::var(&self.space, c)
                            .mul_scalar(&Scalar::from_gauss(map.linear[(r, c)].clone())),
                    );
                }
            }
            out.add_term(&[r], p);
        }
        out
    }

    /// Representation property: linear parts commute to the bracket, with
    /// the affine cocycle for translations.
    pub fn check_representation(&self, alg: &LieAlgebra) -> Result<()> {
        let dim = self.dim();
        if dim != alg.dim() {
            return Err(Error::AlgebraMismatch);
        }
        for a in 0..dim {
            for b in a + 1..dim {
                let la = &self.maps[a];
                let lb = &self.maps[b];
                let comm = la.linear.commutator(&lb.linear);
                let tr: Vec<GaussRat> = {
                    let t1 = la.linear.apply(&lb.translation);
                    let t2 = lb.linear.apply(&la.translation);
                    t1.iter().zip(&t2).map(|(x, y)| x - y).collect()
                };
                let mut expect_lin = GMat::zero(comm.rows, comm.cols);
                let mut expect_tr = vec![GaussRat::zero(); tr.len()];
                for (e, c) in &alg.structure[a][b] {
                    let g = GaussRat::new(c.clone(), num_traits::Zero::zero());
                    expect_lin = expect_lin.add(&self.maps[*e].linear.scale(&g));
                    for (t, s) in expect_tr.iter_mut().zip(&self.maps[*e].translation) {
                        *t += &(s * &g);
                    }
                }
                if comm != expect_lin || tr != expect_tr {
                    return Err(Error::Invalid(format!(
                        "action is not a representation on pair ({}, {})",
                        alg.basis_name(a),
                        alg.basis_name(b)
                    )));
                }
            }
        }
        Ok(())
    }
}

/// w_M for w in Lambda^k g: wedge of the fundamental vector fields,
/// extended linearly over the tensor coefficients.
pub fn fundamental_field(w: &AltTensor, act: &ActionSpec) -> Result<MultivectorField> {
    if w.dim != act.dim() {
        return Err(Error::AlgebraMismatch);
    }
    let mut out = MultivectorField::zero(&act.space, w.degree);
    for (key, c) in &w.coeffs {
        let mut field: Option<MultivectorField> = None;
        for &a in key {
            let v = act.fundamental_vector(a);
            field = Some(match field {
                None => v,
                Some(f) => f.wedge(&v)?,
            });
        }
        if let Some(f) = field {
            out = out.add(&f.scale(c));
        }
    }
    Ok(out)
}

fn coord_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// The defining linear action on x^1..x^n (gl, sl, so) or on the (x, p)
/// pairs for sp.
pub fn vector_action(alg: &LieAlgebra) -> Result<ActionSpec> {
    let space = match alg.kind {
        AlgKind::Gl | AlgKind::Sl | AlgKind::So => Ring::new(coord_names("x", alg.n)),
        AlgKind::Sp => {
            let mut v = coord_names("x", alg.n);
            v.extend(coord_names("p", alg.n));
            Ring::new(v)
        }
        _ => return Err(Error::UnsupportedAlgebra { kind: alg.kind.to_string(), n: alg.n }),
    };
    let maps = alg
        .basis
        .iter()
        .map(|(_, m)| AffineMap {
            linear: m.clone(),
            translation: vec![GaussRat::zero(); m.rows],
        })
        .collect();
    Ok(ActionSpec { space, maps })
}

/// The su(n) action on C^n in (z, zbar) coordinates: block diagonal
/// (X, conj X) on the stacked coordinate vector.
pub fn su_action(alg: &LieAlgebra) -> Result<ActionSpec> {
    if alg.kind != AlgKind::Su {
        return Err(Error::UnsupportedAlgebra { kind: alg.kind.to_string(), n: alg.n });
    }
    let n = alg.n;
    let mut names = coord_names("z", n);
    names.extend(coord_names("zb", n));
    let space = Ring::new(names);
    let maps = alg
        .basis
        .iter()
        .map(|(_, m)| {
            let mut big = GMat::zero(2 * n, 2 * n);
            for r in 0..n {
                for c in 0..n {
                    big[(r, c)] = m[(r, c)].clone();
                    big[(n + r, n + c)] = m[(r, c)].conj();
                }
            }
            AffineMap {
                linear: big,
                translation: vec![GaussRat::zero(); 2 * n],
            }
        })
        .collect();
    Ok(ActionSpec { space, maps })
}

/// The conjugation involution z_i <-> zb_i on the su action space.
pub fn su_swap(n: usize) -> Vec<usize> {
    let mut swap = vec![0usize; 2 * n];
    for i in 0..n {
        swap[i] = n + i;
        swap[n + i] = i;
    }
    swap
}

/// The Lorentz action on R^{1,3}: sl(2,C) acting on Hermitian matrices by
/// X -> A X + X A^dagger, realified in the coordinates x0..x3 through the
/// Pauli frame.
pub fn lorentz_action(alg: &LieAlgebra) -> Result<ActionSpec> {
    if alg.kind != AlgKind::Lorentz {
        return Err(Error::UnsupportedAlgebra { kind: alg.kind.to_string(), n: alg.n });
    }
    let space = Ring::new(vec!["x0", "x1", "x2", "x3"]);
    let i = GaussRat::i();
    let sigma: [GMat; 4] = [
        GMat::identity(2),
        GMat::from_fn(2, 2, |r, c| {
            if r != c {
                GaussRat::one()
            } else {
                GaussRat::zero()
            }
        }),
        GMat::from_fn(2, 2, |r, c| match (r, c) {
            (0, 1) => -&i,
            (1, 0) => i.clone(),
            _ => GaussRat::zero(),
        }),
        GMat::from_fn(2, 2, |r, c| match (r, c) {
            (0, 0) => GaussRat::one(),
            (1, 1) => GaussRat::from_int(-1),
            _ => GaussRat::zero(),
        }),
    ];
    let half = GaussRat::from_frac(1, 2);
    let maps = alg
        .basis
        .iter()
        .map(|(_, a)| {
            let adj = a.conj_transpose();
            let mut m = GMat::zero(4, 4);
            for mu in 0..4 {
                let y = a.mul(&sigma[mu]).add(&sigma[mu].mul(&adj));
                for nu in 0..4 {
                    m[(nu, mu)] = &sigma[nu].mul(&y).trace() * &half;
                }
            }
            AffineMap {
                linear: m,
                translation: vec![GaussRat::zero(); 4],
            }
        })
        .collect();
    Ok(ActionSpec { space, maps })
}

/// The affine Poincare action on R^{p+q}.
pub fn poincare_action(alg: &LieAlgebra) -> Result<ActionSpec> {
    if alg.kind != AlgKind::Poincare {
        return Err(Error::UnsupportedAlgebra { kind: alg.kind.to_string(), n: alg.n });
    }
    let n = alg.n;
    let space = Ring::new((0..n).map(|i| format!("y{i}")).collect::<Vec<_>>());
    let maps = alg
        .basis
        .iter()
        .map(|(_, m)| {
            let linear = GMat::from_fn(n, n, |r, c| m[(r, c)].clone());
            let translation = (0..n).map(|r| m[(r, n)].clone()).collect();
            AffineMap { linear, translation }
        })
        .collect();
    Ok(ActionSpec { space, maps })
}

/// The catalog action for an algebra: the one the paper pairs it with.
pub fn catalog_action(alg: &LieAlgebra) -> Result<ActionSpec> {
    match alg.kind {
        AlgKind::Gl | AlgKind::Sl | AlgKind::So | AlgKind::Sp => vector_action(alg),
        AlgKind::Su => su_action(alg),
        AlgKind::Lorentz => lorentz_action(alg),
        AlgKind::Poincare => poincare_action(alg),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::algebra::build_algebra;
    use crate::liealg::build_poincare;
    use crate::liealg::rmatrix::standard_r;

    #[test]
    fn representation_property_all_catalog_actions() {
        for alg in [
            build_algebra(AlgKind::Sl, 3).unwrap(),
            build_algebra(AlgKind::So, 4).unwrap(),
            build_algebra(AlgKind::Sp, 2).unwrap(),
            build_algebra(AlgKind::Su, 3).unwrap(),
            build_algebra(AlgKind::Lorentz, 4).unwrap(),
            build_poincare(1, 3).unwrap(),
            build_poincare(2, 2).unwrap(),
        ] {
            let act = catalog_action(&alg).unwrap();
            act.check_representation(&alg).unwrap();
        }
    }

    #[test]
    fn fundamental_vector_fields_represent_the_bracket() {
        // [X_M, Y_M] = [X,Y]_M for all basis pairs
        for alg in [
            build_algebra(AlgKind::Sl, 2).unwrap(),
            build_algebra(AlgKind::Su, 2).unwrap(),
            build_poincare(1, 3).unwrap(),
        ] {
            let act = catalog_action(&alg).unwrap();
            let n = act.space.nvars();
            for a in 0..alg.dim() {
                for b in 0..alg.dim() {
                    if a == b {
                        continue;
                    }
                    let fa = act.fundamental_vector(a);
                    let fb = act.fundamental_vector(b);
                    // Lie bracket of vector fields
                    let mut lie = MultivectorField::zero(&act.space, 1);
                    for c in 0..n {
                        let mut comp = Poly::zero(&act.space);
                        for l in 0..n {
                            comp = comp.add(
                                &fa.component(&[l]).mul(&fb.component(&[c]).diff(l)),
                            );
                            comp = comp.sub(
                                &fb.component(&[l]).mul(&fa.component(&[c]).diff(l)),
                            );
                        }
                        lie.add_term(&[c], comp);
                    }
                    let mut expect = MultivectorField::zero(&act.space, 1);
                    for (e, c) in &alg.structure[a][b] {
                        expect = expect.add(&act.fundamental_vector(*e).scale(
                            &Scalar::from_gauss(GaussRat::new(c.clone(), num_traits::Zero::zero())),
                        ));
                    }
                    assert_eq!(lie, expect);
                }
            }
        }
    }

    #[test]
    fn sl_standard_r_field_matches_coordinates() {
        // r_V = eps sum_{j<k} x^j x^k e_j ^ e_k
        let sl3 = build_algebra(AlgKind::Sl, 3).unwrap();
        let act = vector_action(&sl3).unwrap();
        let r = standard_r(&sl3).unwrap();
        let rv = fundamental_field(&r, &act).unwrap();
        for j in 0..3 {
            for k in j + 1..3 {
                let expect = Poly::var(&act.space, j)
                    .mul(&Poly::var(&act.space, k))
                    .mul_scalar(&Scalar::eps());
                assert_eq!(rv.component(&[j, k]), expect);
            }
        }
    }
}
