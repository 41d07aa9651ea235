//! The Lie algebra catalog: explicit bases, trace forms, structure constants.

use super::matrix::{solve_exact, solve_many, GMat};
use crate::error::{Error, Result};
use crate::exactalg::GaussRat;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgKind {
    Sl,
    So,
    Sp,
    Su,
    Gl,
    Lorentz,
    Poincare,
}

impl AlgKind {
    pub fn parse(s: &str) -> Result<AlgKind> {
        Ok(match s {
            "sl" => AlgKind::Sl,
            "so" => AlgKind::So,
            "sp" => AlgKind::Sp,
            "su" => AlgKind::Su,
            "gl" => AlgKind::Gl,
            "lorentz" => AlgKind::Lorentz,
            "poincare" => AlgKind::Poincare,
            other => return Err(Error::Invalid(format!("unknown algebra kind `{other}`"))),
        })
    }
}

impl fmt::Display for AlgKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AlgKind::Sl => "sl",
            AlgKind::So => "so",
            AlgKind::Sp => "sp",
            AlgKind::Su => "su",
            AlgKind::Gl => "gl",
            AlgKind::Lorentz => "lorentz",
            AlgKind::Poincare => "poincare",
        };
        write!(f, "{s}")
    }
}

/// A cataloged Lie algebra: named basis matrices, the trace-form Gram matrix
/// and cached structure constants (matrix commutators, expanded exactly in
/// the basis).
#[derive(Debug, Clone)]
pub struct LieAlgebra {
    pub kind: AlgKind,
    pub n: usize,
    /// Metric signature for poincare; (p, q) with p plus signs.
    pub signature: Option<(usize, usize)>,
    pub basis: Vec<(String, GMat)>,
    /// Gram matrix form[a][b] = Tr(X_a X_b) in the stored representation.
    pub form: Vec<Vec<GaussRat>>,
    /// structure[a][b] = coefficients of [X_a, X_b] in the basis.
    pub structure: Vec<Vec<Vec<(usize, BigRational)>>>,
}

impl LieAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn matrix_size(&self) -> usize {
        self.basis[0].1.rows
    }

    pub fn basis_matrix(&self, idx: usize) -> &GMat {
        &self.basis[idx].1
    }

    pub fn basis_name(&self, idx: usize) -> &str {
        &self.basis[idx].0
    }

    pub fn basis_index(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|(n, _)| n == name)
    }

    /// Expand an arbitrary matrix in the basis with real coefficients.
    pub fn expand(&self, m: &GMat) -> Option<Vec<BigRational>> {
        let cols: Vec<Vec<BigRational>> = self.basis.iter().map(|(_, b)| b.realify()).collect();
        let target = m.realify();
        let rows = target.len();
        let a: Vec<Vec<BigRational>> = (0..rows)
            .map(|r| cols.iter().map(|c| c[r].clone()).collect())
            .collect();
        solve_exact(a, &target)
    }

    /// Reassemble a coefficient vector into a matrix.
    pub fn combine(&self, coeffs: &[BigRational]) -> GMat {
        let size = self.matrix_size();
        let mut acc = GMat::zero(size, self.basis[0].1.cols);
        for (c, (_, b)) in coeffs.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            acc = acc.add(&b.scale(&GaussRat::new(c.clone(), BigRational::zero())));
        }
        acc
    }

    /// Render a coefficient vector as a combination of basis names.
    pub fn render_combination(&self, coeffs: &[BigRational]) -> String {
        let mut out = String::new();
        for (c, (name, _)) in coeffs.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            let g = GaussRat::new(c.clone(), BigRational::zero());
            let cs = g.render();
            let piece = if cs == "1" {
                name.clone()
            } else if cs == "-1" {
                format!("-{name}")
            } else {
                format!("{cs}*{name}")
            };
            if out.is_empty() {
                out = piece;
            } else if let Some(stripped) = piece.strip_prefix('-') {
                out = format!("{out} - {stripped}");
            } else {
                out = format!("{out} + {piece}");
            }
        }
        if out.is_empty() {
            out = "0".into();
        }
        out
    }

    /// Canonical JSON dump: basis names and matrix entries as strings.
    pub fn to_json(&self) -> Value {
        let basis: Vec<Value> = self
            .basis
            .iter()
            .map(|(name, m)| {
                let entries: Vec<Vec<String>> = (0..m.rows)
                    .map(|r| (0..m.cols).map(|c| m[(r, c)].render()).collect())
                    .collect();
                json!({ "name": name, "matrix": entries })
            })
            .collect();
        let form: Vec<Vec<String>> = self
            .form
            .iter()
            .map(|row| row.iter().map(|x| x.render()).collect())
            .collect();
        json!({
            "kind": self.kind.to_string(),
            "n": self.n,
            "dim": self.dim(),
            "basis": basis,
            "form": form,
        })
    }
}

fn i() -> GaussRat {
    GaussRat::i()
}

fn half() -> GaussRat {
    GaussRat::from_frac(1, 2)
}

fn build_basis(kind: AlgKind, n: usize, sig: Option<(usize, usize)>) -> Result<Vec<(String, GMat)>> {
    let mut basis = Vec::new();
    match kind {
        AlgKind::Gl => {
            if n < 1 {
                return Err(Error::UnsupportedAlgebra { kind: kind.to_string(), n });
            }
            for j in 0..n {
                for k in 0..n {
                    basis.push((format!("E({},{})", j + 1, k + 1), GMat::unit(n, j, k)));
                }
            }
        }
        AlgKind::Sl => {
            if n < 2 {
                return Err(Error::UnsupportedAlgebra { kind: kind.to_string(), n });
            }
            for j in 0..n {
                for k in 0..n {
                    if j != k {
                        basis.push((format!("E({},{})", j + 1, k + 1), GMat::unit(n, j, k)));
                    }
                }
            }
            for j in 0..n - 1 {
                let m = GMat::unit(n, j, j).sub(&GMat::unit(n, j + 1, j + 1));
                basis.push((format!("H({})", j + 1), m));
            }
        }
        AlgKind::So => {
            if n < 2 {
                return Err(Error::UnsupportedAlgebra { kind: kind.to_string(), n });
            }
            for j in 0..n {
                for k in j + 1..n {
                    let m = GMat::unit(n, j, k).sub(&GMat::unit(n, k, j));
                    basis.push((format!("M({},{})", j + 1, k + 1), m));
                }
            }
        }
        AlgKind::Sp => {
            if n < 1 {
                return Err(Error::UnsupportedAlgebra { kind: kind.to_string(), n });
            }
            let nn = 2 * n;
            // blocks of the (x, p) action: a_{jk} maps p to x, b^{jk} maps x
            // to p, d_j^k acts as E_jk on x and -E_kj on p
            for j in 0..n {
                for k in j..n {
                    let mut m = GMat::zero(nn, nn);
                    m[(j, n + k)] = GaussRat::one();
                    let e = &m[(k, n + j)] + &GaussRat::one();
                    m[(k, n + j)] = e;
                    basis.push((format!("a({},{})", j + 1, k + 1), m));
                }
            }
            for j in 0..n {
                for k in j..n {
                    let mut m = GMat::zero(nn, nn);
                    m[(n + j, k)] = GaussRat::one();
                    let e = &m[(n + k, j)] + &GaussRat::one();
                    m[(n + k, j)] = e;
                    basis.push((format!("b({},{})", j + 1, k + 1), m));
                }
            }
            for j in 0..n {
                for k in 0..n {
                    let mut m = GMat::zero(nn, nn);
                    m[(j, k)] = GaussRat::one();
                    let e = &m[(n + k, n + j)] - &GaussRat::one();
                    m[(n + k, n + j)] = e;
                    basis.push((format!("d({},{})", j + 1, k + 1), m));
                }
            }
        }
        AlgKind::Su => {
            if n < 2 {
                return Err(Error::UnsupportedAlgebra { kind: kind.to_string(), n });
            }
            for j in 0..n {
                for k in j + 1..n {
                    let m = GMat::unit(n, j, k).sub(&GMat::unit(n, k, j));
                    basis.push((format!("F({},{})", j + 1, k + 1), m));
                }
            }
            for j in 0..n {
                for k in j + 1..n {
                    let m = GMat::unit(n, j, k).add(&GMat::unit(n, k, j)).scale(&i());
                    basis.push((format!("G({},{})", j + 1, k + 1), m));
                }
            }
            for j in 0..n - 1 {
                let m = GMat::unit(n, j + 1, j + 1)
                    .sub(&GMat::unit(n, j, j))
                    .scale(&i());
                basis.push((format!("H({})", j + 1), m));
            }
        }
        AlgKind::Lorentz => {
            if n != 4 {
                return Err(Error::UnsupportedAlgebra { kind: kind.to_string(), n });
            }
            let h = GMat::unit(2, 0, 0).sub(&GMat::unit(2, 1, 1)).scale(&half());
            let xp = GMat::unit(2, 0, 1);
            let xm = GMat::unit(2, 1, 0);
            basis.push(("H".into(), h.clone()));
            basis.push(("X+".into(), xp.clone()));
            basis.push(("X-".into(), xm.clone()));
            basis.push(("JH".into(), h.scale(&i())));
            basis.push(("JX+".into(), xp.scale(&i())));
            basis.push(("JX-".into(), xm.scale(&i())));
        }
        AlgKind::Poincare => {
            let (p, q) = sig.expect("poincare needs a signature");
            let n = p + q;
            if n < 2 {
                return Err(Error::UnsupportedAlgebra { kind: kind.to_string(), n });
            }
            // affine embedding in (n+1)x(n+1): [[A, b], [0, 0]]
            for j in 0..n {
                let mut m = GMat::zero(n + 1, n + 1);
                m[(j, n)] = GaussRat::one();
                basis.push((format!("T({j})"), m));
            }
            let metric = |a: usize| {
                if a < p {
                    GaussRat::one()
                } else {
                    GaussRat::from_int(-1)
                }
            };
            for k in 0..n {
                for m_ in k + 1..n {
                    let mut m = GMat::zero(n + 1, n + 1);
                    for b in 0..n {
                        if b == m_ {
                            m[(k, b)] = &m[(k, b)] + &metric(m_);
                        }
                        if b == k {
                            m[(m_, b)] = &m[(m_, b)] - &metric(k);
                        }
                    }
                    basis.push((format!("Om({k},{m_})"), m));
                }
            }
        }
    }
    Ok(basis)
}

/// Build a cataloged algebra with cached structure constants.
pub fn build_algebra(kind: AlgKind, n: usize) -> Result<LieAlgebra> {
    let sig = match kind {
        AlgKind::Poincare => Some((1, n.saturating_sub(1))),
        AlgKind::Lorentz => None,
        _ => None,
    };
    let n_eff = if kind == AlgKind::Lorentz { 4 } else { n };
    build_algebra_sig(kind, n_eff, sig)
}

/// Poincare algebra with explicit signature (p, q).
pub fn build_poincare(p: usize, q: usize) -> Result<LieAlgebra> {
    build_algebra_sig(AlgKind::Poincare, p + q, Some((p, q)))
}

fn build_algebra_sig(kind: AlgKind, n: usize, sig: Option<(usize, usize)>) -> Result<LieAlgebra> {
    let basis = build_basis(kind, n, sig)?;
    let dim = basis.len();
    let form: Vec<Vec<GaussRat>> = (0..dim)
        .map(|a| {
            (0..dim)
                .map(|b| basis[a].1.mul(&basis[b].1).trace())
                .collect()
        })
        .collect();
    let mut alg = LieAlgebra {
        kind,
        n,
        signature: sig,
        basis,
        form,
        structure: Vec::new(),
    };
    // closure: every commutator must expand exactly in the basis;
    // one rref pass solves all pairs at once
    let cols: Vec<Vec<BigRational>> = alg.basis.iter().map(|(_, b)| b.realify()).collect();
    let nrows = cols[0].len();
    let a_mat: Vec<Vec<BigRational>> = (0..nrows)
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect();
    let mut pairs = Vec::new();
    let mut rhs = Vec::new();
    for a in 0..dim {
        for b in a + 1..dim {
            pairs.push((a, b));
            rhs.push(alg.basis[a].1.commutator(&alg.basis[b].1).realify());
        }
    }
    let sols = solve_many(&a_mat, &rhs);
    let mut structure = vec![vec![Vec::new(); dim]; dim];
    for ((a, b), sol) in pairs.into_iter().zip(sols) {
        let coeffs = sol.ok_or_else(|| {
            Error::Invalid(format!(
                "basis not closed under commutators: [{}, {}]",
                alg.basis[a].0, alg.basis[b].0
            ))
        })?;
        let sparse: Vec<(usize, BigRational)> = coeffs
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect();
        structure[b][a] = sparse.iter().map(|(i, v)| (*i, -v.clone())).collect();
        structure[a][b] = sparse;
    }
    alg.structure = structure;
    Ok(alg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!(build_algebra(AlgKind::So, 3).unwrap().dim(), 3);
        assert_eq!(build_algebra(AlgKind::Sp, 2).unwrap().dim(), 10);
        assert_eq!(build_algebra(AlgKind::Su, 2).unwrap().dim(), 3);
        assert_eq!(build_algebra(AlgKind::Sl, 3).unwrap().dim(), 8);
        assert_eq!(build_algebra(AlgKind::Gl, 2).unwrap().dim(), 4);
        assert_eq!(build_algebra(AlgKind::Lorentz, 4).unwrap().dim(), 6);
        assert_eq!(build_poincare(1, 3).unwrap().dim(), 10);
        assert_eq!(build_poincare(2, 2).unwrap().dim(), 10);
        assert!(build_algebra(AlgKind::Su, 1).is_err());
    }

    #[test]
    fn su2_commutator_example() {
        // [F(1,2), G(1,2)] = 2i(e_1^1 - e_2^2) = -2 H(1)
        let su2 = build_algebra(AlgKind::Su, 2).unwrap();
        let f = su2.basis_index("F(1,2)").unwrap();
        let g = su2.basis_index("G(1,2)").unwrap();
        let h = su2.basis_index("H(1)").unwrap();
        let c = &su2.structure[f][g];
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].0, h);
        assert_eq!(c[0].1, BigRational::from_integer((-2).into()));
    }

    #[test]
    fn defining_conditions() {
        let sl3 = build_algebra(AlgKind::Sl, 3).unwrap();
        for (_, m) in &sl3.basis {
            assert!(m.trace().is_zero());
        }
        let so4 = build_algebra(AlgKind::So, 4).unwrap();
        for (_, m) in &so4.basis {
            assert!(m.add(&m.transpose()).is_zero());
        }
        let su3 = build_algebra(AlgKind::Su, 3).unwrap();
        for (_, m) in &su3.basis {
            assert!(m.add(&m.conj_transpose()).is_zero());
            assert!(m.trace().is_zero());
        }
        // sp condition: omega A + A^T omega = 0 with the pairing of (x, p)
        let sp2 = build_algebra(AlgKind::Sp, 2).unwrap();
        let nn = 4;
        let mut omega = GMat::zero(nn, nn);
        for j in 0..2 {
            omega[(j, 2 + j)] = GaussRat::one();
            omega[(2 + j, j)] = GaussRat::from_int(-1);
        }
        for (_, a) in &sp2.basis {
            assert!(omega.mul(a).add(&a.transpose().mul(&omega)).is_zero());
        }
    }

    #[test]
    fn jacobi_of_structure_constants() {
        for alg in [
            build_algebra(AlgKind::So, 4).unwrap(),
            build_algebra(AlgKind::Sl, 2).unwrap(),
            build_algebra(AlgKind::Su, 3).unwrap(),
            build_algebra(AlgKind::Sp, 1).unwrap(),
            build_algebra(AlgKind::Lorentz, 4).unwrap(),
            build_poincare(1, 3).unwrap(),
        ] {
            let d = alg.dim();
            for a in 0..d {
                for b in 0..d {
                    for c in 0..d {
                        // sum over cyclic of [[a,b],c]
                        let mut acc = vec![BigRational::zero(); d];
                        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                            for (e, cab) in &alg.structure[x][y] {
                                for (f, cec) in &alg.structure[*e][z] {
                                    acc[*f] += cab * cec;
                                }
                            }
                        }
                        assert!(acc.iter().all(|v| v.is_zero()));
                    }
                }
            }
        }
    }

    #[test]
    fn form_is_ad_invariant() {
        for alg in [
            build_algebra(AlgKind::So, 3).unwrap(),
            build_algebra(AlgKind::Su, 3).unwrap(),
            build_poincare(1, 3).unwrap(),
        ] {
            let d = alg.dim();
            for a in 0..d {
                for b in 0..d {
                    for c in 0..d {
                        // Tr([X_a, X_b] X_c) + Tr(X_b [X_a, X_c]) = 0
                        let ab = alg.basis[a].1.commutator(&alg.basis[b].1);
                        let ac = alg.basis[a].1.commutator(&alg.basis[c].1);
                        let t = ab
                            .mul(&alg.basis[c].1)
                            .trace()
                            .clone();
                        let t2 = alg.basis[b].1.mul(&ac).trace();
                        assert!((&t + &t2).is_zero());
                    }
                }
            }
        }
    }
}
