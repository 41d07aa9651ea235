//! Stabilizer subalgebras, trace-form orthogonal complements and the
//! criterion [g_x^perp, g_x^perp] subset g_x.

use super::algebra::LieAlgebra;
use super::matrix::RatMat;
use crate::error::{Error, Result};
use crate::exactalg::GaussRat;
use num_rational::BigRational;
use num_traits::Zero;

/// Basis data for g_x and its trace-form orthogonal complement,
/// as rational coefficient vectors over the algebra basis.
#[derive(Debug, Clone)]
pub struct Stabilizer {
    pub gx: Vec<Vec<BigRational>>,
    pub gperp: Vec<Vec<BigRational>>,
}

/// One failing commutator of the criterion: the pair of g_x^perp basis
/// elements and the component of their bracket outside g_x.
#[derive(Debug, Clone)]
pub struct Violation {
    pub pair: (String, String),
    pub residual: Vec<BigRational>,
    pub rendered: String,
}

#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub holds: bool,
    pub gx_dim: usize,
    pub gperp_dim: usize,
    pub violations: Vec<Violation>,
    /// Rank of the span of all residuals (components outside g_x).
    pub violation_span_dim: usize,
}

fn realified_kernel(rows_complex: Vec<Vec<GaussRat>>) -> Vec<Vec<BigRational>> {
    let mut rows = Vec::with_capacity(rows_complex.len() * 2);
    for row in &rows_complex {
        rows.push(row.iter().map(|x| x.re.clone()).collect::<Vec<_>>());
        rows.push(row.iter().map(|x| x.im.clone()).collect::<Vec<_>>());
    }
    RatMat::from_rows(rows).kernel()
}

/// g_x = { X : X x = 0 } by exact kernel computation, together with its
/// orthogonal complement with respect to the trace form.
pub fn stabilizer(alg: &LieAlgebra, x: &[GaussRat]) -> Result<Stabilizer> {
    if x.iter().all(|c| c.is_zero()) {
        return Err(Error::ZeroPoint);
    }
    let size = alg.matrix_size();
    if x.len() != size {
        return Err(Error::DimensionMismatch {
            expected: size,
            got: x.len(),
        });
    }
    let dim = alg.dim();
    // rows indexed by output component, columns by basis element
    let applied: Vec<Vec<GaussRat>> = alg.basis.iter().map(|(_, m)| m.apply(x)).collect();
    let rows: Vec<Vec<GaussRat>> = (0..size)
        .map(|r| (0..dim).map(|a| applied[a][r].clone()).collect())
        .collect();
    let gx = realified_kernel(rows);

    // perp: sum_a c_a <X_a, K> = 0 for every stabilizer combination K
    let gperp = if gx.is_empty() {
        (0..dim)
            .map(|a| {
                let mut v = vec![BigRational::zero(); dim];
                v[a] = BigRational::from_integer(1.into());
                v
            })
            .collect()
    } else {
        let rows: Vec<Vec<GaussRat>> = gx
            .iter()
            .map(|kv| {
                (0..dim)
                    .map(|a| {
                        let mut acc = GaussRat::zero();
                        for (b, kb) in kv.iter().enumerate() {
                            if kb.is_zero() {
                                continue;
                            }
                            let f = &alg.form[b][a];
                            if !f.is_zero() {
                                acc += &(f * &GaussRat::new(kb.clone(), BigRational::zero()));
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        realified_kernel(rows)
    };
    Ok(Stabilizer { gx, gperp })
}

struct GxReducer {
    /// rref rows of the g_x coefficient matrix with their pivot columns.
    rows: Vec<Vec<BigRational>>,
    pivots: Vec<usize>,
}

impl GxReducer {
    fn new(gx: &[Vec<BigRational>], dim: usize) -> GxReducer {
        if gx.is_empty() {
            return GxReducer {
                rows: vec![],
                pivots: vec![],
            };
        }
        let mut m = RatMat::from_rows(gx.to_vec());
        let pivots = m.rref();
        let rows = (0..pivots.len())
            .map(|r| (0..dim).map(|c| m.data[r * dim + c].clone()).collect())
            .collect();
        GxReducer { rows, pivots }
    }

    /// Residual of v modulo span(g_x).
    fn reduce(&self, mut v: Vec<BigRational>) -> Vec<BigRational> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (vi, ri) in v.iter_mut().zip(row) {
                *vi -= &f * ri;
            }
        }
        v
    }
}

/// The criterion: holds iff every commutator of g_x^perp basis pairs lies
/// in span(g_x). Violations carry the residual component outside g_x.
pub fn perp_criterion(alg: &LieAlgebra, x: &[GaussRat]) -> Result<CriterionReport> {
    let stab = stabilizer(alg, x)?;
    let dim = alg.dim();
    let reducer = GxReducer::new(&stab.gx, dim);
    let mut violations = Vec::new();
    let mut residual_rows = Vec::new();
    for a in 0..stab.gperp.len() {
        for b in a + 1..stab.gperp.len() {
            let pa = alg.combine(&stab.gperp[a]);
            let pb = alg.combine(&stab.gperp[b]);
            let c = pa.commutator(&pb);
            let coeffs = c
                .is_zero()
                .then(|| vec![BigRational::zero(); dim])
                .or_else(|| alg.expand(&c))
                .ok_or_else(|| Error::Invalid("commutator left the algebra".into()))?;
            let residual = reducer.reduce(coeffs);
            if residual.iter().any(|v| !v.is_zero()) {
                violations.push(Violation {
                    pair: (
                        alg.render_combination(&stab.gperp[a]),
                        alg.render_combination(&stab.gperp[b]),
                    ),
                    rendered: alg.render_combination(&residual),
                    residual: residual.clone(),
                });
                residual_rows.push(residual);
            }
        }
    }
    let violation_span_dim = if residual_rows.is_empty() {
        0
    } else {
        RatMat::from_rows(residual_rows).rank()
    };
    Ok(CriterionReport {
        holds: violations.is_empty(),
        gx_dim: stab.gx.len(),
        gperp_dim: stab.gperp.len(),
        violations,
        violation_span_dim,
    })
}

/// Standard basis vector e_n (1-based index n) of the action space.
pub fn basis_point(size: usize, n: usize) -> Vec<GaussRat> {
    let mut v = vec![GaussRat::zero(); size];
    v[n - 1] = GaussRat::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::algebra::{build_algebra, AlgKind};

    #[test]
    fn so_n_stabilizer_shapes() {
        // g_x spanned by M(j,k) with j,k < n; perp by M(j,n)
        let so4 = build_algebra(AlgKind::So, 4).unwrap();
        let stab = stabilizer(&so4, &basis_point(4, 4)).unwrap();
        assert_eq!(stab.gx.len(), 3);
        assert_eq!(stab.gperp.len(), 3);
        assert_eq!(stab.gx.len() + stab.gperp.len(), so4.dim());
        // perp elements act nontrivially on e_4 and are orthogonal to gx
        for v in &stab.gperp {
            let m = so4.combine(v);
            assert!(!m.apply(&basis_point(4, 4)).iter().all(|c| c.is_zero()));
        }
    }

    #[test]
    fn zero_point_rejected() {
        let so3 = build_algebra(AlgKind::So, 3).unwrap();
        assert!(matches!(
            stabilizer(&so3, &vec![GaussRat::zero(); 3]),
            Err(Error::ZeroPoint)
        ));
    }

    #[test]
    fn criterion_cases() {
        // so(4), sl(3), sp(2) hold; su(3) fails
        let so4 = build_algebra(AlgKind::So, 4).unwrap();
        assert!(perp_criterion(&so4, &basis_point(4, 4)).unwrap().holds);

        let sl3 = build_algebra(AlgKind::Sl, 3).unwrap();
        assert!(perp_criterion(&sl3, &basis_point(3, 3)).unwrap().holds);

        let sp2 = build_algebra(AlgKind::Sp, 2).unwrap();
        assert!(perp_criterion(&sp2, &basis_point(4, 2)).unwrap().holds);

        let su3 = build_algebra(AlgKind::Su, 3).unwrap();
        let rep = perp_criterion(&su3, &basis_point(3, 3)).unwrap();
        assert!(!rep.holds);
        // the (F(1,3), G(1,3)) pair violates with residual 2i(e_1^1 - e_3^3),
        // i.e. -2 H(1) - 2 H(2) mod nothing (it is already reduced mod g_x
        // up to a g_x diagonal part)
        assert!(!rep.violations.is_empty());
    }

    #[test]
    fn sl_n_perp_contains_bottom_row_and_cartan() {
        let sl3 = build_algebra(AlgKind::Sl, 3).unwrap();
        let stab = stabilizer(&sl3, &basis_point(3, 3)).unwrap();
        assert_eq!(stab.gperp.len(), 3);
        // every perp element has matrix supported on row 3 and the diagonal
        for v in &stab.gperp {
            let m = sl3.combine(v);
            for r in 0..2 {
                for c in 0..3 {
                    if r != c {
                        assert!(m[(r, c)].is_zero());
                    }
                }
            }
        }
    }
}
