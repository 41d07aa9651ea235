//! Dense matrices over the Gaussian rationals and the exact linear algebra
//! (rref, kernels, expansion solves) used for stabilizers and structure
//! constants. Real Lie algebras with complex matrices (su(n), the Lorentz
//! algebra) are handled by realified systems: one complex row splits into a
//! real and an imaginary row, the unknowns stay real.

use crate::exactalg::GaussRat;
use num_rational::BigRational;
use num_traits::Zero;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<GaussRat>,
}

impl GMat {
    pub fn zero(rows: usize, cols: usize) -> GMat {
        GMat {
            rows,
            cols,
            data: vec![GaussRat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> GMat {
        let mut m = GMat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = GaussRat::one();
        }
        m
    }

    /// Matrix unit e_j^k (row j, column k), 0-based.
    pub fn unit(n: usize, j: usize, k: usize) -> GMat {
        let mut m = GMat::zero(n, n);
        m[(j, k)] = GaussRat::one();
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> GaussRat) -> GMat {
        let mut m = GMat::zero(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m[(r, c)] = f(r, c);
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn add(&self, other: &GMat) -> GMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        GMat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &GMat) -> GMat {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> GMat {
        GMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, c: &GaussRat) -> GMat {
        GMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &GMat) -> GMat {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = GMat::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if b.is_zero() {
                        continue;
                    }
                    let p = a * b;
                    out[(r, c)] += &p;
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &GMat) -> GMat {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn trace(&self) -> GaussRat {
        let mut t = GaussRat::zero();
        for i in 0..self.rows.min(self.cols) {
            t += &self[(i, i)];
        }
        t
    }

    pub fn transpose(&self) -> GMat {
        GMat::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn conj(&self) -> GMat {
        GMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.conj()).collect(),
        }
    }

    pub fn conj_transpose(&self) -> GMat {
        self.transpose().conj()
    }

    pub fn apply(&self, v: &[GaussRat]) -> Vec<GaussRat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = GaussRat::zero();
                for c in 0..self.cols {
                    if !self[(r, c)].is_zero() && !v[c].is_zero() {
                        acc += &(&self[(r, c)] * &v[c]);
                    }
                }
                acc
            })
            .collect()
    }

    /// Flatten into a real vector: real parts of all entries, then imaginary
    /// parts. Real-linear combinations of matrices become rational
    /// combinations of these vectors.
    pub fn realify(&self) -> Vec<BigRational> {
        let mut out = Vec::with_capacity(2 * self.data.len());
        out.extend(self.data.iter().map(|x| x.re.clone()));
        out.extend(self.data.iter().map(|x| x.im.clone()));
        out
    }

    pub fn render(&self) -> String {
        let rows: Vec<String> = (0..self.rows)
            .map(|r| {
                let cells: Vec<String> =
                    (0..self.cols).map(|c| self[(r, c)].render()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    }
}

impl std::ops::Index<(usize, usize)> for GMat {
    type Output = GaussRat;
    fn index(&self, (r, c): (usize, usize)) -> &GaussRat {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for GMat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut GaussRat {
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Display for GMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Row-echelon machinery over Q.
pub struct RatMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<BigRational>,
}

impl RatMat {
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> RatMat {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        RatMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    fn at(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    /// In-place reduced row echelon form; returns pivot column indices.
    pub fn rref(&mut self) -> Vec<usize> {
        self.rref_bounded(self.cols)
    }

    /// Rref that only pivots within the first `limit` columns; trailing
    /// columns are carried along (augmented right-hand sides).
    pub fn rref_bounded(&mut self, limit: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..limit {
            if row >= self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            for c in 0..self.cols {
                self.data.swap(row * self.cols + c, p * self.cols + c);
            }
            let inv = self.at(row, col).recip();
            for c in 0..self.cols {
                let v = self.at(row, c) * &inv;
                self.data[row * self.cols + c] = v;
            }
            for r in 0..self.rows {
                if r == row || self.at(r, col).is_zero() {
                    continue;
                }
                let f = self.at(r, col).clone();
                for c in 0..self.cols {
                    let v = self.at(r, c) - &(&f * self.at(row, c));
                    self.data[r * self.cols + c] = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    /// Basis of the right kernel.
    pub fn kernel(mut self) -> Vec<Vec<BigRational>> {
        let pivots = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Vec::new();
        for &f in &free {
            let mut v = vec![BigRational::zero(); self.cols];
            v[f] = BigRational::from_integer(1.into());
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = -self.at(prow, f).clone();
            }
            out.push(v);
        }
        out
    }

    pub fn rank(mut self) -> usize {
        self.rref().len()
    }
}

/// Solve A x = b for many right-hand sides with a single rref pass.
/// Entry k of the result is None when system k is inconsistent.
pub fn solve_many(
    a: &[Vec<BigRational>],
    rhs: &[Vec<BigRational>],
) -> Vec<Option<Vec<BigRational>>> {
    let cols = a.first().map(|r| r.len()).unwrap_or(0);
    let nrhs = rhs.len();
    let rows: Vec<Vec<BigRational>> = a
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let mut full = row.clone();
            full.extend(rhs.iter().map(|b| b[r].clone()));
            full
        })
        .collect();
    let mut m = RatMat::from_rows(rows);
    let pivots = m.rref_bounded(cols);
    (0..nrhs)
        .map(|k| {
            let bc = cols + k;
            // consistency: rows with zero A-part must have zero rhs entry
            for r in pivots.len()..m.rows {
                if !m.at(r, bc).is_zero() {
                    return None;
                }
            }
            let mut x = vec![BigRational::zero(); cols];
            for (prow, &pcol) in pivots.iter().enumerate() {
                x[pcol] = m.at(prow, bc).clone();
            }
            Some(x)
        })
        .collect()
}

/// Solve A x = b exactly; None when inconsistent. Free coordinates are set
/// to zero, so the answer is the canonical (rref) solution.
pub fn solve_exact(a: Vec<Vec<BigRational>>, b: &[BigRational]) -> Option<Vec<BigRational>> {
    let cols = a.first().map(|r| r.len()).unwrap_or(0);
    let mut aug: Vec<Vec<BigRational>> = a
        .into_iter()
        .zip(b)
        .map(|(mut row, rhs)| {
            row.push(rhs.clone());
            row
        })
        .collect();
    if aug.is_empty() {
        return Some(vec![]);
    }
    let mut m = RatMat::from_rows(std::mem::take(&mut aug));
    let pivots = m.rref_bounded(cols);
    for r in pivots.len()..m.rows {
        if !m.at(r, cols).is_zero() {
            return None;
        }
    }
    let mut x = vec![BigRational::zero(); cols];
    for (prow, &pcol) in pivots.iter().enumerate() {
        x[pcol] = m.at(prow, cols).clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn kernel_and_solve() {
        // x + y + z = 0, x - z = 0
        let m = RatMat::from_rows(vec![
            vec![q(1), q(1), q(1)],
            vec![q(1), q(0), q(-1)],
        ]);
        let ker = m.kernel();
        assert_eq!(ker.len(), 1);
        let v = &ker[0];
        assert_eq!(&v[0] + &v[1] + &v[2], q(0));
        assert_eq!(&v[0] - &v[2], q(0));

        let sol = solve_exact(
            vec![vec![q(2), q(0)], vec![q(0), q(4)]],
            &[q(6), q(2)],
        )
        .unwrap();
        assert_eq!(sol, vec![q(3), BigRational::new(1.into(), 2.into())]);
        assert!(solve_exact(vec![vec![q(0), q(0)]], &[q(1)]).is_none());
    }

    #[test]
    fn commutators() {
        let e12 = GMat::unit(2, 0, 1);
        let e21 = GMat::unit(2, 1, 0);
        let h = e12.commutator(&e21);
        assert_eq!(h[(0, 0)], GaussRat::one());
        assert_eq!(h[(1, 1)], GaussRat::from_int(-1));
        assert_eq!(h.trace(), GaussRat::zero());
    }
}
