//! Tensor containers over an algebra basis or over End V (x) End V.

use super::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::exactalg::Scalar;
use serde_json::{json, Value};
use std::collections::BTreeMap;

/// Element of Lambda^k g: coefficients on strictly increasing basis index
/// tuples, fully antisymmetric under permutations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AltTensor {
    pub dim: usize,
    pub degree: usize,
    pub coeffs: BTreeMap<Vec<usize>, Scalar>,
}

pub(crate) fn sort_sign(idx: &[usize]) -> Option<(Vec<usize>, i64)> {
    let mut v = idx.to_vec();
    let mut sign = 1i64;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, sign))
}

impl AltTensor {
    pub fn zero(dim: usize, degree: usize) -> AltTensor {
        AltTensor {
            dim,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, idx: &[usize], c: Scalar) {
        assert_eq!(idx.len(), self.degree);
        let Some((key, sign)) = sort_sign(idx) else {
            return;
        };
        let c = if sign < 0 { c.neg() } else { c };
        let entry = self.coeffs.entry(key).or_insert_with(Scalar::zero);
        *entry = entry.add(&c);
        if entry.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &AltTensor) -> AltTensor {
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.add_term(k, v.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> AltTensor {
        let mut out = AltTensor::zero(self.dim, self.degree);
        for (k, v) in &self.coeffs {
            out.add_term(k, v.mul(c));
        }
        out
    }

    pub fn sub(&self, other: &AltTensor) -> AltTensor {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn render(&self, alg: &LieAlgebra) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(k, c)| {
                let names: Vec<&str> = k.iter().map(|&i| alg.basis_name(i)).collect();
                format!("({}) {}", c.render(), names.join("^"))
            })
            .collect();
        parts.join(" + ")
    }

    pub fn to_json(&self, alg: &LieAlgebra) -> Value {
        let terms: Vec<Value> = self
            .coeffs
            .iter()
            .map(|(k, c)| {
                json!({
                    "indices": k,
                    "basis": k.iter().map(|&i| alg.basis_name(i)).collect::<Vec<_>>(),
                    "coeff": c.render(),
                })
            })
            .collect();
        json!({ "degree": self.degree, "terms": terms })
    }
}

/// Element of g (x) g (not necessarily symmetric).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairTensor {
    pub dim: usize,
    pub coeffs: BTreeMap<(usize, usize), Scalar>,
}

impl PairTensor {
    pub fn zero(dim: usize) -> PairTensor {
        PairTensor {
            dim,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, a: usize, b: usize, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry((a, b)).or_insert_with(Scalar::zero);
        *entry = entry.add(&c);
        if entry.is_zero() {
            self.coeffs.remove(&(a, b));
        }
    }

    pub fn symmetric_part(&self) -> PairTensor {
        let mut out = PairTensor::zero(self.dim);
        let half = Scalar::from_frac(1, 2);
        for (&(a, b), c) in &self.coeffs {
            out.add_term(a, b, c.mul(&half));
            out.add_term(b, a, c.mul(&half));
        }
        out
    }

    pub fn antisymmetric_part(&self) -> PairTensor {
        let mut out = PairTensor::zero(self.dim);
        let half = Scalar::from_frac(1, 2);
        for (&(a, b), c) in &self.coeffs {
            out.add_term(a, b, c.mul(&half));
            out.add_term(b, a, c.mul(&half).neg());
        }
        out
    }

    pub fn add(&self, other: &PairTensor) -> PairTensor {
        let mut out = self.clone();
        for (&(a, b), c) in &other.coeffs {
            out.add_term(a, b, c.clone());
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().all(|(&(a, b), c)| {
            self.coeffs
                .get(&(b, a))
                .map(|d| d == c)
                .unwrap_or(c.is_zero())
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// Element of End V (x) End V as a coefficient table:
/// rho = sum rho^{jk}_{lm} e_j^l (x) e_k^m, keyed by (j, k, l, m).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndTensor {
    /// Dimension of V.
    pub n: usize,
    pub coeffs: BTreeMap<(usize, usize, usize, usize), Scalar>,
}

impl EndTensor {
    pub fn zero(n: usize) -> EndTensor {
        EndTensor {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn get(&self, j: usize, k: usize, l: usize, m: usize) -> Scalar {
        self.coeffs
            .get(&(j, k, l, m))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, key: (usize, usize, usize, usize), c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(key).or_insert_with(Scalar::zero);
        *entry = entry.add(&c);
        if entry.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn add(&self, other: &EndTensor) -> EndTensor {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.add_term(*k, v.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> EndTensor {
        let mut out = EndTensor::zero(self.n);
        for (k, v) in &self.coeffs {
            out.add_term(*k, v.mul(c));
        }
        out
    }

    /// Add lambda * I (x) I.
    pub fn add_lambda_identity(&self, lambda: &Scalar) -> EndTensor {
        let mut out = self.clone();
        for j in 0..self.n {
            for k in 0..self.n {
                out.add_term((j, k, j, k), lambda.clone());
            }
        }
        out
    }

    /// Check the (symsl) requirement rho^{jk}_{lm} = rho^{kj}_{lm}; on
    /// failure returns the witness index.
    pub fn check_upper_symmetry(&self) -> Result<()> {
        for j in 0..self.n {
            for k in 0..self.n {
                for l in 0..self.n {
                    for m in 0..self.n {
                        if self.get(j, k, l, m) != self.get(k, j, l, m) {
                            return Err(Error::SymmetryViolation((j, k, l, m)));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Antisymmetry of an r-matrix: r^{jk}_{lm} = -r^{kj}_{ml}.
    pub fn is_r_antisymmetric(&self) -> bool {
        self.coeffs.iter().all(|(&(j, k, l, m), c)| {
            self.get(k, j, m, l) == c.neg()
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Embed a wedge a^b over the algebra basis into End V (x) End V:
    /// a^b = a (x) b - b (x) a in matrix-unit coordinates.
    pub fn from_wedge(alg: &LieAlgebra, t: &AltTensor) -> EndTensor {
        assert_eq!(t.degree, 2);
        let n = alg.matrix_size();
        let mut out = EndTensor::zero(n);
        for (key, c) in &t.coeffs {
            let (a, b) = (key[0], key[1]);
            let ma = alg.basis_matrix(a);
            let mb = alg.basis_matrix(b);
            for j in 0..n {
                for l in 0..n {
                    if ma[(j, l)].is_zero() && mb[(j, l)].is_zero() {
                        continue;
                    }
                    for k in 0..n {
                        for m in 0..n {
                            // a(x)b - b(x)a
                            let mut v = Scalar::zero();
                            if !ma[(j, l)].is_zero() && !mb[(k, m)].is_zero() {
                                v = v.add(&Scalar::from_gauss(&ma[(j, l)] * &mb[(k, m)]));
                            }
                            if !mb[(j, l)].is_zero() && !ma[(k, m)].is_zero() {
                                v = v.sub(&Scalar::from_gauss(&mb[(j, l)] * &ma[(k, m)]));
                            }
                            out.add_term((j, k, l, m), v.mul(c));
                        }
                    }
                }
            }
        }
        out
    }

    /// Embed a g (x) g element into End V (x) End V coordinates.
    pub fn from_pair(alg: &LieAlgebra, t: &PairTensor) -> EndTensor {
        let n = alg.matrix_size();
        let mut out = EndTensor::zero(n);
        for (&(a, b), c) in &t.coeffs {
            let ma = alg.basis_matrix(a);
            let mb = alg.basis_matrix(b);
            for j in 0..n {
                for l in 0..n {
                    if ma[(j, l)].is_zero() {
                        continue;
                    }
                    for k in 0..n {
                        for m in 0..n {
                            if mb[(k, m)].is_zero() {
                                continue;
                            }
                            let v = Scalar::from_gauss(&ma[(j, l)] * &mb[(k, m)]);
                            out.add_term((j, k, l, m), v.mul(c));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .coeffs
            .iter()
            .map(|(&(j, k, l, m), c)| json!({ "jklm": [j, k, l, m], "coeff": c.render() }))
            .collect();
        json!({ "n": self.n, "terms": terms })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antisymmetrization() {
        let mut t = AltTensor::zero(4, 2);
        t.add_term(&[1, 0], Scalar::one());
        assert_eq!(t.coeffs.get(&vec![0, 1]), Some(&Scalar::from_int(-1)));
        t.add_term(&[0, 1], Scalar::one());
        assert!(t.is_zero());
        let mut t3 = AltTensor::zero(4, 3);
        t3.add_term(&[2, 1, 0], Scalar::one());
        assert_eq!(t3.coeffs.get(&vec![0, 1, 2]), Some(&Scalar::from_int(-1)));
        t3.add_term(&[1, 1, 2], Scalar::one());
        assert_eq!(t3.coeffs.len(), 1);
    }

    #[test]
    fn pair_parts() {
        let mut t = PairTensor::zero(3);
        t.add_term(0, 1, Scalar::from_int(2));
        let s = t.symmetric_part();
        let a = t.antisymmetric_part();
        assert!(s.is_symmetric());
        assert_eq!(s.add(&a).coeffs, t.coeffs);
    }
}
