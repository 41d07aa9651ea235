//! Classical Yang-Baxter defect [[w,w]] = [w12,w13] + [w12,w23] + [w13,w23]
//! as an exact sparse operator on V (x) V (x) V.

use super::tensor::EndTensor;
use crate::exactalg::Scalar;
use std::collections::BTreeMap;

/// Sparse linear operator on V^{(x)3}, keyed by (row, col) with flattened
/// indices (a*n + b)*n + c.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleOp {
    pub n: usize,
    pub entries: BTreeMap<(usize, usize), Scalar>,
}

impl TripleOp {
    pub fn zero(n: usize) -> TripleOp {
        TripleOp {
            n,
            entries: BTreeMap::new(),
        }
    }

    fn add_entry(&mut self, key: (usize, usize), c: Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.entries.entry(key).or_insert_with(Scalar::zero);
        *e = e.add(&c);
        if e.is_zero() {
            self.entries.remove(&key);
        }
    }

    pub fn add(&self, other: &TripleOp) -> TripleOp {
        let mut out = self.clone();
        for (k, v) in &other.entries {
            out.add_entry(*k, v.clone());
        }
        out
    }

    pub fn sub(&self, other: &TripleOp) -> TripleOp {
        let mut out = self.clone();
        for (k, v) in &other.entries {
            out.add_entry(*k, v.neg());
        }
        out
    }

    pub fn mul(&self, other: &TripleOp) -> TripleOp {
        let mut out = TripleOp::zero(self.n);
        for (&(r, k), a) in &self.entries {
            for (&(k2, c), b) in other.entries.range((k, 0)..(k + 1, 0)) {
                debug_assert_eq!(k, k2);
                out.add_entry((r, c), a.mul(b));
            }
        }
        out
    }

    pub fn commutator(&self, other: &TripleOp) -> TripleOp {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// A nonzero witness entry for reports.
    pub fn witness(&self) -> Option<String> {
        self.entries.iter().next().map(|(&(r, c), v)| {
            let n = self.n;
            let unflatten = |x: usize| (x / (n * n), (x / n) % n, x % n);
            let (a, b, cc) = unflatten(r);
            let (d, e, f) = unflatten(c);
            format!("entry ({a},{b},{cc})<-({d},{e},{f}): {}", v.render())
        })
    }
}

/// Embed an End V (x) End V tensor into operators on V^{(x)3} at the given
/// slot pair.
fn embed(w: &EndTensor, slots: (usize, usize)) -> TripleOp {
    let n = w.n;
    let mut out = TripleOp::zero(n);
    let place = |a: usize, b: usize, c: usize, slots: (usize, usize)| -> usize {
        // a goes to slots.0, b to slots.1, c to the remaining slot
        let mut idx = [0usize; 3];
        idx[slots.0] = a;
        idx[slots.1] = b;
        let rest = 3 - slots.0 - slots.1;
        idx[rest] = c;
        (idx[0] * n + idx[1]) * n + idx[2]
    };
    for (&(j, k, l, m), v) in &w.coeffs {
        for c in 0..n {
            out.add_entry((place(j, k, c, slots), place(l, m, c, slots)), v.clone());
        }
    }
    out
}

/// The CYBE defect; the zero operator iff w satisfies the classical
/// Yang-Baxter equation.
pub fn cybe_defect(w: &EndTensor) -> TripleOp {
    let w12 = embed(w, (0, 1));
    let w13 = embed(w, (0, 2));
    let w23 = embed(w, (1, 2));
    w12.commutator(&w13)
        .add(&w12.commutator(&w23))
        .add(&w13.commutator(&w23))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::algebra::{build_algebra, AlgKind};
    use crate::liealg::rmatrix::{invariant_s, standard_r};

    #[test]
    fn zero_tensor_has_zero_defect() {
        assert!(cybe_defect(&EndTensor::zero(2)).is_zero());
    }

    #[test]
    fn gl2_w_satisfies_cybe_but_r_does_not() {
        let gl2 = build_algebra(AlgKind::Gl, 2).unwrap();
        let r = EndTensor::from_wedge(&gl2, &standard_r(&gl2).unwrap());
        let s = EndTensor::from_pair(&gl2, &invariant_s(&gl2).unwrap());
        let w = r.add(&s);
        assert!(cybe_defect(&w).is_zero());
        assert!(!cybe_defect(&r).is_zero());
        // the lambda-shift keeps the CYBE
        let w_eps = w.add_lambda_identity(&crate::exactalg::Scalar::eps());
        assert!(cybe_defect(&w_eps).is_zero());
    }
}
