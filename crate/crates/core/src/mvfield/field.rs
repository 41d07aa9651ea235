//! Polynomial multivector fields on a coordinate space: antisymmetric
//! component tables with Poly coefficients on strictly increasing index
//! tuples.

use crate::error::{Error, Result};
use crate::exactalg::{GaussRat, Poly, Ring, Scalar};
use crate::liealg::tensor::sort_sign;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultivectorField {
    pub space: Arc<Ring>,
    pub degree: usize,
    pub comps: BTreeMap<Vec<usize>, Poly>,
}

impl MultivectorField {
    pub fn zero(space: &Arc<Ring>, degree: usize) -> MultivectorField {
        MultivectorField {
            space: space.clone(),
            degree,
            comps: BTreeMap::new(),
        }
    }

    /// A degree-0 field is a polynomial.
    pub fn from_poly(p: Poly) -> MultivectorField {
        let mut comps = BTreeMap::new();
        if !p.is_zero() {
            comps.insert(vec![], p.clone());
        }
        MultivectorField {
            space: p.ring.clone(),
            degree: 0,
            comps,
        }
    }

    /// Coordinate vector field d/dx_i scaled by a polynomial.
    pub fn vector(space: &Arc<Ring>, idx: usize, coeff: Poly) -> MultivectorField {
        let mut out = MultivectorField::zero(space, 1);
        out.add_term(&[idx], coeff);
        out
    }

    pub fn add_term(&mut self, idx: &[usize], p: Poly) {
        assert_eq!(idx.len(), self.degree, "wrong component degree");
        if p.is_zero() {
            return;
        }
        let Some((key, sign)) = sort_sign(idx) else {
            return;
        };
        let p = if sign < 0 { p.neg() } else { p };
        match self.comps.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(p);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&p);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// Full antisymmetric component for an arbitrary index tuple.
    pub fn component(&self, idx: &[usize]) -> Poly {
        match sort_sign(idx) {
            None => Poly::zero(&self.space),
            Some((key, sign)) => {
                let p = self
                    .comps
                    .get(&key)
                    .cloned()
                    .unwrap_or_else(|| Poly::zero(&self.space));
                if sign < 0 {
                    p.neg()
                } else {
                    p
                }
            }
        }
    }

    pub fn add(&self, other: &MultivectorField) -> MultivectorField {
        assert_eq!(self.degree, other.degree, "degree mismatch");
        let mut out = self.clone();
        for (k, p) in &other.comps {
            out.add_term(k, p.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultivectorField) -> MultivectorField {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> MultivectorField {
        let mut out = MultivectorField::zero(&self.space, self.degree);
        for (k, p) in &self.comps {
            out.add_term(k, p.mul_scalar(c));
        }
        out
    }

    pub fn mul_poly(&self, f: &Poly) -> MultivectorField {
        let mut out = MultivectorField::zero(&self.space, self.degree);
        for (k, p) in &self.comps {
            out.add_term(k, p.mul(f));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    /// Graded-commutative wedge product. Components beyond the space
    /// dimension vanish identically, which the index bookkeeping already
    /// enforces (repeated indices drop out).
    pub fn wedge(&self, other: &MultivectorField) -> Result<MultivectorField> {
        if !Arc::ptr_eq(&self.space, &other.space) && self.space.vars != other.space.vars {
            return Err(Error::SpaceMismatch);
        }
        let mut out = MultivectorField::zero(&self.space, self.degree + other.degree);
        for (ka, pa) in &self.comps {
            for (kb, pb) in &other.comps {
                let mut idx = ka.clone();
                idx.extend_from_slice(kb);
                out.add_term(&idx, pa.mul(pb));
            }
        }
        Ok(out)
    }

    /// Exact evaluation at a rational point: a numeric multivector.
    pub fn evaluate_at(&self, point: &[GaussRat]) -> Result<BTreeMap<Vec<usize>, Scalar>> {
        if point.len() != self.space.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.space.nvars(),
                got: point.len(),
            });
        }
        let mut out = BTreeMap::new();
        for (k, p) in &self.comps {
            let v = p.eval_gauss(point)?;
            if !v.is_zero() {
                out.insert(k.clone(), v);
            }
        }
        Ok(out)
    }

    /// Contraction with the differential of f on the first slot:
    /// (K(df))^{j...} = sum_a (d_a f) K^{a j...}.
    pub fn contract_first(&self, f: &Poly) -> MultivectorField {
        assert!(self.degree >= 1);
        let n = self.space.nvars();
        let grads: Vec<Poly> = (0..n).map(|a| f.diff(a)).collect();
        let mut out = MultivectorField::zero(&self.space, self.degree - 1);
        for (k, p) in &self.comps {
            // expand the stored sorted component over all positions
            for pos in 0..k.len() {
                let a = k[pos];
                if grads[a].is_zero() {
                    continue;
                }
                // sign of moving index at `pos` to the front
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                let rest: Vec<usize> = k
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != pos)
                    .map(|(_, &v)| v)
                    .collect();
                let term = p.mul(&grads[a]);
                out.add_term(&rest, if sign < 0 { term.neg() } else { term });
            }
        }
        out
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .comps
            .iter()
            .map(|(k, p)| {
                let frame: Vec<String> = k
                    .iter()
                    .map(|&i| format!("d_{}", self.space.vars[i]))
                    .collect();
                if frame.is_empty() {
                    p.render()
                } else {
                    format!("({}) {}", p.render(), frame.join("^"))
                }
            })
            .collect();
        parts.join(" + ")
    }

    pub fn to_json(&self) -> Value {
        let comps: Vec<Value> = self
            .comps
            .iter()
            .map(|(k, p)| {
                json!({
                    "indices": k,
                    "frame": k.iter().map(|&i| self.space.vars[i].clone()).collect::<Vec<_>>(),
                    "coeff": p.render(),
                })
            })
            .collect();
        json!({
            "space": self.space.vars,
            "degree": self.degree,
            "components": comps,
        })
    }
}

/// Schouten bracket of two bivector fields, standard convention:
/// [P,Q]^{ijk} = sum_l (P^{il} d_l Q^{jk} + Q^{il} d_l P^{jk}) + cyclic(ijk).
pub fn schouten_field(p: &MultivectorField, q: &MultivectorField) -> Result<MultivectorField> {
    if p.space.vars != q.space.vars {
        return Err(Error::SpaceMismatch);
    }
    assert_eq!((p.degree, q.degree), (2, 2), "schouten_field takes bivectors");
    let n = p.space.nvars();
    let mut out = MultivectorField::zero(&p.space, 3);

    // collect d_l of each stored component once
    let diffs = |f: &MultivectorField| -> BTreeMap<(Vec<usize>, usize), Poly> {
        let mut m = BTreeMap::new();
        for (k, poly) in &f.comps {
            for l in 0..n {
                let d = poly.diff(l);
                if !d.is_zero() {
                    m.insert((k.clone(), l), d);
                }
            }
        }
        m
    };
    let dp = diffs(p);
    let dq = diffs(q);

    let mut half = |a: &MultivectorField, db: &BTreeMap<(Vec<usize>, usize), Poly>| {
        // accumulate sum_l A^{il} d_l B^{jk} over full components; feeding
        // every permutation into the antisymmetric container counts each
        // cyclic summand twice, compensated below
        for (ka, pa) in &a.comps {
            let (x, y) = (ka[0], ka[1]);
            for ((kb, l), d) in db {
                let (u, v) = (kb[0], kb[1]);
                // A^{il}: (i,l) ranges over (x,y), (y,x) with signs
                for (i, l2, s1) in [(x, y, 1i64), (y, x, -1)] {
                    if l2 != *l {
                        continue;
                    }
                    let term = pa.mul(d);
                    let term = if s1 < 0 { term.neg() } else { term };
                    // B^{jk}: (j,k) over (u,v), (v,u)
                    for (j, k, s2) in [(u, v, 1i64), (v, u, -1)] {
                        let t = if s2 < 0 { term.neg() } else { term.clone() };
                        out.add_term(&[i, j, k], t);
                    }
                }
            }
        }
    };
    half(p, &dq);
    half(q, &dp);
    Ok(out.scale(&Scalar::from_frac(1, 2)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space3() -> Arc<Ring> {
        Ring::new(vec!["x1", "x2", "x3"])
    }

    #[test]
    fn wedge_antisymmetry_and_overflow() {
        let s = space3();
        let e1 = MultivectorField::vector(&s, 0, Poly::one(&s));
        let e2 = MultivectorField::vector(&s, 1, Poly::one(&s));
        let w = e1.wedge(&e2).unwrap();
        assert_eq!(w.component(&[1, 0]), Poly::from_int(&s, -1));
        // degree overflow collapses to the zero field
        let e3 = MultivectorField::vector(&s, 2, Poly::one(&s));
        let top = w.wedge(&e3).unwrap();
        let over = top.wedge(&e1).unwrap();
        assert!(over.is_zero());
        assert_eq!(over.degree, 4);
    }

    #[test]
    fn schouten_of_constant_bivector_vanishes() {
        let s = space3();
        let mut p = MultivectorField::zero(&s, 2);
        p.add_term(&[0, 1], Poly::from_int(&s, 3));
        p.add_term(&[1, 2], Poly::from_int(&s, -2));
        let b = schouten_field(&p, &p).unwrap();
        assert!(b.is_zero());
    }

    #[test]
    fn schouten_matches_hand_example() {
        // P = f d1^d2, Q = g d1^d3 => [P,Q] = (f dg/d1 - g df/d1) d1^d2^d3
        let s = space3();
        let f = Poly::var(&s, 1); // x2
        let g = Poly::var(&s, 0).mul(&Poly::var(&s, 0)); // x1^2
        let mut p = MultivectorField::zero(&s, 2);
        p.add_term(&[0, 1], f.clone());
        let mut q = MultivectorField::zero(&s, 2);
        q.add_term(&[0, 2], g.clone());
        let b = schouten_field(&p, &q).unwrap();
        let expected = f.mul(&g.diff(0)).sub(&g.mul(&f.diff(0)));
        assert_eq!(b.component(&[0, 1, 2]), expected);
    }

    #[test]
    fn contraction_on_first_slot() {
        // pi0-like bivector on (z, zbar): 2i d_z ^ d_zb, f = z*zb
        let s = Ring::new(vec!["z", "zb"]);
        let mut pi0 = MultivectorField::zero(&s, 2);
        pi0.add_term(&[0, 1], Poly::constant(&s, Scalar::i().mul(&Scalar::from_int(2))));
        let f = Poly::var(&s, 0).mul(&Poly::var(&s, 1));
        let c = pi0.contract_first(&f);
        // (2i d_z^d_zb)(df) = 2i (zb d_zb - z d_z) ... with our convention:
        // sum_a d_a f * K^{a b}: b=zb: d_z f * K^{z zb} = zb * 2i ; b=z: d_zb f * K^{zb z} = -2i z
        let zb = Poly::var(&s, 1);
        let z = Poly::var(&s, 0);
        assert_eq!(c.component(&[1]), zb.mul_scalar(&Scalar::i().mul(&Scalar::from_int(2))));
        assert_eq!(c.component(&[0]), z.mul_scalar(&Scalar::i().mul(&Scalar::from_int(-2))));
    }
}
