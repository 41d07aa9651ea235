//! Poisson structures as antisymmetric generator bracket tables, with the
//! Leibniz biderivation extension to polynomials and rational functions.

use crate::error::{Error, Result};
use crate::exactalg::{GaussRat, Poly, RationalFn, Ring, Scalar};
use crate::mvfield::MultivectorField;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::sync::Arc;

/// The single source of truth for a Poisson structure: the brackets of the
/// generators. Entries are stored for i < j only; antisymmetry supplies the
/// rest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketTable {
    pub ring: Arc<Ring>,
    entries: BTreeMap<(usize, usize), RationalFn>,
    pub provenance: String,
}

impl BracketTable {
    pub fn new(ring: &Arc<Ring>, provenance: impl Into<String>) -> BracketTable {
        BracketTable {
            ring: ring.clone(),
            entries: BTreeMap::new(),
            provenance: provenance.into(),
        }
    }

    pub fn n_generators(&self) -> usize {
        self.ring.nvars()
    }

    pub fn set(&mut self, i: usize, j: usize, value: RationalFn) {
        assert!(i != j, "diagonal brackets vanish");
        let (key, value) = if i < j { ((i, j), value) } else { ((j, i), value.neg()) };
        if value.is_zero() {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, value);
        }
    }

    pub fn set_poly(&mut self, i: usize, j: usize, value: Poly) {
        self.set(i, j, RationalFn::from_poly(value));
    }

    /// {g_i, g_j} with antisymmetry.
    pub fn entry(&self, i: usize, j: usize) -> RationalFn {
        if i == j {
            return RationalFn::zero(&self.ring);
        }
        let (key, flip) = if i < j { ((i, j), false) } else { ((j, i), true) };
        let v = self
            .entries
            .get(&key)
            .cloned()
            .unwrap_or_else(|| RationalFn::zero(&self.ring));
        if flip {
            v.neg()
        } else {
            v
        }
    }

    pub fn stored_entries(&self) -> impl Iterator<Item = (&(usize, usize), &RationalFn)> {
        self.entries.iter()
    }

    /// All entries are polynomial (denominator 1).
    pub fn is_polynomial(&self) -> bool {
        self.entries.values().all(|e| e.is_polynomial())
    }

    /// Biderivation extension of the generator brackets:
    /// {f, g} = sum_{ij} {g_i, g_j} d_i f d_j g.
    pub fn bracket_poly(&self, f: &Poly, g: &Poly) -> RationalFn {
        let n = self.n_generators();
        let mut acc = RationalFn::zero(&self.ring);
        let df: Vec<Poly> = (0..n).map(|i| f.diff(i)).collect();
        let dg: Vec<Poly> = (0..n).map(|j| g.diff(j)).collect();
        for (&(i, j), e) in &self.entries {
            // e * (d_i f d_j g - d_j f d_i g)
            let factor = df[i].mul(&dg[j]).sub(&df[j].mul(&dg[i]));
            if factor.is_zero() {
                continue;
            }
            acc = acc.add(&e.mul(&RationalFn::from_poly(factor)));
        }
        acc
    }

    /// Bracket of rational functions through the quotient rule.
    pub fn bracket(&self, f: &RationalFn, g: &RationalFn) -> RationalFn {
        match (f.as_poly(), g.as_poly()) {
            (Some(fp), Some(gp)) => self.bracket_poly(fp, gp),
            _ => {
                // {a/b, c/d} expanded by biderivation:
                // = ({a,c} b d - {a,d} b c - {b,c} a d + {b,d} a c) / (b^2 d^2)
                let (a, b) = (f.num(), f.den());
                let (c, d) = (g.num(), g.den());
                let ac = self.bracket_poly(a, c);
                let ad = self.bracket_poly(a, d);
                let bc = self.bracket_poly(b, c);
                let bd = self.bracket_poly(b, d);
                let bd_poly = RationalFn::from_poly(b.mul(d));
                let num = ac
                    .mul(&bd_poly)
                    .sub(&ad.mul(&RationalFn::from_poly(b.mul(c))))
                    .sub(&bc.mul(&RationalFn::from_poly(a.mul(d))))
                    .add(&bd.mul(&RationalFn::from_poly(a.mul(c))));
                let den = RationalFn::from_poly(b.mul(b).mul(&d.mul(d)));
                num.div(&den).expect("denominators nonzero")
            }
        }
    }

    /// Canonical JSON dump: generators plus entry strings.
    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|(&(i, j), e)| {
                json!({
                    "i": self.ring.vars[i],
                    "j": self.ring.vars[j],
                    "bracket": e.render(),
                })
            })
            .collect();
        json!({
            "generators": self.ring.vars,
            "entries": entries,
            "provenance": self.provenance,
        })
    }
}

/// Dictionary from a polynomial bivector field to its bracket table:
/// {g_i, g_j} = P^{ij}.
pub fn table_from_bivector(p: &MultivectorField, provenance: impl Into<String>) -> BracketTable {
    assert_eq!(p.degree, 2);
    let mut t = BracketTable::new(&p.space, provenance);
    for (k, poly) in &p.comps {
        t.set_poly(k[0], k[1], poly.clone());
    }
    t
}

/// Inverse dictionary: the bivector with components {g_i, g_j}.
pub fn bivector_from_table(t: &BracketTable) -> Result<MultivectorField> {
    let mut out = MultivectorField::zero(&t.ring, 2);
    for (&(i, j), e) in t.stored_entries() {
        let p = e
            .as_poly()
            .ok_or_else(|| Error::Invalid("table entry is not polynomial".into()))?;
        out.add_term(&[i, j], p.clone());
    }
    Ok(out)
}

/// Exact evaluation of the bracket matrix M_{ij} = {g_i, g_j}(point),
/// together with its determinant over the parameter ring. Entries and the
/// determinant come back as scalar fractions (num, den); polynomial tables
/// always have den = 1.
pub fn bracket_matrix_at(
    t: &BracketTable,
    point: &[GaussRat],
) -> Result<(Vec<Vec<(Scalar, Scalar)>>, (Scalar, Scalar))> {
    let n = t.n_generators();
    if point.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: point.len(),
        });
    }
    let mut nums = vec![vec![Scalar::zero(); n]; n];
    let mut dens = vec![vec![Scalar::one(); n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let e = t.entry(i, j);
            let (num, den) = e.eval_gauss(point)?;
            nums[i][j] = num;
            dens[i][j] = den;
        }
    }
    let det = det_fractions(&nums, &dens);
    let matrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (nums[i][j].clone(), dens[i][j].clone()))
                .collect()
        })
        .collect();
    Ok((matrix, det))
}

/// Determinant of a matrix of scalar fractions by fraction-free elimination
/// over a common denominator: det(N_{ij}/D_{ij}) with all D constant-free in
/// coordinates. Returns (num, den) reduced by exact division where possible.
fn det_fractions(nums: &[Vec<Scalar>], dens: &[Vec<Scalar>]) -> (Scalar, Scalar) {
    let n = nums.len();
    // common denominator per row: product of that row's denominators
    let mut scaled = vec![vec![Scalar::zero(); n]; n];
    let mut total_den = Scalar::one();
    for i in 0..n {
        let mut row_den = Scalar::one();
        for j in 0..n {
            row_den = row_den.mul(&dens[i][j]);
        }
        total_den = total_den.mul(&row_den);
        for j in 0..n {
            let others = row_den
                .div_exact(&dens[i][j])
                .expect("row denominator divisible");
            scaled[i][j] = nums[i][j].mul(&others);
        }
    }
    let det = bareiss_det(scaled);
    match det.div_exact(&total_den) {
        Some(q) => (q, Scalar::one()),
        None => (det, total_den),
    }
}

/// Fraction-free Bareiss determinant over the scalar ring.
fn bareiss_det(mut m: Vec<Vec<Scalar>>) -> Scalar {
    let n = m.len();
    if n == 0 {
        return Scalar::one();
    }
    let mut sign = 1i64;
    let mut prev = Scalar::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Scalar::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = t
                    .div_exact(&prev)
                    .expect("Bareiss division is exact");
            }
        }
        for row in m.iter_mut().take(n).skip(k + 1) {
            row[k] = Scalar::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        d.neg()
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xp_ring() -> Arc<Ring> {
        Ring::new(vec!["x1", "x2", "p1", "p2"])
    }

    #[test]
    fn antisymmetry_and_self_bracket() {
        let r = xp_ring();
        let mut t = BracketTable::new(&r, "test");
        let x1 = Poly::var(&r, 0);
        t.set_poly(0, 1, x1.clone());
        assert_eq!(t.entry(1, 0), RationalFn::from_poly(x1.neg()));
        let f = Poly::var(&r, 0).mul(&Poly::var(&r, 1));
        assert!(t.bracket_poly(&f, &f).is_zero());
    }

    #[test]
    fn leibniz_on_slxx_style_table() {
        // {x^j, x^k} = eps x^j x^k for j<k on 3 generators:
        // {x1 x2, x3} = 2 eps x1 x2 x3
        let r = Ring::new(vec!["x1", "x2", "x3"]);
        let eps = Scalar::eps();
        let mut t = BracketTable::new(&r, "slxx");
        for j in 0..3 {
            for k in j + 1..3 {
                t.set_poly(j, k, Poly::var(&r, j).mul(&Poly::var(&r, k)).mul_scalar(&eps));
            }
        }
        let f = Poly::var(&r, 0).mul(&Poly::var(&r, 1));
        let g = Poly::var(&r, 2);
        let got = t.bracket_poly(&f, &g);
        let expect = Poly::var(&r, 0)
            .mul(&Poly::var(&r, 1))
            .mul(&Poly::var(&r, 2))
            .mul_scalar(&eps.mul(&Scalar::from_int(2)));
        assert_eq!(got, RationalFn::from_poly(expect));
    }

    #[test]
    fn quotient_rule() {
        // canonical {x, p} = -1: then {1/p, x} = -{p,x}/p^2 = -1/p^2
        let r = Ring::new(vec!["x", "p"]);
        let mut t = BracketTable::new(&r, "canonical");
        t.set_poly(0, 1, Poly::from_int(&r, -1));
        let p = RationalFn::from_poly(Poly::var(&r, 1));
        let inv_p = p.inv().unwrap();
        let x = RationalFn::from_poly(Poly::var(&r, 0));
        let got = t.bracket(&inv_p, &x);
        let expect = RationalFn::reduce(
            Poly::from_int(&r, -1),
            Poly::var(&r, 1).mul(&Poly::var(&r, 1)),
        )
        .unwrap();
        assert_eq!(got, expect);
    }

    #[test]
    fn determinant_of_canonical_block() {
        let r = xp_ring();
        let mut t = BracketTable::new(&r, "pi0");
        // {x^k, p_l} = -delta
        t.set_poly(0, 2, Poly::from_int(&r, -1));
        t.set_poly(1, 3, Poly::from_int(&r, -1));
        let origin = vec![GaussRat::zero(); 4];
        let (_, (det, den)) = bracket_matrix_at(&t, &origin).unwrap();
        assert_eq!(det, Scalar::one());
        assert!(den.is_one());
    }
}
