//! Multivariate polynomials over [`Scalar`] in a declared, ordered list of
//! coordinate variables. Normal form is canonical: graded-lex term order, no
//! zero coefficients stored.

use super::gauss::GaussRat;
use super::scalar::Scalar;
use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// A polynomial ring declaration: the ordered coordinate variable names.
#[derive(Debug, PartialEq, Eq)]
pub struct Ring {
    pub vars: Vec<String>,
}

impl Ring {
    pub fn new<S: Into<String>>(vars: Vec<S>) -> Arc<Ring> {
        Arc::new(Ring {
            vars: vars.into_iter().map(Into::into).collect(),
        })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }
}

pub(crate) fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> Result<()> {
    if Arc::ptr_eq(a, b) || a.vars == b.vars {
        Ok(())
    } else {
        Err(Error::RingMismatch(a.vars.join(","), b.vars.join(",")))
    }
}

/// Monomial exponent vector with graded-lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<u16>);

impl Mono {
    pub fn one(n: usize) -> Mono {
        Mono(vec![0; n])
    }

    pub fn var(n: usize, idx: usize) -> Mono {
        let mut e = vec![0; n];
        e[idx] = 1;
        Mono(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    fn mul(&self, other: &Mono) -> Mono {
        Mono(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Exact multivariate polynomial with [`Scalar`] coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    pub ring: Arc<Ring>,
    pub(crate) terms: BTreeMap<Mono, Scalar>,
}

impl Poly {
    pub fn zero(ring: &Arc<Ring>) -> Poly {
        Poly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: Scalar) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::one(ring.nvars()), c);
        }
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn one(ring: &Arc<Ring>) -> Poly {
        Self::constant(ring, Scalar::one())
    }

    pub fn from_int(ring: &Arc<Ring>, n: i64) -> Poly {
        Self::constant(ring, Scalar::from_int(n))
    }

    pub fn var(ring: &Arc<Ring>, idx: usize) -> Poly {
        assert!(idx < ring.nvars(), "variable index out of range");
        let mut terms = BTreeMap::new();
        terms.insert(Mono::var(ring.nvars(), idx), Scalar::one());
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var_named(ring: &Arc<Ring>, name: &str) -> Result<Poly> {
        Ok(Self::var(ring, ring.var_index(name)?))
    }

    pub fn monomial(ring: &Arc<Ring>, mono: Mono, c: Scalar) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_scalar().map(|s| s.is_one()).unwrap_or(false)
    }

    /// The constant scalar, if the polynomial has no variable dependence.
    pub fn as_scalar(&self) -> Option<Scalar> {
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Mono::one(self.ring.nvars())) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    pub(crate) fn insert(&mut self, mono: Mono, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        same_ring(&self.ring, &other.ring).expect("ring mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        same_ring(&self.ring, &other.ring).expect("ring mismatch");
        let mut out = Poly::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert(ma.mul(mb), ca.mul(cb));
            }
        }
        out
    }

    pub fn mul_scalar(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        let mut out = Poly::zero(&self.ring);
        for (m, v) in &self.terms {
            out.insert(m.clone(), v.mul(c));
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Partial derivative with respect to the named variable.
    pub fn diff_named(&self, var: &str) -> Result<Poly> {
        Ok(self.diff(self.ring.var_index(var)?))
    }

    pub fn diff(&self, var: usize) -> Poly {
        assert!(var < self.ring.nvars(), "variable index out of range");
        let mut out = Poly::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[var] = e - 1;
            out.insert(m2, c.mul(&Scalar::from_int(e as i64)));
        }
        out
    }

    /// Conjugation: coefficients conjugated, variables renamed through `swap`,
    /// an involutive permutation of the variable indices.
    pub fn conjugate(&self, swap: &[usize]) -> Result<Poly> {
        let n = self.ring.nvars();
        if swap.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: swap.len(),
            });
        }
        for (i, &s) in swap.iter().enumerate() {
            if s >= n || swap[s] != i {
                return Err(Error::NotAnInvolution(i));
            }
        }
        let mut out = Poly::zero(&self.ring);
        for (m, c) in &self.terms {
            let mut e = vec![0u16; n];
            for (i, &exp) in m.0.iter().enumerate() {
                e[swap[i]] = exp;
            }
            out.insert(Mono(e), c.conj());
        }
        Ok(out)
    }

    /// Substitute polynomials (over an arbitrary target ring) for variables.
    pub fn substitute(&self, target: &Arc<Ring>, map: &[Poly]) -> Result<Poly> {
        if map.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.ring.nvars(),
                got: map.len(),
            });
        }
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut term = Poly::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&map[i].pow(e as u32));
                }
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Exact evaluation at a rational point.
    pub fn eval_gauss(&self, point: &[GaussRat]) -> Result<Scalar> {
        if point.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.ring.nvars(),
                got: point.len(),
            });
        }
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut v = GaussRat::one();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    v = &v * &point[i];
                }
            }
            acc = acc.add(&c.mul_gauss(&v));
        }
        Ok(acc)
    }

    /// Leading coefficient in graded-lex order.
    pub fn leading(&self) -> Option<(&Mono, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Scalar)> {
        self.terms.iter()
    }

    fn render_mono(&self, m: &Mono) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.ring.vars[i].clone()),
                _ => parts.push(format!("{}^{}", self.ring.vars[i], e)),
            }
        }
        parts.join("*")
    }

    /// Canonical rendering, highest graded-lex monomial first.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (m, c) in self.terms.iter().rev() {
            let mono = self.render_mono(m);
            let coeff = c.render();
            let piece = if mono.is_empty() {
                if c.terms.len() > 1 {
                    format!("({})", coeff)
                } else {
                    coeff
                }
            } else if coeff == "1" {
                mono
            } else if coeff == "-1" {
                format!("-{}", mono)
            } else if c.terms.len() > 1 {
                format!("({})*{}", coeff, mono)
            } else {
                format!("{}*{}", coeff, mono)
            };
            if out.is_empty() {
                out = piece;
            } else if let Some(stripped) = piece.strip_prefix('-') {
                out = format!("{} - {}", out, stripped);
            } else {
                out = format!("{} + {}", out, piece);
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Arc<Ring> {
        Ring::new(vec!["x", "y", "t"])
    }

    #[test]
    fn power_rule() {
        let r = xy();
        let t = Poly::var_named(&r, "t").unwrap();
        let t2 = t.mul(&t);
        assert_eq!(t2.diff_named("t").unwrap().render(), "2*t");
        // d(1 - t^2)/dt = -2t
        let f = Poly::one(&r).sub(&t2);
        assert_eq!(f.diff_named("t").unwrap().render(), "-2*t");
    }

    #[test]
    fn absent_variable_derivative() {
        let r = xy();
        let x = Poly::var_named(&r, "x").unwrap();
        let y = Poly::var_named(&r, "y").unwrap();
        assert!(x.mul(&y).diff_named("t").unwrap().is_zero());
        assert!(matches!(
            x.diff_named("nope"),
            Err(Error::UnknownVariable(_))
        ));
    }

    #[test]
    fn conjugate_swaps_and_conjugates() {
        let r = Ring::new(vec!["z1", "z2", "zb1", "zb2"]);
        let z1 = Poly::var(&r, 0);
        let zb2 = Poly::var(&r, 3);
        let f = z1.mul(&zb2).mul_scalar(&Scalar::i());
        let swapped = f.conjugate(&[2, 3, 0, 1]).unwrap();
        // i*z1*zb2 -> -i*zb1*z2
        let z2 = Poly::var(&r, 1);
        let zb1 = Poly::var(&r, 2);
        assert_eq!(swapped, zb1.mul(&z2).mul_scalar(&Scalar::i().neg()));
        assert_eq!(swapped.conjugate(&[2, 3, 0, 1]).unwrap(), f);
        assert!(f.conjugate(&[1, 2, 0, 3]).is_err());
    }

    #[test]
    fn graded_lex_rendering() {
        let r = xy();
        let x = Poly::var(&r, 0);
        let y = Poly::var(&r, 1);
        let f = x.mul(&x).add(&y).add(&Poly::from_int(&r, 3));
        assert_eq!(f.render(), "x^2 + y + 3");
    }
}
