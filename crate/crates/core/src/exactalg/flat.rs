//! Flattened polynomials over Q(i) in (parameters ++ coordinates), used for
//! gcd computation and exact division behind [`super::ratfn::RationalFn`].
//!
//! The gcd is the classical primitive PRS: pick the highest active symbol,
//! split into content and primitive part, recurse on the content, run a
//! pseudo-remainder sequence on the primitive parts. Coefficients live in the
//! field Q(i), so the base case is trivial and correctness only needs the
//! UFD structure of Q(i)[symbols].

use super::gauss::GaussRat;
use super::poly::Mono;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatPoly {
    pub nsym: usize,
    pub terms: BTreeMap<Mono, GaussRat>,
}

impl FlatPoly {
    pub fn zero(nsym: usize) -> Self {
        FlatPoly {
            nsym,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nsym: usize, c: GaussRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::one(nsym), c);
        }
        FlatPoly { nsym, terms }
    }

    pub fn one(nsym: usize) -> Self {
        Self::constant(nsym, GaussRat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|m| m.total_degree() == 0)
    }

    fn insert(&mut self, m: Mono, c: GaussRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &FlatPoly) -> FlatPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &FlatPoly) -> FlatPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &FlatPoly) -> FlatPoly {
        let mut out = FlatPoly::zero(self.nsym);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = Mono(ma.0.iter().zip(&mb.0).map(|(a, b)| a + b).collect());
                out.insert(m, ca * cb);
            }
        }
        out
    }

    pub fn mul_coeff(&self, c: &GaussRat) -> FlatPoly {
        if c.is_zero() {
            return FlatPoly::zero(self.nsym);
        }
        FlatPoly {
            nsym: self.nsym,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn leading(&self) -> Option<(&Mono, &GaussRat)> {
        self.terms.iter().next_back()
    }

    pub fn degree_in(&self, sym: usize) -> u16 {
        self.terms.keys().map(|m| m.0[sym]).max().unwrap_or(0)
    }

    fn highest_active_symbol(&self) -> Option<usize> {
        (0..self.nsym).rev().find(|&s| self.degree_in(s) > 0)
    }

    /// Exact multivariate division; None when `self` is not a multiple.
    pub fn div_exact(&self, divisor: &FlatPoly) -> Option<FlatPoly> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = FlatPoly::zero(self.nsym);
        let (dm, dc) = divisor.leading().map(|(m, c)| (m.clone(), c.clone()))?;
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.leading().unwrap();
                (m.clone(), c.clone())
            };
            let mut q = vec![0u16; self.nsym];
            for s in 0..self.nsym {
                if rm.0[s] < dm.0[s] {
                    return None;
                }
                q[s] = rm.0[s] - dm.0[s];
            }
            let qc = &rc / &dc;
            let mut qt = FlatPoly::zero(self.nsym);
            qt.insert(Mono(q), qc);
            rem = rem.sub(&qt.mul(divisor));
            quot = quot.add(&qt);
            if let Some((nm, _)) = rem.leading() {
                if *nm >= rm {
                    return None;
                }
            }
        }
        Some(quot)
    }

    /// Coefficient of sym^k, as a polynomial in the remaining symbols
    /// (the exponent of `sym` is zeroed in the keys).
    fn coeff_of(&self, sym: usize, k: u16) -> FlatPoly {
        let mut out = FlatPoly::zero(self.nsym);
        for (m, c) in &self.terms {
            if m.0[sym] == k {
                let mut e = m.clone();
                e.0[sym] = 0;
                out.insert(e, c.clone());
            }
        }
        out
    }

    /// Multiply by sym^k.
    fn shift(&self, sym: usize, k: u16) -> FlatPoly {
        let mut out = FlatPoly::zero(self.nsym);
        for (m, c) in &self.terms {
            let mut e = m.clone();
            e.0[sym] += k;
            out.insert(e, c.clone());
        }
        out
    }

    /// Monic normalization over Q(i): leading coefficient becomes 1.
    fn normalized(&self) -> FlatPoly {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.mul_coeff(&c.inv()),
        }
    }

    fn content_wrt(&self, sym: usize) -> FlatPoly {
        let mut g = FlatPoly::zero(self.nsym);
        for k in 0..=self.degree_in(sym) {
            let c = self.coeff_of(sym, k);
            if !c.is_zero() {
                g = gcd(&g, &c);
                if c.is_constant() || g.is_constant() && !g.is_zero() {
                    return FlatPoly::one(self.nsym);
                }
            }
        }
        g
    }

    /// Pseudo-remainder of self by other with respect to `sym`.
    fn prem(&self, other: &FlatPoly, sym: usize) -> FlatPoly {
        let db = other.degree_in(sym);
        let lc_b = other.coeff_of(sym, db);
        let mut r = self.clone();
        while !r.is_zero() {
            let dr = r.degree_in(sym);
            if dr < db {
                break;
            }
            let lr = r.coeff_of(sym, dr);
            r = r.mul(&lc_b).sub(&lr.shift(sym, dr - db).mul(other));
        }
        r
    }
}

/// Gcd in Q(i)[symbols], monic-normalized so the result is canonical.
pub fn gcd(a: &FlatPoly, b: &FlatPoly) -> FlatPoly {
    if a.is_zero() {
        return b.normalized();
    }
    if b.is_zero() {
        return a.normalized();
    }
    if a.is_constant() || b.is_constant() {
        return FlatPoly::one(a.nsym);
    }
    let sym = a
        .highest_active_symbol()
        .max(b.highest_active_symbol())
        .expect("non-constant polynomial has an active symbol");
    if a.degree_in(sym) == 0 || b.degree_in(sym) == 0 {
        // one side is free of the main symbol: gcd divides that side's content
        let (free, with) = if a.degree_in(sym) == 0 { (a, b) } else { (b, a) };
        return gcd(free, &with.content_wrt(sym));
    }
    let cont_a = a.content_wrt(sym);
    let cont_b = b.content_wrt(sym);
    let pp_a = a.div_exact(&cont_a).expect("content divides");
    let pp_b = b.div_exact(&cont_b).expect("content divides");
    let cont_g = gcd(&cont_a, &cont_b);

    // primitive PRS on the primitive parts
    let (mut f, mut g) = if pp_a.degree_in(sym) >= pp_b.degree_in(sym) {
        (pp_a, pp_b)
    } else {
        (pp_b, pp_a)
    };
    loop {
        let r = f.prem(&g, sym);
        if r.is_zero() {
            break;
        }
        let rc = r.content_wrt(sym);
        f = g;
        g = r.div_exact(&rc).expect("content divides");
        if g.degree_in(sym) == 0 {
            // coprime in the main symbol
            return cont_g.normalized();
        }
    }
    let gc = g.content_wrt(sym);
    let gp = g.div_exact(&gc).expect("content divides");
    cont_g.mul(&gp).normalized()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn var(n: usize, i: usize) -> FlatPoly {
        let mut p = FlatPoly::zero(n);
        p.insert(Mono::var(n, i), GaussRat::one());
        p
    }

    #[test]
    fn gcd_of_products() {
        let n = 3;
        let x = var(n, 0);
        let y = var(n, 1);
        let z = var(n, 2);
        let a = x.add(&y); // x + y
        let b = x.sub(&z); // x - z
        let c = y.mul(&y).add(&FlatPoly::one(n)); // y^2 + 1
        let p = a.mul(&c);
        let q = b.mul(&c);
        let g = gcd(&p, &q);
        assert_eq!(g, c.normalized());
        assert_eq!(p.div_exact(&g).unwrap().mul(&g), p);
    }

    #[test]
    fn coprime_gcd_is_one() {
        let n = 2;
        let x = var(n, 0);
        let y = var(n, 1);
        let g = gcd(&x.add(&FlatPoly::one(n)), &y);
        assert!(g.is_constant() && !g.is_zero());
    }

    #[test]
    fn gaussian_coefficients() {
        let n = 1;
        let x = var(n, 0);
        // (x + i)(x - i) = x^2 + 1 shares (x + i) with (x + i)^2
        let xi = x.add(&FlatPoly::constant(n, GaussRat::i()));
        let xmi = x.sub(&FlatPoly::constant(n, GaussRat::i()));
        let g = gcd(&xi.mul(&xmi), &xi.mul(&xi));
        assert_eq!(g, xi.normalized());
    }
}
