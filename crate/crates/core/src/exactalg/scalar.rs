//! The coefficient ring: Gaussian-rational Laurent polynomials in the formal
//! deformation parameters. Parameters live in the coefficients, not among the
//! ring variables, so an identity verified here holds for all parameter values.

use super::gauss::GaussRat;
use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;

/// Formal parameters available to every computation, in display order.
pub const PARAMS: [&str; 6] = ["eps", "lambda", "h", "sigma", "a0", "b0"];
pub const NPARAMS: usize = PARAMS.len();

/// Exponent vector over `PARAMS`. Negative exponents are allowed (the
/// degree-4 su(n) family carries eps/h), which makes this a Laurent ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ParamPow(pub [i16; NPARAMS]);

impl ParamPow {
    pub const ONE: ParamPow = ParamPow([0; NPARAMS]);

    fn total(&self) -> i32 {
        self.0.iter().map(|&e| e as i32).sum()
    }

    fn mul(&self, other: &ParamPow) -> ParamPow {
        let mut out = [0i16; NPARAMS];
        for k in 0..NPARAMS {
            out[k] = self.0[k] + other.0[k];
        }
        ParamPow(out)
    }
}

/// Graded-lexicographic order, so iteration and printing are canonical.
impl Ord for ParamPow {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ParamPow {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Exact scalar: finite table from parameter monomials to Gaussian rationals.
/// Zero coefficients are never stored, so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Scalar {
    pub(crate) terms: BTreeMap<ParamPow, GaussRat>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_gauss(GaussRat::one())
    }

    pub fn i() -> Self {
        Scalar::from_gauss(GaussRat::i())
    }

    pub fn from_gauss(c: GaussRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(ParamPow::ONE, c);
        }
        Scalar { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_gauss(GaussRat::from_int(n))
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        Scalar::from_gauss(GaussRat::from_frac(num, den))
    }

    /// The formal parameter with the given name, e.g. `Scalar::param("eps")`.
    pub fn param(name: &str) -> Result<Self> {
        let idx = PARAMS
            .iter()
            .position(|p| *p == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Self::param_pow(idx, 1))
    }

    pub fn eps() -> Self {
        Self::param_pow(0, 1)
    }

    pub fn param_pow(idx: usize, exp: i16) -> Self {
        let mut pw = [0i16; NPARAMS];
        pw[idx] = exp;
        let mut terms = BTreeMap::new();
        terms.insert(ParamPow(pw), GaussRat::one());
        Scalar { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&ParamPow::ONE)
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    /// Constant (parameter-free) part, if the scalar is a pure constant.
    pub fn as_constant(&self) -> Option<GaussRat> {
        if self.is_zero() {
            return Some(GaussRat::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&ParamPow::ONE) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    fn insert(&mut self, key: ParamPow, val: GaussRat) {
        if val.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(val);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &val;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.insert(*k, v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect(),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (ka, va) in &self.terms {
            for (kb, vb) in &other.terms {
                out.insert(ka.mul(kb), va * vb);
            }
        }
        out
    }

    pub fn mul_gauss(&self, c: &GaussRat) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Complex conjugation: i -> -i, all formal parameters fixed (they are real).
    pub fn conj(&self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(k, v)| (*k, v.conj())).collect(),
        }
    }

    fn min_exponents(&self) -> [i16; NPARAMS] {
        let mut mins = [i16::MAX; NPARAMS];
        for k in self.terms.keys() {
            for a in 0..NPARAMS {
                mins[a] = mins[a].min(k.0[a]);
            }
        }
        if self.terms.is_empty() {
            mins = [0; NPARAMS];
        }
        mins
    }

    fn shift_exponents(&self, by: &[i16; NPARAMS]) -> Scalar {
        Scalar {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| {
                    let mut e = [0i16; NPARAMS];
                    for a in 0..NPARAMS {
                        e[a] = k.0[a] + by[a];
                    }
                    (ParamPow(e), v.clone())
                })
                .collect(),
        }
    }

    /// Exact division in the Laurent ring: `Some(q)` iff `self = q * other`.
    /// Monomial factors of `other` are units, so they always divide; the
    /// polynomial parts must divide exactly.
    pub fn div_exact(&self, other: &Scalar) -> Option<Scalar> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        if let Some(c) = other.as_constant() {
            return Some(self.mul_gauss(&c.inv()));
        }
        // strip unit monomial factors so both sides are ordinary polynomials
        let ms = self.min_exponents();
        let mo = other.min_exponents();
        let mut neg_ms = [0i16; NPARAMS];
        let mut neg_mo = [0i16; NPARAMS];
        let mut unit = [0i16; NPARAMS];
        for a in 0..NPARAMS {
            neg_ms[a] = -ms[a];
            neg_mo[a] = -mo[a];
            unit[a] = ms[a] - mo[a];
        }
        let mut rem = self.shift_exponents(&neg_ms);
        let divisor = other.shift_exponents(&neg_mo);
        let mut quot = Scalar::zero();
        let (lead_k, lead_c) = divisor
            .terms
            .iter()
            .next_back()
            .map(|(k, v)| (*k, v.clone()))?;
        while !rem.is_zero() {
            let (rk, rc) = rem.terms.iter().next_back().map(|(k, v)| (*k, v.clone()))?;
            let mut q = [0i16; NPARAMS];
            for a in 0..NPARAMS {
                q[a] = rk.0[a] - lead_k.0[a];
                if q[a] < 0 {
                    return None;
                }
            }
            let mut qterm = Scalar::zero();
            qterm.insert(ParamPow(q), &rc / &lead_c);
            let newrem = rem.sub(&qterm.mul(&divisor));
            if let Some((nk, _)) = newrem.terms.iter().next_back() {
                if *nk >= rk {
                    return None;
                }
            }
            quot = quot.add(&qterm);
            rem = newrem;
        }
        Some(quot.shift_exponents(&unit))
    }

    /// Inverse when self is a unit of the Laurent ring (a single monomial).
    pub fn unit_inverse(&self) -> Option<Scalar> {
        if self.terms.len() != 1 {
            return None;
        }
        let (k, c) = self.terms.iter().next().unwrap();
        let mut e = [0i16; NPARAMS];
        for a in 0..NPARAMS {
            e[a] = -k.0[a];
        }
        let mut out = Scalar::zero();
        out.insert(ParamPow(e), c.inv());
        Some(out)
    }

    /// Substitute concrete Gaussian-rational values for all parameters.
    pub fn eval_params(&self, values: &[GaussRat; NPARAMS]) -> Option<GaussRat> {
        let mut acc = GaussRat::zero();
        for (k, v) in &self.terms {
            let mut term = v.clone();
            for a in 0..NPARAMS {
                let e = k.0[a];
                if e == 0 {
                    continue;
                }
                let base = if e > 0 {
                    values[a].clone()
                } else {
                    if values[a].is_zero() {
                        return None;
                    }
                    values[a].inv()
                };
                for _ in 0..e.unsigned_abs() {
                    term = &term * &base;
                }
            }
            acc += &term;
        }
        Some(acc)
    }

    fn render_mono(k: &ParamPow) -> String {
        let mut parts = Vec::new();
        for a in 0..NPARAMS {
            match k.0[a] {
                0 => {}
                1 => parts.push(PARAMS[a].to_string()),
                e => parts.push(format!("{}^{}", PARAMS[a], e)),
            }
        }
        parts.join("*")
    }

    /// Canonical rendering, highest monomial first.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.terms.iter().rev() {
            let mono = Self::render_mono(k);
            let coeff = c.render();
            let piece = if mono.is_empty() {
                coeff
            } else if coeff == "1" {
                mono
            } else if coeff == "-1" {
                format!("-{}", mono)
            } else if coeff.contains('+') || (coeff.rfind('-').unwrap_or(0) > 0) {
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

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parametric_arithmetic() {
        let e = Scalar::eps();
        let l = Scalar::param("lambda").unwrap();
        let p = e.mul(&l).add(&Scalar::from_int(2));
        let q = p.mul(&p);
        // (eps*lambda + 2)^2 = eps^2 lambda^2 + 4 eps lambda + 4
        assert_eq!(q.terms.len(), 3);
        assert_eq!(q.render(), "eps^2*lambda^2 + 4*eps*lambda + 4");
    }

    #[test]
    fn laurent_and_exact_division() {
        let e = Scalar::eps();
        let h_inv = Scalar::param_pow(2, -1);
        let x = e.mul(&h_inv); // eps/h
        assert_eq!(x.render(), "eps*h^-1");
        let prod = x.mul(&Scalar::param("h").unwrap());
        assert_eq!(prod, Scalar::eps());

        let a = Scalar::eps().add(&Scalar::from_int(1));
        let b = Scalar::eps().sub(&Scalar::from_int(3));
        let ab = a.mul(&b);
        assert_eq!(ab.div_exact(&a).unwrap(), b);
        // lambda is a unit of the Laurent ring, so it always divides
        let lam = Scalar::param("lambda").unwrap();
        assert_eq!(ab.div_exact(&lam).unwrap().mul(&lam), ab);
        // but lambda + 1 does not divide eps-only polynomials
        assert_eq!(ab.div_exact(&lam.add(&Scalar::one())), None);
    }

    #[test]
    fn conjugation_fixes_parameters() {
        let s = Scalar::i().mul(&Scalar::eps());
        assert_eq!(s.conj(), s.neg());
        assert_eq!(s.conj().conj(), s);
    }
}
