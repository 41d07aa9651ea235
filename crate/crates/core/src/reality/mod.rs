//! The SO(n) phase space with its star involution: invariants x^2, p^2, E,
//! the function Lambda, the antilinear star operation on the
//! Lambda-localized ring, and exact involutivity / reality checks.
//!
//! Everything here lives in the localization of the coordinate ring at
//! Lambda, so elements are carried as (numerator, Lambda-power) pairs and
//! all identities reduce by exact long division by Lambda - no general gcd
//! is ever needed.

use crate::brackets::{general_cotangent_table, BracketTable};
use crate::error::{Error, Result};
use crate::exactalg::{poly_div_exact, Poly, RationalFn, Scalar};
use crate::liealg::tensor::EndTensor;
use crate::liealg::{build_algebra, invariant_s, standard_r, AlgKind, LieAlgebra};

/// Which square root of -1 multiplies s_lambda in w = r -+ i s_lambda.
/// `Minus` is the branch whose brackets match the universal display
/// {p_j, x^k} = delta + i eps (E delta + p_j x^k - x_j p^k); `Plus` produces
/// the complex-conjugate structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Minus,
    Plus,
}

impl Branch {
    fn i(&self) -> Scalar {
        match self {
            Branch::Minus => Scalar::i(),
            Branch::Plus => Scalar::i().neg(),
        }
    }
}

/// The basic invariant polynomials of the so(n) phase space in the
/// orthonormal (Kronecker) metric.
pub struct Invariants {
    pub x2: Poly,
    pub p2: Poly,
    pub energy: Poly,
    pub lambda: Poly,
}

/// Invariants x^2, p^2, E = <p, x>, Lambda = 1 + 2 i eps E - eps^2 x^2 p^2
/// over the cotangent ring of so(n).
pub fn invariants(n: usize) -> Invariants {
    invariants_branch(n, Branch::Minus)
}

fn invariants_branch(n: usize, branch: Branch) -> Invariants {
    let ring = crate::brackets::cotangent_ring(n);
    let mut x2 = Poly::zero(&ring);
    let mut p2 = Poly::zero(&ring);
    let mut energy = Poly::zero(&ring);
    for j in 0..n {
        let xj = Poly::var(&ring, j);
        let pj = Poly::var(&ring, n + j);
        x2 = x2.add(&xj.mul(&xj));
        p2 = p2.add(&pj.mul(&pj));
        energy = energy.add(&pj.mul(&xj));
    }
    let eps = Scalar::eps();
    let two_ie = branch.i().mul(&eps).mul(&Scalar::from_int(2));
    let eps2 = eps.mul(&eps);
    let lambda = Poly::one(&ring)
        .add(&energy.mul_scalar(&two_ie))
        .sub(&x2.mul(&p2).mul_scalar(&eps2));
    Invariants {
        x2,
        p2,
        energy,
        lambda,
    }
}

/// An element num / Lambda^power of the localized ring.
#[derive(Debug, Clone)]
pub struct Localized {
    pub num: Poly,
    pub power: usize,
}

/// The so(n) star structure: the w_lambda bracket table, the invariant
/// Lambda and the star images of the generators.
pub struct StarStructure {
    pub n: usize,
    pub branch: Branch,
    pub algebra: LieAlgebra,
    pub r_end: EndTensor,
    pub table: BracketTable,
    pub inv: Invariants,
    /// star images of the generators as (numerator, Lambda-power)
    star_map: Vec<Localized>,
}

/// A reality-defect record: the generator pair, the cleared numerator and
/// the Lambda power that was cleared.
pub struct DefectReport {
    pub pair: (String, String),
    pub numerator: Poly,
    pub lambda_power: usize,
}

impl StarStructure {
    pub fn new(n: usize, branch: Branch) -> Result<StarStructure> {
        if n < 2 {
            return Err(Error::UnsupportedAlgebra {
                kind: "so".into(),
                n,
            });
        }
        let algebra = build_algebra(AlgKind::So, n)?;
        let r_end = EndTensor::from_wedge(&algebra, &standard_r(&algebra)?);
        let s_eps = EndTensor::from_pair(&algebra, &invariant_s(&algebra)?)
            .add_lambda_identity(&Scalar::eps());
        // w_lambda = r -+ i s_eps: fold the imaginary prefactor into the
        // symmetric argument
        let s_arg = s_eps.scale(&branch.i().neg());
        let table = general_cotangent_table(&r_end, &s_arg)?;
        let inv = invariants_branch(n, branch);
        let ring = table.ring.clone();
        let mut star_map = Vec::with_capacity(2 * n);
        for j in 0..n {
            star_map.push(Localized {
                num: Poly::var(&ring, j),
                power: 0,
            });
        }
        let ieps = branch.i().mul(&Scalar::eps());
        for j in 0..n {
            // (p_j)^* = (p_j + i eps p^2 x_j) / Lambda
            let t_j = Poly::var(&ring, n + j)
                .add(&inv.p2.mul(&Poly::var(&ring, j)).mul_scalar(&ieps));
            star_map.push(Localized { num: t_j, power: 1 });
        }
        Ok(StarStructure {
            n,
            branch,
            algebra,
            r_end,
            table,
            inv,
            star_map,
        })
    }

    /// T_j = p_j + i eps p^2 x_j, the numerator of (p_j)^*.
    pub fn t_j(&self, j: usize) -> Poly {
        self.star_map[self.n + j].num.clone()
    }

    fn lambda_pow(&self, k: usize) -> Poly {
        self.inv.lambda.pow(k as u32)
    }

    /// Strip every Lambda factor by exact long division.
    fn strip_lambda(&self, loc: &mut Localized) {
        while loc.power > 0 {
            match poly_div_exact(&loc.num, &self.inv.lambda) {
                Some(q) => {
                    loc.num = q;
                    loc.power -= 1;
                }
                None => break,
            }
        }
        if loc.num.is_zero() {
            loc.power = 0;
        }
    }

    fn loc_add(&self, a: &Localized, b: &Localized) -> Localized {
        let p = a.power.max(b.power);
        let num = a
            .num
            .mul(&self.lambda_pow(p - a.power))
            .add(&b.num.mul(&self.lambda_pow(p - b.power)));
        Localized { num, power: p }
    }

    fn loc_mul(&self, a: &Localized, b: &Localized) -> Localized {
        Localized {
            num: a.num.mul(&b.num),
            power: a.power + b.power,
        }
    }

    /// Bring a rational function into the localized ring: f = num / Lambda^a
    /// after exact division; errors when the denominator is not a power of
    /// Lambda times a unit (up to factors shared with the numerator).
    pub fn localize(&self, f: &RationalFn) -> Result<Localized> {
        let mut den = f.den().clone();
        let mut power = 0usize;
        while den.as_scalar().is_none() {
            match poly_div_exact(&den, &self.inv.lambda) {
                Some(q) => {
                    den = q;
                    power += 1;
                }
                None => break,
            }
        }
        let num = if let Some(c) = den.as_scalar() {
            if let Some(cinv) = c.unit_inverse() {
                f.num().mul_scalar(&cinv)
            } else {
                poly_div_exact(f.num(), &den).ok_or(Error::NotLambdaLocalized)?
            }
        } else {
            // leftover non-Lambda cofactor must divide the numerator
            poly_div_exact(f.num(), &den).ok_or(Error::NotLambdaLocalized)?
        };
        let mut loc = Localized { num, power };
        self.strip_lambda(&mut loc);
        Ok(loc)
    }

    fn to_rational(&self, loc: &Localized) -> RationalFn {
        RationalFn::from_poly(loc.num.clone())
            .div(&RationalFn::from_poly(self.lambda_pow(loc.power)))
            .expect("Lambda power nonzero")
    }

    /// Star of a localized element: conjugate coefficients, substitute
    /// p_j -> T_j / Lambda, invert the Lambda power through
    /// star(Lambda) = 1 / Lambda.
    fn star_localized(&self, f: &Localized) -> Localized {
        let ring = &self.table.ring;
        let identity: Vec<usize> = (0..2 * self.n).collect();
        let conj = f.num.conjugate(&identity).expect("identity involution");
        // substitute monomial by monomial
        let mut acc = Localized {
            num: Poly::zero(ring),
            power: 0,
        };
        for (mono, coeff) in conj.terms() {
            let mut term = Localized {
                num: Poly::constant(ring, coeff.clone()),
                power: 0,
            };
            for (var, &e) in mono.0.iter().enumerate() {
                for _ in 0..e {
                    term = self.loc_mul(&term, &self.star_map[var]);
                }
            }
            acc = self.loc_add(&acc, &term);
        }
        // star(num / Lambda^a) = star(num) * Lambda^a ... star(Lambda)^a with
        // star(Lambda) = 1/Lambda handled by multiplying back:
        // f = num * Lambda^{-a} => f^* = num^* * (Lambda^*)^{-a} = num^* * Lambda^a
        acc.num = acc.num.mul(&self.lambda_pow(f.power));
        self.strip_lambda(&mut acc);
        acc
    }

    /// The antilinear multiplicative star on the Lambda-localized ring.
    pub fn star_of(&self, f: &RationalFn) -> Result<RationalFn> {
        let loc = self.localize(f)?;
        Ok(self.to_rational(&self.star_localized(&loc)))
    }

    pub fn star_of_generator(&self, idx: usize) -> RationalFn {
        self.to_rational(&self.star_map[idx])
    }

    /// star(star(g_i)) - g_i for every generator, as localized numerators;
    /// all must vanish.
    pub fn involution_defect(&self) -> Vec<Localized> {
        let ring = &self.table.ring;
        (0..2 * self.n)
            .map(|i| {
                let ss = self.star_localized(&self.star_localized(&Localized {
                    num: Poly::var(ring, i),
                    power: 0,
                }));
                let g = Localized {
                    num: Poly::var(ring, i).neg(),
                    power: 0,
                };
                let mut d = self.loc_add(&ss, &g);
                self.strip_lambda(&mut d);
                d
            })
            .collect()
    }

    /// {f, g}^* - {f^*, g^*} for a generator pair, with the Lambda
    /// denominator cleared to a polynomial numerator.
    pub fn reality_defect(&self, i: usize, j: usize) -> Result<DefectReport> {
        let ring = &self.table.ring;
        let gi = Localized {
            num: Poly::var(ring, i),
            power: 0,
        };
        let gj = Localized {
            num: Poly::var(ring, j),
            power: 0,
        };
        // lhs = star({g_i, g_j}) ; the table entry is polynomial
        let entry = self
            .table
            .entry(i, j)
            .as_poly()
            .cloned()
            .ok_or_else(|| Error::Invalid("table entry is not polynomial".into()))?;
        let lhs = self.star_localized(&Localized {
            num: entry,
            power: 0,
        });
        // rhs = {g_i^*, g_j^*} via the localized quotient rule:
        // {a/L^s, b/L^t} = ({a,b} - s a {L,b}/L - t b {a,L}/L) / L^{s+t}
        let si = self.star_localized(&gi);
        let sj = self.star_localized(&gj);
        let rhs = self.loc_bracket(&si, &sj);
        let mut defect = self.loc_add(&lhs, &Localized {
            num: rhs.num.neg(),
            power: rhs.power,
        });
        self.strip_lambda(&mut defect);
        Ok(DefectReport {
            pair: (ring.vars[i].clone(), ring.vars[j].clone()),
            numerator: defect.num.clone(),
            lambda_power: defect.power,
        })
    }

    /// Poisson bracket of localized elements. With L = Lambda:
    /// {a/L^s, b/L^t} = ({a,b} L^2 - s a {L,b} L - t b {a,L} L + s t a b ... )
    /// expanded through the Leibniz rule; assembled over the common
    /// denominator L^{s+t+2}.
    pub fn loc_bracket(&self, a: &Localized, b: &Localized) -> Localized {
        let lam = &self.inv.lambda;
        let t = &self.table;
        let ab = t
            .bracket_poly(&a.num, &b.num)
            .as_poly()
            .cloned()
            .expect("polynomial bracket");
        let al = t
            .bracket_poly(&a.num, lam)
            .as_poly()
            .cloned()
            .expect("polynomial bracket");
        let lb = t
            .bracket_poly(lam, &b.num)
            .as_poly()
            .cloned()
            .expect("polynomial bracket");
        let s = Scalar::from_int(a.power as i64);
        let tt = Scalar::from_int(b.power as i64);
        // Leibniz with {L^{-s}, b} = -s L^{-s-1} {L,b} and {L^{-s},L^{-t}} = 0:
        // {a L^{-s}, b L^{-t}} = L^{-(s+t+1)} ( {a,b} L - s a {L,b} - t b {a,L} )
        let num = ab
            .mul(lam)
            .sub(&a.num.mul(&lb).mul_scalar(&s))
            .sub(&b.num.mul(&al).mul_scalar(&tt));
        let mut out = Localized {
            num,
            power: a.power + b.power + 1,
        };
        self.strip_lambda(&mut out);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda_at_eps_zero_is_one() {
        let inv = invariants(3);
        let at0 = inv
            .lambda
            .eval_gauss(&vec![crate::exactalg::GaussRat::zero(); 6])
            .unwrap();
        assert!(at0.is_one());
    }

    #[test]
    fn energy_at_n2() {
        let inv = invariants(2);
        assert_eq!(inv.energy.render(), "x1*p1 + x2*p2");
    }

    #[test]
    fn star_basic_images() {
        let s = StarStructure::new(2, Branch::Minus).unwrap();
        let ring = &s.table.ring;
        // star(x^1) = x^1
        let x1 = RationalFn::from_poly(Poly::var(ring, 0));
        assert_eq!(s.star_of(&x1).unwrap(), x1);
        // star(Lambda) = 1 / Lambda
        let lam = RationalFn::from_poly(s.inv.lambda.clone());
        let star_lam = s.star_of(&lam).unwrap();
        assert_eq!(star_lam, lam.inv().unwrap());
        // star(E) = (E + i eps p^2 x^2) / Lambda
        let e = RationalFn::from_poly(s.inv.energy.clone());
        let expect = RationalFn::from_poly(s.inv.energy.add(
            &s.inv
                .p2
                .mul(&s.inv.x2)
                .mul_scalar(&Scalar::i().mul(&Scalar::eps())),
        ))
        .div(&lam)
        .unwrap();
        assert_eq!(s.star_of(&e).unwrap(), expect);
        // star(p^2) = p^2 / Lambda
        let p2 = RationalFn::from_poly(s.inv.p2.clone());
        assert_eq!(
            s.star_of(&p2).unwrap(),
            p2.div(&lam).unwrap()
        );
    }

    #[test]
    fn involution_at_n2() {
        let s = StarStructure::new(2, Branch::Minus).unwrap();
        for d in s.involution_defect() {
            assert!(d.num.is_zero());
        }
    }

    #[test]
    fn non_localized_denominator_rejected() {
        let s = StarStructure::new(2, Branch::Minus).unwrap();
        let ring = &s.table.ring;
        let bad = RationalFn::from_poly(Poly::one(ring))
            .div(&RationalFn::from_poly(Poly::var(ring, 0)))
            .unwrap();
        assert!(matches!(s.star_of(&bad), Err(Error::NotLambdaLocalized)));
    }

    #[test]
    fn reality_defect_n2_pairs() {
        let s = StarStructure::new(2, Branch::Minus).unwrap();
        // (p1, x1), (p1, p2), (x1, x2)
        for (i, j) in [(2usize, 0usize), (2, 3), (0, 1)] {
            let rep = s.reality_defect(i, j).unwrap();
            assert!(rep.numerator.is_zero(), "pair {:?}", rep.pair);
        }
    }
}
