//! Gaussian rationals: exact complex numbers with rational real and imaginary parts.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

/// An element of Q(i), kept exact.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        GaussRat {
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        GaussRat {
            re: BigRational::new(BigInt::from(num), BigInt::from(den)),
            im: BigRational::zero(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRat {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        let norm = &self.re * &self.re + &self.im * &self.im;
        GaussRat {
            re: &self.re / &norm,
            im: -(&self.im / &norm),
        }
    }

    fn fmt_rational(q: &BigRational) -> String {
        if q.denom().is_one() {
            q.numer().to_string()
        } else {
            format!("{}/{}", q.numer(), q.denom())
        }
    }

    /// Canonical rendering: "3", "-1/2", "i", "-i", "2i", "2/3i", "1+i", "1/2-3i".
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let re_s = Self::fmt_rational(&self.re);
        let im_abs = Self::fmt_rational(&self.im.abs());
        let im_s = if im_abs == "1" {
            "i".to_string()
        } else {
            format!("{}i", im_abs)
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (false, true) => re_s,
            (true, false) => {
                if self.im.is_negative() {
                    format!("-{}", im_s)
                } else {
                    im_s
                }
            }
            _ => {
                let sign = if self.im.is_negative() { "-" } else { "+" };
                format!("{}{}{}", re_s, sign, im_s)
            }
        }
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl Add for &GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl AddAssign<&GaussRat> for GaussRat {
    fn add_assign(&mut self, rhs: &GaussRat) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Sub for &GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for &GaussRat {
    type Output = GaussRat;
    fn div(self, rhs: &GaussRat) -> GaussRat {
        self * &rhs.inv()
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

/// Total order used only to pick canonical representatives (leading
/// coefficients, pivot choices); not a meaningful numeric order on Q(i).
impl PartialOrd for GaussRat {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GaussRat {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.re.cmp(&other.re).then_with(|| self.im.cmp(&other.im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_ops() {
        let a = GaussRat::new(
            BigRational::new(1.into(), 2.into()),
            BigRational::from_integer(3.into()),
        );
        let b = &GaussRat::i() * &GaussRat::from_int(2);
        let prod = &a * &b;
        assert_eq!(&prod / &b, a);
        assert_eq!(&a - &a, GaussRat::zero());
        assert!((&a * &a.inv()).is_one());
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussRat::i();
        assert_eq!(&i * &i, GaussRat::from_int(-1));
        assert_eq!(i.conj(), &GaussRat::zero() - &i);
    }

    #[test]
    fn rendering() {
        assert_eq!(GaussRat::from_int(-3).render(), "-3");
        assert_eq!(GaussRat::i().render(), "i");
        assert_eq!((&GaussRat::from_int(-2) * &GaussRat::i()).render(), "-2i");
        assert_eq!(
            (&GaussRat::from_int(1) + &GaussRat::i()).render(),
            "1+i"
        );
        assert_eq!(GaussRat::from_frac(1, 2).render(), "1/2");
    }
}
