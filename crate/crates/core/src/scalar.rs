//! Exact scalars: arbitrary-precision rationals and the quadratic extension Q(√2).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number, always kept in lowest terms with positive denominator.
pub type Scalar = BigRational;

/// `n / d` as a [`Scalar`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn half() -> Scalar {
    rat(1, 2)
}

/// `(-1)^e` for a possibly negative exponent.
pub fn sign_pow(e: i64) -> Scalar {
    if e.rem_euclid(2) == 0 {
        int(1)
    } else {
        int(-1)
    }
}

pub fn is_integer(x: &Scalar) -> bool {
    x.is_integer()
}

/// Generalized binomial coefficient `binom(x, k)`.
pub fn binom(x: &Scalar, k: u32) -> Scalar {
    let mut acc = Scalar::one();
    for i in 0..k {
        acc = acc * (x - int(i as i64)) / int(i as i64 + 1);
    }
    acc
}

/// Renders a scalar as `p/q`, or `p` when integral.
pub fn fmt_scalar(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Floor of a rational as an i64. Panics on overflow, which cannot occur for
/// the desk-scale values used in this crate.
pub fn floor_i64(x: &Scalar) -> i64 {
    let f = x.numer().div_floor(x.denom());
    i64::try_from(f).expect("floor out of i64 range")
}

/// Element `rat + surd·√2` of Q(√2).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QuadScalar {
    pub rat: Scalar,
    pub surd: Scalar,
}

impl QuadScalar {
    pub fn new(rat: Scalar, surd: Scalar) -> Self {
        Self { rat, surd }
    }

    pub fn sqrt2() -> Self {
        Self::new(Scalar::zero(), Scalar::one())
    }

    /// The rational value, if the surd part vanishes.
    pub fn to_rational(&self) -> Option<Scalar> {
        self.surd.is_zero().then(|| self.rat.clone())
    }

    pub fn inverse(&self) -> Option<Self> {
        // (a + b√2)^{-1} = (a - b√2) / (a² - 2b²); the norm vanishes only at 0.
        let norm = &self.rat * &self.rat - int(2) * &self.surd * &self.surd;
        if norm.is_zero() {
            return None;
        }
        Some(Self::new(&self.rat / &norm, -&self.surd / &norm))
    }
}

impl From<Scalar> for QuadScalar {
    fn from(rat: Scalar) -> Self {
        Self::new(rat, Scalar::zero())
    }
}

impl Add for QuadScalar {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.rat + o.rat, self.surd + o.surd)
    }
}

impl Sub for QuadScalar {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.rat - o.rat, self.surd - o.surd)
    }
}

impl Mul for QuadScalar {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let rat = &self.rat * &o.rat + int(2) * &self.surd * &o.surd;
        let surd = &self.rat * &o.surd + &self.surd * &o.rat;
        Self::new(rat, surd)
    }
}

impl Neg for QuadScalar {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.rat, -self.surd)
    }
}

impl Zero for QuadScalar {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.surd.is_zero()
    }
}

impl One for QuadScalar {
    fn one() -> Self {
        Self::from(Scalar::one())
    }
}

impl fmt::Display for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rat.is_zero(), self.surd.is_zero()) {
            (_, true) => write!(f, "{}", fmt_scalar(&self.rat)),
            (true, false) => write!(f, "{}*sqrt2", fmt_scalar(&self.surd)),
            (false, false) => {
                let sign = if self.surd.is_negative() { "-" } else { "+" };
                write!(
                    f,
                    "{} {} {}*sqrt2",
                    fmt_scalar(&self.rat),
                    sign,
                    fmt_scalar(&self.surd.abs())
                )
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_reduce() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(3, -6), rat(-1, 2));
        assert_eq!(fmt_scalar(&rat(-10, 4)), "-5/2");
        assert_eq!(fmt_scalar(&int(7)), "7");
    }

    #[test]
    fn binomial_of_one_half() {
        assert_eq!(binom(&half(), 0), int(1));
        assert_eq!(binom(&half(), 1), rat(1, 2));
        assert_eq!(binom(&half(), 2), rat(-1, 8));
        assert_eq!(binom(&half(), 3), rat(1, 16));
        assert_eq!(binom(&half(), 4), rat(-5, 128));
    }

    #[test]
    fn quad_arithmetic() {
        let s = QuadScalar::sqrt2();
        assert_eq!((s.clone() * s.clone()).to_rational(), Some(int(2)));
        let x = QuadScalar::new(int(3), int(1));
        let inv = x.inverse().unwrap();
        assert_eq!(x * inv, QuadScalar::one());
        assert!(QuadScalar::zero().inverse().is_none());
    }

    #[test]
    fn floors() {
        assert_eq!(floor_i64(&rat(-1, 2)), -1);
        assert_eq!(floor_i64(&rat(7, 2)), 3);
        assert_eq!(sign_pow(-3), int(-1));
    }
}
