use std::fmt;
use std::ops::{Div, Mul, Neg};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::rational_sqrt;

/// A value of the form `sign * sqrt(radicand)` with a reduced nonnegative
/// rational radicand.
///
/// No square-free extraction is performed: the pair `(sign, radicand)` is
/// already injective on the represented real numbers, so structural equality
/// is value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedSqrtRational {
    sign: i8,
    radicand: BigRational,
}

impl SignedSqrtRational {
    pub fn zero() -> Self {
        SignedSqrtRational { sign: 0, radicand: BigRational::zero() }
    }

    pub fn one() -> Self {
        SignedSqrtRational { sign: 1, radicand: BigRational::one() }
    }

    /// Builds `sign * sqrt(radicand)`. A zero sign or zero radicand gives zero.
    pub fn new(sign: i8, radicand: BigRational) -> Result<Self> {
        if radicand.is_negative() {
            return Err(Error::InvalidParams(format!("negative radicand {radicand}")));
        }
        if !(-1..=1).contains(&sign) {
            return Err(Error::InvalidParams(format!("sign must be -1, 0 or 1, got {sign}")));
        }
        if sign == 0 || radicand.is_zero() {
            return Ok(Self::zero());
        }
        Ok(SignedSqrtRational { sign, radicand })
    }

    /// The value `q * sqrt(r)` for a rational coefficient `q`.
    pub fn from_coefficient(q: &BigRational, r: &BigRational) -> Self {
        if q.is_zero() || r.is_zero() {
            return Self::zero();
        }
        let sign = if q.is_negative() { -1 } else { 1 };
        SignedSqrtRational { sign, radicand: q * q * r }
    }

    /// The exact rational `q` as a signed square root.
    pub fn from_rational(q: &BigRational) -> Self {
        Self::from_coefficient(q, &BigRational::one())
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn radicand(&self) -> &BigRational {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// `sign * radicand`, i.e. the square carrying the original sign.
    pub fn signed_square(&self) -> BigRational {
        match self.sign {
            0 => BigRational::zero(),
            s => &self.radicand * BigInt::from(s),
        }
    }

    /// Exact sum of two values whose radicands differ by a rational square
    /// factor. Anything else leaves the representation.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let ratio = &other.radicand / &self.radicand;
        let q = rational_sqrt(&ratio).ok_or(Error::IncommensurableSum)?;
        // self + other = sqrt(r_self) * (s_self + s_other * q)
        let coeff = BigRational::from_integer(self.sign.into()) + q * BigInt::from(other.sign);
        Ok(Self::from_coefficient(&coeff, &self.radicand))
    }

    /// Divides by `sqrt(r)` for a positive rational `r`.
    pub fn div_sqrt(&self, r: &BigRational) -> Self {
        assert!(r.is_positive(), "division by sqrt of a nonpositive rational");
        SignedSqrtRational { sign: self.sign, radicand: &self.radicand / r }
    }
}

impl SignedSqrtRational {
    /// Multiplies by `sqrt(r)` for a nonnegative rational `r`.
    pub fn mul_sqrt(&self, r: &BigRational) -> Self {
        assert!(!r.is_negative(), "sqrt of a negative rational");
        if self.is_zero() || r.is_zero() {
            return Self::zero();
        }
        SignedSqrtRational { sign: self.sign, radicand: &self.radicand * r }
    }
}

impl Neg for SignedSqrtRational {
    type Output = Self;
    fn neg(self) -> Self {
        SignedSqrtRational { sign: -self.sign, radicand: self.radicand }
    }
}

impl Mul for &SignedSqrtRational {
    type Output = SignedSqrtRational;
    fn mul(self, rhs: Self) -> SignedSqrtRational {
        let sign = self.sign * rhs.sign;
        if sign == 0 {
            return SignedSqrtRational::zero();
        }
        SignedSqrtRational { sign, radicand: &self.radicand * &rhs.radicand }
    }
}

impl Mul for SignedSqrtRational {
    type Output = SignedSqrtRational;
    fn mul(self, rhs: Self) -> SignedSqrtRational {
        &self * &rhs
    }
}

impl Div for &SignedSqrtRational {
    type Output = SignedSqrtRational;
    fn div(self, rhs: Self) -> SignedSqrtRational {
        assert!(!rhs.is_zero(), "division by zero");
        if self.is_zero() {
            return SignedSqrtRational::zero();
        }
        SignedSqrtRational { sign: self.sign * rhs.sign, radicand: &self.radicand / &rhs.radicand }
    }
}

impl fmt::Display for SignedSqrtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            0 => write!(f, "0"),
            1 => write!(f, "+sqrt({})", self.radicand),
            _ => write!(f, "-sqrt({})", self.radicand),
        }
    }
}
