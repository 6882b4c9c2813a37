//! Exact integer and rational arithmetic shared by every other module.

mod combinatorics;
mod decimal;
mod signed_sqrt;

pub use combinatorics::{binomial, binomial_i, factorial, pochhammer};
pub use decimal::{exp_rational, parse_decimal, parse_rational, rational_to_decimal, sqrt_to_decimal};
pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
pub use signed_sqrt::SignedSqrtRational;

use num_traits::{One, Zero};

/// Small-integer shorthand for building rationals.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `true` when `r` is the square of a rational number.
pub fn is_rational_square(r: &BigRational) -> bool {
    rational_sqrt(r).is_some()
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.numer() < &BigInt::zero() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

/// Integer power of a rational; `r^0 = 1` including `0^0`.
pub fn rational_pow(r: &BigRational, exp: u64) -> BigRational {
    let mut acc = BigRational::one();
    let mut base = r.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}
