//! Terminating generalized hypergeometric series over exact rationals.
//!
//! A series `pFq[a; b; z]` terminates when some upper parameter is a
//! nonpositive integer `-T`: every term past `k = T` carries the factor
//! `(-T)_k = 0`. Terms are generated by the running ratio
//! `t_k = t_{k-1} * prod(a_i + k - 1) / prod(b_j + k - 1) * z / k`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{factorial, pochhammer};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesParams3F2 {
    pub upper: [BigRational; 3],
    pub lower: [BigRational; 2],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesParams2F1 {
    pub upper: [BigRational; 2],
    pub lower: [BigRational; 1],
    pub argument: BigRational,
}

impl SeriesParams3F2 {
    pub fn from_integers(upper: [i64; 3], lower: [i64; 2]) -> Self {
        SeriesParams3F2 { upper: upper.map(int), lower: lower.map(int) }
    }
}

impl SeriesParams2F1 {
    pub fn from_integers(upper: [i64; 2], lower: i64, argument: BigRational) -> Self {
        SeriesParams2F1 { upper: upper.map(int), lower: [int(lower)], argument }
    }
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `Some(-a)` when `a` is a nonpositive integer.
fn nonpositive_integer(a: &BigRational) -> Option<u64> {
    if a.is_integer() && !a.is_positive() {
        (-a.to_integer()).to_u64()
    } else {
        None
    }
}

/// Index of the last possibly nonzero term.
fn termination_index(upper: &[BigRational]) -> Result<u64> {
    upper.iter().filter_map(nonpositive_integer).min().ok_or(Error::NonTerminating)
}

fn check_poles(lower: &[BigRational], last: u64) -> Result<()> {
    for b in lower {
        if let Some(m) = nonpositive_integer(b) {
            // (b)_k vanishes from k = m + 1 on
            if m < last {
                return Err(Error::PoleBeforeTermination { term: m + 1, last });
            }
        }
    }
    Ok(())
}

fn terms(upper: &[BigRational], lower: &[BigRational], z: &BigRational) -> Result<Vec<BigRational>> {
    let last = termination_index(upper)?;
    check_poles(lower, last)?;
    let mut out = Vec::with_capacity(last as usize + 1);
    let mut term = BigRational::one();
    out.push(term.clone());
    for k in 1..=last {
        let shift = int(k as i64 - 1);
        let mut num = z.clone();
        for a in upper {
            num *= a + &shift;
        }
        let mut den = int(k as i64);
        for b in lower {
            den *= b + &shift;
        }
        term = term * num / den;
        out.push(term.clone());
    }
    Ok(out)
}

/// The terms `t_0, ..., t_T` of `3F2[a; b; 1]`.
pub fn terms_3f2_unit(params: &SeriesParams3F2) -> Result<Vec<BigRational>> {
    terms(&params.upper, &params.lower, &BigRational::one())
}

/// Exact value of a terminating `3F2` at unit argument.
pub fn eval_3f2_unit(params: &SeriesParams3F2) -> Result<BigRational> {
    Ok(terms_3f2_unit(params)?.into_iter().sum())
}

/// Exact value of a terminating `2F1` at a rational argument.
pub fn eval_2f1(params: &SeriesParams2F1) -> Result<BigRational> {
    Ok(terms(&params.upper, &params.lower, &params.argument)?.into_iter().sum())
}

/// Regularized unit-argument series
/// `sum_k (a1)_k (a2)_k (a3)_k / (Gamma(b1 + k) Gamma(b2 + k) k!)`
/// for integer lower parameters.
///
/// Equal to `3F2[a; b; 1] / (Gamma(b1) Gamma(b2))` whenever both lower
/// parameters are positive, and finite where the plain series has a pole:
/// terms with `b_j + k <= 0` drop out because `1/Gamma` vanishes there.
pub fn eval_3f2_unit_regularized(params: &SeriesParams3F2) -> Result<BigRational> {
    let last = termination_index(&params.upper)?;
    let mut lower = [0i64; 2];
    for (slot, b) in lower.iter_mut().zip(&params.lower) {
        *slot = b
            .is_integer()
            .then(|| b.to_integer().to_i64())
            .flatten()
            .ok_or_else(|| Error::InvalidParams(format!("regularized series needs integer lower parameters, got {b}")))?;
    }
    let first = lower.iter().map(|&b| (1 - b).max(0) as u64).max().unwrap_or(0);
    if first > last {
        return Ok(BigRational::zero());
    }
    let gamma = |n: i64| BigInt::from(factorial((n - 1) as u64));
    let mut num = BigRational::one();
    for a in &params.upper {
        num *= pochhammer(a, first);
    }
    let den = gamma(lower[0] + first as i64) * gamma(lower[1] + first as i64) * BigInt::from(factorial(first));
    let mut term = num / BigRational::from_integer(den);
    let mut sum = term.clone();
    for k in first + 1..=last {
        let shift = int(k as i64 - 1);
        let mut ratio = BigRational::one();
        for a in &params.upper {
            ratio *= a + &shift;
        }
        let den = (lower[0] + k as i64 - 1) * (lower[1] + k as i64 - 1) * k as i64;
        term = term * ratio / int(den);
        sum += &term;
    }
    Ok(sum)
}
