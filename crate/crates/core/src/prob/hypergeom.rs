use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{binomial, exp_rational};
use crate::hypseries::{eval_2f1, SeriesParams2F1};
use crate::prob::PmfTable;

/// Draw `n2` items without replacement from `n3`, of which `n1` are marked;
/// `X` counts the marked items drawn.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HypergeomParams {
    n1: u64,
    n2: u64,
    n3: u64,
}

impl HypergeomParams {
    pub fn new(n1: u64, n2: u64, n3: u64) -> Result<Self> {
        if n1 > n3 || n2 > n3 {
            return Err(Error::InvalidParams(format!("need n1, n2 <= n3, got ({n1}, {n2}, {n3})")));
        }
        Ok(HypergeomParams { n1, n2, n3 })
    }

    pub fn n1(&self) -> u64 {
        self.n1
    }

    pub fn n2(&self) -> u64 {
        self.n2
    }

    pub fn n3(&self) -> u64 {
        self.n3
    }

    /// `max(0, n1+n2-n3) ..= min(n1, n2)`
    pub fn support(&self) -> std::ops::RangeInclusive<i64> {
        let lo = (self.n1 + self.n2).saturating_sub(self.n3) as i64;
        let hi = self.n1.min(self.n2) as i64;
        lo..=hi
    }

    /// Lower parameter `n3 - n1 - n2 + 1` of the generating-function series.
    fn series_lower(&self) -> i64 {
        self.n3 as i64 - self.n1 as i64 - self.n2 as i64 + 1
    }
}

fn ratio_of(num: num_bigint::BigUint, den: num_bigint::BigUint) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// `C(n1, x) C(n3-n1, n2-x) / C(n3, n2)`, zero off the support.
pub fn hypergeom_pmf(params: &HypergeomParams, x: i64) -> BigRational {
    let HypergeomParams { n1, n2, n3 } = *params;
    if x < 0 || x as u64 > n2 {
        return BigRational::zero();
    }
    ratio_of(binomial(n1, x) * binomial(n3 - n1, n2 as i64 - x), binomial(n3, n2 as i64))
}

pub fn hypergeom_pmf_table(params: &HypergeomParams) -> PmfTable {
    let entries = params.support().map(|x| (x, hypergeom_pmf(params, x))).collect();
    PmfTable::new(entries).expect("hypergeometric pmf is a distribution")
}

/// `G(t) = C(n3-n1, n2)/C(n3, n2) * 2F1[-n1, -n2; n3-n1-n2+1; t]`.
pub fn hypergeom_pgf(params: &HypergeomParams, t: &BigRational) -> Result<BigRational> {
    let lower = params.series_lower();
    if lower < 1 {
        return Err(Error::UnsupportedParameterRegime(lower));
    }
    let HypergeomParams { n1, n2, n3 } = *params;
    let prefactor = ratio_of(binomial(n3 - n1, n2 as i64), binomial(n3, n2 as i64));
    let series = eval_2f1(&SeriesParams2F1::from_integers([-(n1 as i64), -(n2 as i64)], lower, t.clone()))?;
    Ok(prefactor * series)
}

/// `M(t) = sum_x P(x) e^{tx}`, which is `G(e^t)`. Exact pmf weights, with
/// each exponential carried to `digits + 5` significant digits, so the
/// result has relative error below `10^-digits`.
pub fn hypergeom_mgf(params: &HypergeomParams, t: &BigRational, digits: u32) -> Result<BigRational> {
    let lower = params.series_lower();
    if lower < 1 {
        return Err(Error::UnsupportedParameterRegime(lower));
    }
    Ok(params
        .support()
        .map(|x| hypergeom_pmf(params, x) * exp_rational(&(t * BigInt::from(x)), digits + 5))
        .sum())
}

/// `n1 n2 / n3`
pub fn hypergeom_mean(params: &HypergeomParams) -> Result<BigRational> {
    if params.n3 == 0 {
        return Err(Error::DegenerateDistribution { n3: 0, min: 1 });
    }
    Ok(BigRational::new(BigInt::from(params.n1) * params.n2, params.n3.into()))
}

/// `n1 n2 (n3-n1)(n3-n2) / (n3^2 (n3-1))`
pub fn hypergeom_variance(params: &HypergeomParams) -> Result<BigRational> {
    let HypergeomParams { n1, n2, n3 } = *params;
    if n3 < 2 {
        return Err(Error::DegenerateDistribution { n3, min: 2 });
    }
    let num = BigInt::from(n1) * n2 * (n3 - n1) * (n3 - n2);
    let den = BigInt::from(n3) * n3 * (n3 - 1);
    Ok(BigRational::new(num, den))
}
