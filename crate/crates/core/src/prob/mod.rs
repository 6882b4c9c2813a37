//! Hypergeometric and binomial distributions over exact rationals.

mod binomial;
mod hypergeom;
mod limit;

pub use binomial::{binomial_convolve, binomial_pmf, binomial_pmf_table, conditional_probability, BinomialParams};
pub use hypergeom::{
    hypergeom_mean, hypergeom_mgf, hypergeom_pgf, hypergeom_pmf, hypergeom_pmf_table, hypergeom_variance,
    HypergeomParams,
};
pub use limit::binomial_limit_tv;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// A finite distribution: strictly increasing outcomes with nonnegative
/// probabilities summing to exactly one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PmfTable {
    entries: Vec<(i64, BigRational)>,
}

impl PmfTable {
    pub fn new(entries: Vec<(i64, BigRational)>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::InvalidParams("pmf outcomes must be strictly increasing".into()));
        }
        if entries.iter().any(|(_, p)| p.is_negative()) {
            return Err(Error::InvalidParams("negative probability".into()));
        }
        let total: BigRational = entries.iter().map(|(_, p)| p).sum();
        if !total.is_one() {
            return Err(Error::InvalidParams(format!("probabilities sum to {total}, not 1")));
        }
        Ok(PmfTable { entries })
    }

    pub fn entries(&self) -> &[(i64, BigRational)] {
        &self.entries
    }

    pub fn probability(&self, x: i64) -> BigRational {
        self.entries
            .binary_search_by_key(&x, |(k, _)| *k)
            .map(|i| self.entries[i].1.clone())
            .unwrap_or_else(|_| BigRational::zero())
    }

    /// `sum_x x^power P(x)`
    pub fn raw_moment(&self, power: u32) -> BigRational {
        self.entries
            .iter()
            .map(|(x, p)| p * BigRational::from_integer(num_bigint::BigInt::from(*x).pow(power)))
            .sum()
    }

    /// `1/2 sum_x |P(x) - Q(x)|` over the union of supports.
    pub fn total_variation(&self, other: &PmfTable) -> BigRational {
        let mut outcomes: Vec<i64> = self.entries.iter().chain(&other.entries).map(|(x, _)| *x).collect();
        outcomes.sort_unstable();
        outcomes.dedup();
        let sum: BigRational = outcomes.into_iter().map(|x| (self.probability(x) - other.probability(x)).abs()).sum();
        sum / BigRational::from_integer(2.into())
    }
}

#[derive(Serialize)]
struct EntryRepr {
    outcome: i64,
    num: String,
    den: String,
}

impl Serialize for PmfTable {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.entries.iter().map(|(x, p)| EntryRepr {
            outcome: *x,
            num: p.numer().to_string(),
            den: p.denom().to_string(),
        }))
    }
}
