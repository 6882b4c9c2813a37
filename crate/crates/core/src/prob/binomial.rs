use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::angular::DegenerateLabels;
use crate::error::{Error, Result};
use crate::exact::{binomial, rational_pow};
use crate::prob::PmfTable;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinomialParams {
    trials: u64,
    p: BigRational,
}

impl BinomialParams {
    pub fn new(trials: u64, p: BigRational) -> Result<Self> {
        if p.is_negative() || p > BigRational::one() {
            return Err(Error::InvalidParams(format!("p = {p} is outside [0, 1]")));
        }
        Ok(BinomialParams { trials, p })
    }

    pub fn trials(&self) -> u64 {
        self.trials
    }

    pub fn p(&self) -> &BigRational {
        &self.p
    }
}

/// `B(q, r, p) = C(q, r) p^r (1-p)^(q-r)`, zero for `r` outside `[0, q]`.
pub fn binomial_pmf(params: &BinomialParams, r: i64) -> BigRational {
    let q = params.trials;
    if r < 0 || r as u64 > q {
        return BigRational::zero();
    }
    let r = r as u64;
    let coeff = BigRational::from_integer(binomial(q, r as i64).into());
    coeff * rational_pow(&params.p, r) * rational_pow(&(BigRational::one() - &params.p), q - r)
}

pub fn binomial_pmf_table(params: &BinomialParams) -> PmfTable {
    let entries = (0..=params.trials as i64).map(|r| (r, binomial_pmf(params, r))).collect();
    PmfTable::new(entries).expect("binomial pmf is a distribution")
}

/// Distribution of `K1 + K2` for independent `K1 ~ a`, `K2 ~ b` sharing `p`,
/// by direct convolution of the two pmfs.
pub fn binomial_convolve(a: &BinomialParams, b: &BinomialParams) -> Result<PmfTable> {
    if a.p != b.p {
        return Err(Error::MismatchedP(a.p.to_string(), b.p.to_string()));
    }
    let left: Vec<BigRational> = (0..=a.trials as i64).map(|j| binomial_pmf(a, j)).collect();
    let right: Vec<BigRational> = (0..=b.trials as i64).map(|j| binomial_pmf(b, j)).collect();
    let mut out = vec![BigRational::zero(); left.len() + right.len() - 1];
    for (i, x) in left.iter().enumerate() {
        for (j, y) in right.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    PmfTable::new(out.into_iter().enumerate().map(|(k, v)| (k as i64, v)).collect())
}

/// `P(m1 = l1/2 - k1, m2 = l2/2 - k2 | m = l/2 - k)` for independent
/// `K1 ~ B(l1, p)`, `K2 ~ B(l2, p)`, evaluated as the quotient of pmfs.
pub fn conditional_probability(labels: &DegenerateLabels, p: &BigRational) -> Result<BigRational> {
    if !p.is_positive() || p >= &BigRational::one() {
        return Err(Error::DegenerateConditioning(p.to_string()));
    }
    let first = binomial_pmf(&BinomialParams::new(labels.l1(), p.clone())?, labels.k1() as i64);
    let second = binomial_pmf(&BinomialParams::new(labels.l2(), p.clone())?, labels.k2() as i64);
    let total = binomial_pmf(&BinomialParams::new(labels.l(), p.clone())?, labels.k() as i64);
    Ok(first * second / total)
}
