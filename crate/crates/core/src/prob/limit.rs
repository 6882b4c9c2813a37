use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::prob::{binomial_pmf_table, hypergeom_pmf_table, BinomialParams, HypergeomParams};

/// Exact total variation distance between hypergeometric `(p n3, n2, n3)`
/// and binomial `(n2, p)`, for each `n3` in turn.
///
/// `p n3` must be an integer: every `n3` has to be a multiple of the
/// denominator of `p`.
pub fn binomial_limit_tv(p: &BigRational, n2: u64, n3_sequence: &[u64]) -> Result<Vec<(u64, BigRational)>> {
    if p.is_negative() || p > &BigRational::one() {
        return Err(Error::InvalidParams(format!("p = {p} is outside [0, 1]")));
    }
    let binom = binomial_pmf_table(&BinomialParams::new(n2, p.clone())?);
    n3_sequence
        .iter()
        .map(|&n3| {
            if n3 == 0 || !BigInt::from(n3).is_multiple_of(p.denom()) {
                return Err(Error::IndivisibleN3 { n3, p: p.to_string() });
            }
            let n1 = (p * BigInt::from(n3)).to_integer().to_u64().expect("p n3 <= n3 fits in u64");
            if n2 > n1.min(n3 - n1) {
                return Err(Error::SupportTooSmall { n2, n3 });
            }
            let hyper = hypergeom_pmf_table(&HypergeomParams::new(n1, n2, n3)?);
            Ok((n3, hyper.total_variation(&binom)))
        })
        .collect()
}
