use num_rational::BigRational;

use crate::angular::DegenerateLabels;
use crate::exact::binomial;

/// Square of the stretched coefficient: `C(l1,k1) C(l2,k2) / C(l,k)`.
pub fn cg_degenerate_squared(labels: &DegenerateLabels) -> BigRational {
    let num = binomial(labels.l1(), labels.k1() as i64) * binomial(labels.l2(), labels.k2() as i64);
    let den = binomial(labels.l(), labels.k() as i64);
    BigRational::new(num.into(), den.into())
}
