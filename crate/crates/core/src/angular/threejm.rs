use num_rational::BigRational;

use crate::angular::CgLabels;
use crate::error::{Error, Result};
use crate::exact::SignedSqrtRational;

fn phase_is_even(labels: &CgLabels) -> Result<bool> {
    let twice = labels.a.twice() - labels.b.twice() + labels.gamma.twice();
    if twice % 2 != 0 {
        return Err(Error::PhaseUndefined);
    }
    Ok((twice / 2) % 2 == 0)
}

fn two_c_plus_one(labels: &CgLabels) -> BigRational {
    BigRational::from_integer((labels.c.twice() + 1).into())
}

/// The 3jm symbol `(a b c; alpha beta -gamma)` from the coupling coefficient
/// `C^{c gamma}_{a alpha, b beta}`:
/// `3jm = (-1)^(a-b+gamma) C / sqrt(2c+1)`.
pub fn cg_to_3jm(labels: &CgLabels, cg: &SignedSqrtRational) -> Result<SignedSqrtRational> {
    let scaled = cg.div_sqrt(&two_c_plus_one(labels));
    Ok(if phase_is_even(labels)? { scaled } else { -scaled })
}

/// Inverse of [`cg_to_3jm`].
pub fn three_jm_to_cg(labels: &CgLabels, three_jm: &SignedSqrtRational) -> Result<SignedSqrtRational> {
    let scaled = three_jm.mul_sqrt(&two_c_plus_one(labels));
    Ok(if phase_is_even(labels)? { scaled } else { -scaled })
}
