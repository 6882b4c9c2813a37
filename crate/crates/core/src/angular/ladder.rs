use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::angular::{CgLabels, HalfInt};
use crate::error::{Error, Result};
use crate::exact::SignedSqrtRational;

/// A vector in the product basis `|a, m1> (x) |b, m2>`, keyed by `(m1, m2)`.
/// Only nonzero amplitudes are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductStateVector {
    a: HalfInt,
    b: HalfInt,
    entries: BTreeMap<(HalfInt, HalfInt), SignedSqrtRational>,
}

/// `sqrt((j + m)(j - m + 1))`, the matrix element of the lowering operator
/// taking `|j, m>` to `|j, m - 1>`, as a radicand.
fn lowering_radicand(j: HalfInt, m: HalfInt) -> BigRational {
    let (tj, tm) = (j.twice(), m.twice());
    BigRational::new(((tj + tm) * (tj - tm + 2)).into(), 4.into())
}

impl ProductStateVector {
    /// `|a, a> (x) |b, b>`.
    pub fn top(a: HalfInt, b: HalfInt) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert((a, b), SignedSqrtRational::one());
        ProductStateVector { a, b, entries }
    }

    pub fn entries(&self) -> &BTreeMap<(HalfInt, HalfInt), SignedSqrtRational> {
        &self.entries
    }

    /// Amplitude of `|a, m1> (x) |b, m2>`; zero when absent.
    pub fn amplitude(&self, m1: HalfInt, m2: HalfInt) -> SignedSqrtRational {
        self.entries.get(&(m1, m2)).cloned().unwrap_or_else(SignedSqrtRational::zero)
    }

    pub fn norm_squared(&self) -> BigRational {
        self.entries.values().map(|v| v.radicand().clone()).sum()
    }

    /// Applies `L1^- + L2^-`. Both routes into a given `(m1, m2)` carry
    /// commensurable radicals, so the sum stays exact.
    pub fn lower(&self) -> Result<Self> {
        let mut out: BTreeMap<(HalfInt, HalfInt), SignedSqrtRational> = BTreeMap::new();
        let step = HalfInt::from_int(1);
        for (&(m1, m2), amp) in &self.entries {
            let moves = [
                (m1 - step, m2, lowering_radicand(self.a, m1)),
                (m1, m2 - step, lowering_radicand(self.b, m2)),
            ];
            for (n1, n2, r) in moves {
                if r.is_zero() {
                    continue;
                }
                let contribution = amp * &SignedSqrtRational::new(1, r)?;
                let slot = out.entry((n1, n2)).or_insert_with(SignedSqrtRational::zero);
                *slot = slot.checked_add(&contribution)?;
            }
        }
        out.retain(|_, v| !v.is_zero());
        Ok(ProductStateVector { a: self.a, b: self.b, entries: out })
    }

    /// Rescales to unit norm. The zero vector is returned unchanged.
    pub fn normalized(&self) -> Self {
        let norm = self.norm_squared();
        if norm.is_zero() || norm.is_one() {
            return self.clone();
        }
        let entries = self.entries.iter().map(|(k, v)| (*k, v.div_sqrt(&norm))).collect();
        ProductStateVector { a: self.a, b: self.b, entries }
    }
}

/// Builds `|c = a+b, gamma = a+b-steps>` from the stretched top state by
/// repeated lowering with exact renormalisation. The amplitudes are the
/// coefficients `C^{c gamma}_{a alpha, b beta}` for `c = a + b`.
pub fn cg_ladder_stretched(a: HalfInt, b: HalfInt, steps: u64) -> Result<ProductStateVector> {
    if a.twice() < 0 || b.twice() < 0 {
        return Err(Error::InvalidLabels(format!("negative angular momentum: a = {a}, b = {b}")));
    }
    let max = (a.twice() + b.twice()) as u64;
    if steps > max {
        return Err(Error::StepsOutOfRange { steps, max });
    }
    let mut state = ProductStateVector::top(a, b);
    for _ in 0..steps {
        state = state.lower()?.normalized();
    }
    Ok(state)
}

/// The ladder construction as a coefficient backend. `None` when `c != a + b`,
/// where the stretched construction does not apply.
pub fn cg_ladder(labels: &CgLabels) -> Result<Option<SignedSqrtRational>> {
    if labels.c != labels.a + labels.b {
        return Ok(None);
    }
    if labels.gamma != labels.alpha + labels.beta {
        return Ok(Some(SignedSqrtRational::zero()));
    }
    let steps = (labels.c - labels.gamma).to_int().expect("c - gamma is integral for valid labels") as u64;
    let state = cg_ladder_stretched(labels.a, labels.b, steps)?;
    Ok(Some(state.amplitude(labels.alpha, labels.beta)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    fn h(t: i64) -> HalfInt {
        HalfInt::from_twice(t)
    }

    #[test]
    fn one_step_for_two_spin_halves() {
        let s = cg_ladder_stretched(h(1), h(1), 1).unwrap();
        let half = SignedSqrtRational::new(1, ratio(1, 2)).unwrap();
        assert_eq!(s.entries().len(), 2);
        assert_eq!(s.amplitude(h(1), h(-1)), half);
        assert_eq!(s.amplitude(h(-1), h(1)), half);
    }

    #[test]
    fn zero_steps_is_top_state() {
        let s = cg_ladder_stretched(h(3), h(4), 0).unwrap();
        assert_eq!(s, ProductStateVector::top(h(3), h(4)));
    }

    #[test]
    fn full_depth_reaches_bottom_state() {
        let s = cg_ladder_stretched(h(2), h(1), 3).unwrap();
        assert_eq!(s.entries().len(), 1);
        assert_eq!(s.amplitude(h(-2), h(-1)), SignedSqrtRational::one());
        assert!(matches!(cg_ladder_stretched(h(2), h(1), 4), Err(Error::StepsOutOfRange { steps: 4, max: 3 })));
    }

    #[test]
    fn every_step_is_normalized() {
        for steps in 0..=6 {
            assert!(cg_ladder_stretched(h(3), h(3), steps).unwrap().norm_squared().is_one());
        }
    }

    #[test]
    fn backend_wrapper() {
        let l = CgLabels::from_twice([1, 1, 1, -1, 2, 0]).unwrap();
        assert_eq!(cg_ladder(&l).unwrap(), Some(SignedSqrtRational::new(1, ratio(1, 2)).unwrap()));
        let l = CgLabels::from_twice([1, 1, 1, -1, 0, 0]).unwrap();
        assert_eq!(cg_ladder(&l).unwrap(), None);
        let l = CgLabels::from_twice([1, 1, 1, 1, 2, 0]).unwrap();
        assert!(cg_ladder(&l).unwrap().unwrap().is_zero());
    }
}
