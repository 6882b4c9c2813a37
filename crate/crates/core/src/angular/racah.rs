use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::angular::CgLabels;
use crate::exact::{binomial_i, SignedSqrtRational};

/// `gamma = alpha + beta`, triangle condition and integrality of `a + b + c`.
pub fn selection_rules_satisfied(labels: &CgLabels) -> bool {
    let [ta, talpha, tb, tbeta, tc, tgamma] = labels.twice();
    tgamma == talpha + tbeta && (ta - tb).abs() <= tc && tc <= ta + tb && (ta + tb + tc) % 2 == 0
}

/// Integer combinations of the labels used by the binomial form.
struct Combos {
    abc: i64,       // a + b - c
    amb: i64,       // a - b + c
    bma: i64,       // -a + b + c
    sum1: i64,      // a + b + c + 1
    two_a: i64,
    two_b: i64,
    two_c: i64,
    a_m_alpha: i64, // a - alpha
    b_p_beta: i64,  // b + beta
    b_m_beta: i64,  // b - beta
    c_m_gamma: i64, // c - gamma
}

impl Combos {
    fn new(labels: &CgLabels) -> Self {
        let [ta, talpha, tb, tbeta, tc, tgamma] = labels.twice();
        Combos {
            abc: (ta + tb - tc) / 2,
            amb: (ta - tb + tc) / 2,
            bma: (-ta + tb + tc) / 2,
            sum1: (ta + tb + tc) / 2 + 1,
            two_a: ta,
            two_b: tb,
            two_c: tc,
            a_m_alpha: (ta - talpha) / 2,
            b_p_beta: (tb + tbeta) / 2,
            b_m_beta: (tb - tbeta) / 2,
            c_m_gamma: (tc - tgamma) / 2,
        }
    }

    /// `[lo, hi]` over which all three binomials of the z-sum are in support.
    fn z_range(&self) -> (i64, i64) {
        let lo = 0.max(self.a_m_alpha - self.amb).max(self.b_p_beta - self.bma);
        let hi = self.abc.min(self.a_m_alpha).min(self.b_p_beta);
        (lo, hi)
    }
}

/// The individual terms `(-1)^z C(a+b-c, z) C(a-b+c, a-alpha-z) C(b+c-a, b+beta-z)`
/// of the Racah z-sum, for every `z` in the support range.
///
/// Empty when the selection rules fail.
pub fn racah_z_terms(labels: &CgLabels) -> Vec<(i64, BigInt)> {
    if !selection_rules_satisfied(labels) {
        return Vec::new();
    }
    let k = Combos::new(labels);
    let (lo, hi) = k.z_range();
    (lo..=hi)
        .map(|z| {
            let t = binomial_i(k.abc, z) * binomial_i(k.amb, k.a_m_alpha - z) * binomial_i(k.bma, k.b_p_beta - z);
            (z, if z % 2 == 0 { t } else { -t })
        })
        .collect()
}

/// Clebsch-Gordan coefficient from the binomial (Racah-Shimpuku) form
///
/// ```text
/// C = delta(gamma, alpha+beta)
///     * sqrt[ C(2a,a+b-c) C(2b,a+b-c)
///             / (C(a+b+c+1,a+b-c) C(2a,a-alpha) C(2b,b-beta) C(2c,c-gamma)) ]
///     * sum_z (-1)^z C(a+b-c,z) C(a-b+c,a-alpha-z) C(b+c-a,b+beta-z)
/// ```
pub fn cg_racah(labels: &CgLabels) -> SignedSqrtRational {
    if !selection_rules_satisfied(labels) {
        return SignedSqrtRational::zero();
    }
    let sum: BigInt = racah_z_terms(labels).into_iter().map(|(_, t)| t).sum();
    if sum.is_zero() {
        return SignedSqrtRational::zero();
    }
    let k = Combos::new(labels);
    let num = binomial_i(k.two_a, k.abc) * binomial_i(k.two_b, k.abc);
    let den = binomial_i(k.sum1, k.abc)
        * binomial_i(k.two_a, k.a_m_alpha)
        * binomial_i(k.two_b, k.b_m_beta)
        * binomial_i(k.two_c, k.c_m_gamma);
    let sign = if sum.is_negative() { -1 } else { 1 };
    let radicand = BigRational::new(&sum * &sum * num, den);
    SignedSqrtRational::new(sign, radicand).expect("radicand is nonnegative")
}
