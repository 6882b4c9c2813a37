use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::angular::{selection_rules_satisfied, CgLabels, HalfInt};
use crate::error::{Error, Result};
use crate::exact::{factorial, SignedSqrtRational};
use crate::hypseries::{eval_3f2_unit, eval_3f2_unit_regularized, SeriesParams3F2};

fn fact(n: i64) -> BigInt {
    debug_assert!(n >= 0);
    BigInt::from(factorial(n as u64))
}

/// Triangle coefficient `sqrt[(a+b-c)! (a-b+c)! (-a+b+c)! / (a+b+c+1)!]`.
pub fn delta_abc(a: HalfInt, b: HalfInt, c: HalfInt) -> Result<SignedSqrtRational> {
    let (ta, tb, tc) = (a.twice(), b.twice(), c.twice());
    let ok = ta >= 0 && tb >= 0 && tc >= 0 && (ta - tb).abs() <= tc && tc <= ta + tb && (ta + tb + tc) % 2 == 0;
    if !ok {
        return Err(Error::TriangleViolation { a: a.to_string(), b: b.to_string(), c: c.to_string() });
    }
    let num = fact((ta + tb - tc) / 2) * fact((ta - tb + tc) / 2) * fact((-ta + tb + tc) / 2);
    let den = fact((ta + tb + tc) / 2 + 1);
    SignedSqrtRational::new(1, BigRational::new(num, den))
}

/// The pieces of the `3F2` representation for labels obeying the selection rules.
struct Assembly {
    params: SeriesParams3F2,
    /// `(a+b-c)!`
    abc_fact: BigInt,
    /// `-b+c+alpha` and `-a+c-beta`; the lower parameters are these plus one.
    lower_shifted: [i64; 2],
    /// Everything under the square root: `Delta(abc)^2` times the factorial bracket.
    radicand: BigRational,
}

impl Assembly {
    fn new(labels: &CgLabels) -> Result<Self> {
        let [ta, talpha, tb, tbeta, tc, tgamma] = labels.twice();
        let half = |x: i64| x / 2;
        let delta = delta_abc(labels.a, labels.b, labels.c)?;
        let bracket = BigRational::new(
            fact(half(ta + talpha)) * fact(half(tb - tbeta)) * fact(half(tc + tgamma)) * fact(half(tc - tgamma)) * (tc + 1),
            fact(half(ta - talpha)) * fact(half(tb + tbeta)),
        );
        let x = half(-tb + tc + talpha);
        let y = half(-ta + tc - tbeta);
        let params = SeriesParams3F2::from_integers(
            [half(-ta - tb + tc), half(-ta + talpha), half(-tb - tbeta)],
            [y + 1, x + 1],
        );
        Ok(Assembly {
            params,
            abc_fact: fact(half(ta + tb - tc)),
            lower_shifted: [x, y],
            radicand: delta.radicand() * bracket,
        })
    }

    fn finish(&self, coefficient: BigRational) -> SignedSqrtRational {
        SignedSqrtRational::from_coefficient(&coefficient, &self.radicand)
    }
}

/// Clebsch-Gordan coefficient from the unit-argument `3F2` representation
///
/// ```text
/// C = delta(gamma, alpha+beta) Delta(abc) / [(a+b-c)! (-b+c+alpha)! (-a+c-beta)!]
///     * sqrt[(a+alpha)! (b-beta)! (c+gamma)! (c-gamma)! (2c+1) / ((a-alpha)! (b+beta)!)]
///     * 3F2[-a-b+c, -a+alpha, -b-beta; -a+c-beta+1, -b+c+alpha+1; 1]
/// ```
///
/// taken literally: a lower parameter that hits a pole before the series
/// terminates is reported as [`Error::PoleBeforeTermination`].
pub fn cg_3f2_literal(labels: &CgLabels) -> Result<SignedSqrtRational> {
    if !selection_rules_satisfied(labels) {
        return Ok(SignedSqrtRational::zero());
    }
    let asm = Assembly::new(labels)?;
    let series = eval_3f2_unit(&asm.params)?;
    let [x, y] = asm.lower_shifted;
    if x < 0 || y < 0 {
        // 1/(negative integer)! = 0
        return Ok(SignedSqrtRational::zero());
    }
    let coefficient = series / BigRational::from_integer(&asm.abc_fact * fact(x) * fact(y));
    Ok(asm.finish(coefficient))
}

/// Same representation as [`cg_3f2_literal`], defined for every label set.
///
/// The prefactor `1/[(-b+c+alpha)! (-a+c-beta)!]` is `1/[Gamma(b1) Gamma(b2)]`
/// for the two lower parameters, so the product with the series is the
/// regularized `3F2`, which stays finite at the poles. Where the literal
/// series is pole free the two agree term by term.
pub fn cg_3f2(labels: &CgLabels) -> Result<SignedSqrtRational> {
    match cg_3f2_literal(labels) {
        Err(Error::PoleBeforeTermination { .. }) => {
            let asm = Assembly::new(labels)?;
            let series = eval_3f2_unit_regularized(&asm.params)?;
            if series.is_zero() {
                return Ok(SignedSqrtRational::zero());
            }
            Ok(asm.finish(series / BigRational::from_integer(asm.abc_fact.clone())))
        }
        other => other,
    }
}
