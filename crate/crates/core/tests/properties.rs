use clebsch_binom::angular::{cg_3f2, cg_racah, cg_to_3jm, three_jm_to_cg, CgLabels, DegenerateLabels, HalfInt};
use clebsch_binom::exact::{parse_decimal, ratio, sqrt_to_decimal, BigRational, SignedSqrtRational};
use clebsch_binom::prob::{conditional_probability, hypergeom_pmf_table, HypergeomParams};
use num_traits::{One, Signed};
use proptest::prelude::*;

fn labels() -> impl Strategy<Value = CgLabels> {
    (0i64..=8, 0i64..=8)
        .prop_flat_map(|(ta, tb)| {
            let tcs: Vec<i64> = ((ta - tb).abs()..=ta + tb).step_by(2).collect();
            let tas: Vec<i64> = (-ta..=ta).step_by(2).collect();
            let tbs: Vec<i64> = (-tb..=tb).step_by(2).collect();
            (Just(ta), Just(tb), prop::sample::select(tcs), prop::sample::select(tas), prop::sample::select(tbs))
        })
        .prop_filter_map("gamma outside c", |(ta, tb, tc, tal, tbe)| {
            CgLabels::from_twice([ta, tal, tb, tbe, tc, tal + tbe]).ok().filter(|_| (tal + tbe).abs() <= tc)
        })
}

proptest! {
    #[test]
    fn racah_and_series_agree(l in labels()) {
        prop_assert_eq!(cg_racah(&l), cg_3f2(&l).unwrap());
    }

    #[test]
    fn swapping_couplings_gives_phase(l in labels()) {
        let swapped = CgLabels::new(l.b, l.beta, l.a, l.alpha, l.c, l.gamma).unwrap();
        let phase = (l.a + l.b - l.c).to_int().unwrap();
        let v = cg_racah(&l);
        let expected = if phase % 2 == 0 { v } else { -v };
        prop_assert_eq!(cg_racah(&swapped), expected);
    }

    #[test]
    fn three_jm_round_trip(l in labels()) {
        let cg = cg_racah(&l);
        if let Ok(w) = cg_to_3jm(&l, &cg) {
            prop_assert_eq!(three_jm_to_cg(&l, &w).unwrap(), cg);
        }
    }

    #[test]
    fn decimal_rendering_squares_back(num in 1i64..10_000, den in 1i64..10_000, digits in 5u32..40) {
        let v = SignedSqrtRational::new(1, ratio(num, den)).unwrap();
        let d = parse_decimal(&sqrt_to_decimal(&v, digits)).unwrap();
        let err = (&d * &d - ratio(num, den)).abs();
        let bound = parse_decimal(&format!("1e-{}", digits.saturating_sub(3))).unwrap() * ratio(num, den).max(BigRational::one());
        prop_assert!(err <= bound);
    }

    #[test]
    fn conditional_is_independent_of_p(
        l1 in 0u64..8, l2 in 0u64..8, s1 in 0u64..100, s2 in 0u64..100,
        pn in 1i64..99, qn in 1i64..99,
    ) {
        let d = DegenerateLabels::new(l1, s1 % (l1 + 1), l2, s2 % (l2 + 1)).unwrap();
        prop_assert_eq!(
            conditional_probability(&d, &ratio(pn, 100)).unwrap(),
            conditional_probability(&d, &ratio(qn, 100)).unwrap()
        );
    }

    #[test]
    fn hypergeometric_pmf_is_symmetric_in_draws(n3 in 1u64..40, a in 0u64..40, b in 0u64..40) {
        let (n1, n2) = (a % (n3 + 1), b % (n3 + 1));
        let t = hypergeom_pmf_table(&HypergeomParams::new(n1, n2, n3).unwrap());
        let s = hypergeom_pmf_table(&HypergeomParams::new(n2, n1, n3).unwrap());
        prop_assert_eq!(t.entries(), s.entries());
    }
}

#[test]
fn half_integer_arithmetic() {
    assert_eq!(HalfInt::from_twice(3) + HalfInt::from_twice(1), HalfInt::from_int(2));
}
