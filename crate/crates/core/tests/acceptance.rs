//! Exit criteria. Each test prints one `criterion N [PASS|FAIL]` line; run
//! with `cargo test --test acceptance -- --nocapture --test-threads 1` to see
//! them in order.

use clebsch_binom::angular::{
    cg_3f2, cg_degenerate_squared, cg_ladder_stretched, cg_racah, racah_z_terms, CgLabels,
    DegenerateLabels, HalfInt,
};
use clebsch_binom::cli;
use clebsch_binom::exact::{binomial, parse_decimal, ratio, sqrt_to_decimal, BigRational};
use clebsch_binom::prob::{
    binomial_convolve, binomial_limit_tv, binomial_pmf, conditional_probability, hypergeom_mean, hypergeom_pgf,
    hypergeom_pmf_table, hypergeom_variance, BinomialParams, HypergeomParams,
};
use clebsch_binom::verify::Kernels;
use num_traits::{One, Signed, Zero};

fn record(n: u32, name: &str, failures: &[String], detail: String) {
    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {n} [{verdict}] {name}: {detail}");
    for f in failures.iter().take(10) {
        println!("    {f}");
    }
    assert!(failures.is_empty(), "criterion {n} failed with {} failures", failures.len());
}

const MAX_TWICE_AB: i64 = 5;
const MAX_L: u64 = 10;
const MAX_TWICE_LADDER: i64 = 12;
const MAX_N3: u64 = 30;
const ORTHOGONALITY_DIGITS: u32 = 50;

#[test]
fn criterion_01_backend_equivalence() {
    let mut failures = Vec::new();
    let cases = CgLabels::enumerate(MAX_TWICE_AB);
    for labels in &cases {
        let r = cg_racah(labels);
        match cg_3f2(labels) {
            Ok(v) if v == r => {}
            other => failures.push(format!("{labels}: racah {r} vs 3f2 {other:?}")),
        }
    }
    record(1, "racah = 3f2 exactly, 2a, 2b <= 5", &failures, format!("{} label sets", cases.len()));
}

#[test]
fn criterion_02_degenerate_identity() {
    let mut failures = Vec::new();
    let cases = DegenerateLabels::enumerate(MAX_L);
    for d in &cases {
        let v = cg_racah(&d.to_cg_labels());
        let closed = BigRational::new(
            (binomial(d.l1(), d.k1() as i64) * binomial(d.l2(), d.k2() as i64)).into(),
            binomial(d.l(), d.k() as i64).into(),
        );
        if v.radicand() != &closed || (!v.is_zero() && v.sign() != 1) {
            failures.push(format!("{d}: got {v}, expected +sqrt({closed})"));
        }
    }
    record(2, "stretched radicand = C(l1,k1)C(l2,k2)/C(l,k), sign +1", &failures, format!("{} label sets", cases.len()));
}

#[test]
fn criterion_03_ladder_oracle() {
    let mut failures = Vec::new();
    let mut states = 0;
    for ta in 0..=MAX_TWICE_LADDER {
        for tb in 0..=MAX_TWICE_LADDER - ta {
            let (a, b) = (HalfInt::from_twice(ta), HalfInt::from_twice(tb));
            let c = a + b;
            for steps in 0..=(ta + tb) as u64 {
                states += 1;
                let state = cg_ladder_stretched(a, b, steps).expect("steps in range");
                let gamma = c - HalfInt::from_int(steps as i64);
                for talpha in (-ta..=ta).step_by(2) {
                    let alpha = HalfInt::from_twice(talpha);
                    let beta = gamma - alpha;
                    if beta.abs() > b {
                        continue;
                    }
                    let labels = CgLabels::new(a, alpha, b, beta, c, gamma).unwrap();
                    let expect = cg_racah(&labels);
                    let got = state.amplitude(alpha, beta);
                    if got != expect {
                        failures.push(format!("{labels}: ladder {got} vs racah {expect}"));
                    }
                }
                // nothing outside the gamma = alpha + beta slice
                for &(m1, m2) in state.entries().keys() {
                    if m1 + m2 != gamma {
                        failures.push(format!("a={a}, b={b}, steps={steps}: stray entry ({m1}, {m2})"));
                    }
                }
            }
        }
    }
    record(3, "ladder amplitudes = racah at c = a + b, 2(a+b) <= 12", &failures, format!("{states} lowered states"));
}

#[test]
fn criterion_04_degenerate_collapse() {
    let mut failures = Vec::new();
    let cases = DegenerateLabels::enumerate(MAX_L);
    for d in &cases {
        let nonzero: Vec<i64> = racah_z_terms(&d.to_cg_labels())
            .into_iter()
            .filter(|(_, t)| !t.is_zero())
            .map(|(z, _)| z)
            .collect();
        if nonzero != [0] {
            failures.push(format!("{d}: nonzero z terms at {nonzero:?}"));
        }
    }
    record(4, "z-sum has a single nonzero term, at z = 0", &failures, format!("{} label sets", cases.len()));
}

#[test]
fn criterion_05_normalization_and_orthogonality() {
    let mut failures = Vec::new();
    let tolerance = parse_decimal("1e-40").unwrap();
    let mut norm_cases = 0;
    let mut orth_cases = 0;
    let mut worst = BigRational::zero();
    for ta in 0..=MAX_TWICE_AB {
        for tb in 0..=MAX_TWICE_AB {
            let (a, b) = (HalfInt::from_twice(ta), HalfInt::from_twice(tb));
            let cs: Vec<i64> = ((ta - tb).abs()..=ta + tb).step_by(2).collect();
            let tgammas: Vec<i64> = (-(ta + tb)..=ta + tb).step_by(2).collect();
            for &tgamma in &tgammas {
                let gamma = HalfInt::from_twice(tgamma);
                // coefficients for each admissible c on this gamma slice
                let column = |tc: i64| -> Vec<_> {
                    (-ta..=ta)
                        .step_by(2)
                        .filter_map(|talpha| {
                            let alpha = HalfInt::from_twice(talpha);
                            let beta = gamma - alpha;
                            (beta.abs() <= b).then(|| {
                                cg_racah(&CgLabels::new(a, alpha, b, beta, HalfInt::from_twice(tc), gamma).unwrap())
                            })
                        })
                        .collect()
                };
                let valid: Vec<i64> = cs.iter().copied().filter(|&tc| tgamma.abs() <= tc).collect();
                for &tc in &valid {
                    norm_cases += 1;
                    let total: BigRational = column(tc).iter().map(|v| v.radicand().clone()).sum();
                    if !total.is_one() {
                        failures.push(format!("a={a}, b={b}, 2c={tc}, gamma={gamma}: norm {total}"));
                    }
                }
                for (i, &tc) in valid.iter().enumerate() {
                    for &tc2 in &valid[i + 1..] {
                        orth_cases += 1;
                        let sum: BigRational = column(tc)
                            .iter()
                            .zip(column(tc2).iter())
                            .map(|(x, y)| {
                                parse_decimal(&sqrt_to_decimal(x, ORTHOGONALITY_DIGITS)).unwrap()
                                    * parse_decimal(&sqrt_to_decimal(y, ORTHOGONALITY_DIGITS)).unwrap()
                            })
                            .sum();
                        if sum.abs() > worst {
                            worst = sum.abs();
                        }
                        if sum.abs() >= tolerance {
                            failures.push(format!("a={a}, b={b}, 2c={tc} vs {tc2}, gamma={gamma}: overlap {sum}"));
                        }
                    }
                }
            }
        }
    }
    record(
        5,
        "sum of radicands = 1; cross-c overlaps < 1e-40 at 50 digits",
        &failures,
        format!(
            "{norm_cases} normalisation sums, {orth_cases} overlaps, worst |overlap| = {}",
            clebsch_binom::exact::rational_to_decimal(&worst, 3)
        ),
    );
}

#[test]
fn criterion_06_distribution_identities() {
    let mut failures = Vec::new();
    let mut cases = 0;
    let one = BigRational::one();
    for n3 in 1..=MAX_N3 {
        for n1 in 0..=n3 {
            for n2 in 0..=n3 {
                cases += 1;
                let p = HypergeomParams::new(n1, n2, n3).unwrap();
                let table = hypergeom_pmf_table(&p);
                let total: BigRational = table.entries().iter().map(|(_, q)| q).sum();
                if !total.is_one() {
                    failures.push(format!("({n1},{n2},{n3}): total {total}"));
                }
                let mean = table.raw_moment(1);
                if hypergeom_mean(&p).unwrap() != mean {
                    failures.push(format!("({n1},{n2},{n3}): mean"));
                }
                if n3 >= 2 {
                    // E[X(X-1)] + E[X] - E[X]^2
                    let factorial_moment = table.raw_moment(2) - &mean;
                    let var = factorial_moment + &mean - &mean * &mean;
                    if hypergeom_variance(&p).unwrap() != var {
                        failures.push(format!("({n1},{n2},{n3}): variance"));
                    }
                }
                if n3 + 1 > n1 + n2 && hypergeom_pgf(&p, &one).unwrap() != one {
                    failures.push(format!("({n1},{n2},{n3}): G(1)"));
                }
            }
        }
    }
    record(6, "pmf total, mean, variance, G(1) exact for n3 <= 30", &failures, format!("{cases} parameter sets"));
}

#[test]
fn criterion_07_convolution_closure() {
    let mut failures = Vec::new();
    let mut cases = 0;
    for p in [ratio(1, 2), ratio(1, 3), ratio(3, 10)] {
        for l1 in 0..=12u64 {
            for l2 in 0..=12u64 {
                cases += 1;
                let a = BinomialParams::new(l1, p.clone()).unwrap();
                let b = BinomialParams::new(l2, p.clone()).unwrap();
                let whole = BinomialParams::new(l1 + l2, p.clone()).unwrap();
                let table = binomial_convolve(&a, &b).unwrap();
                for r in -1..=(l1 + l2) as i64 + 1 {
                    if table.probability(r) != binomial_pmf(&whole, r) {
                        failures.push(format!("B({l1},{p}) * B({l2},{p}) at {r}"));
                    }
                }
            }
        }
    }
    record(7, "B(l1,p) * B(l2,p) = B(l1+l2,p) pointwise", &failures, format!("{cases} pairs"));
}

#[test]
fn criterion_08_probabilistic_identity() {
    let mut failures = Vec::new();
    let cases = DegenerateLabels::enumerate(MAX_L);
    let ps = [ratio(1, 2), ratio(1, 3), ratio(3, 10), ratio(99, 100)];
    for d in &cases {
        let closed = cg_degenerate_squared(d);
        for p in &ps {
            let cond = conditional_probability(d, p).unwrap();
            if cond != closed {
                failures.push(format!("{d}, p={p}: {cond} vs {closed}"));
            }
        }
        if cg_racah(&d.to_cg_labels()).radicand() != &closed {
            failures.push(format!("{d}: racah radicand differs"));
        }
    }
    record(8, "conditional probability = squared stretched coefficient, p-invariant", &failures, format!("{} label sets x {} p", cases.len(), ps.len()));
}

/// Exact distance at the largest population, from the first exact run
/// (and an independent `fractions.Fraction` recomputation).
const FROZEN_FINAL_TV: (&str, &str) = ("234447966584791061", "3901690498045051142112");

#[test]
fn criterion_09_binomial_limit() {
    let mut failures = Vec::new();
    let n3s: Vec<u64> = (0..=5).map(|i| 40 * 4u64.pow(i)).collect();
    let tv = binomial_limit_tv(&ratio(1, 2), 10, &n3s).unwrap();
    for w in tv.windows(2) {
        if w[1].1 >= w[0].1 {
            failures.push(format!("not decreasing: tv({}) = {} >= tv({}) = {}", w[1].0, w[1].1, w[0].0, w[0].1));
        }
    }
    let last = &tv.last().unwrap().1;
    let frozen = BigRational::new(FROZEN_FINAL_TV.0.parse().unwrap(), FROZEN_FINAL_TV.1.parse().unwrap());
    if last != &frozen {
        failures.push(format!("final tv {last} differs from frozen {frozen}"));
    }
    if last >= &parse_decimal("1e-3").unwrap() {
        failures.push(format!("final tv {last} not below 1e-3"));
    }
    let anchor = binomial_limit_tv(&ratio(1, 2), 2, &[10]).unwrap();
    if anchor[0].1 != ratio(1, 18) {
        failures.push(format!("anchor tv(1/2, 2, 10) = {}", anchor[0].1));
    }
    record(
        9,
        "hypergeometric -> binomial, strictly decreasing tv",
        &failures,
        format!("final tv = {}", clebsch_binom::exact::rational_to_decimal(last, 6)),
    );
}

fn run_cli(kernels: &Kernels, args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("clebsch-binom").chain(args.iter().copied());
    let code = cli::run_with(kernels, argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

fn corrupted_racah(labels: &CgLabels) -> clebsch_binom::exact::SignedSqrtRational {
    let v = cg_racah(labels);
    if labels.twice() == [1, 1, 1, -1, 2, 0] {
        -v
    } else {
        v
    }
}

#[test]
fn criterion_10_cli_contract() {
    let mut failures = Vec::new();
    let k = Kernels::default();
    let examples: &[(&[&str], i32)] = &[
        (&["cg", "1/2", "1/2", "1/2", "-1/2", "1", "0", "--backend", "all"], 0),
        (&["cg", "1/2", "1/2", "1/2", "1/2", "1", "0"], 0),
        (&["cg", "1/2", "3/2", "1/2", "-1/2", "1", "0"], 2),
        (&["3jm", "1", "1", "1", "-1", "0", "0", "--backend", "all"], 0),
        (&["dist", "hypergeom-pmf", "--n1", "5", "--n2", "2", "--n3", "10", "--x", "1"], 0),
        (&["dist", "conditional", "--l1", "2", "--k1", "1", "--l2", "2", "--k2", "1", "--p", "1/3"], 0),
        (&["dist", "mean", "--n1", "5", "--n2", "4", "--n3", "10"], 0),
        (&["limit", "--p", "1/2", "--n2", "2", "--n3", "10"], 0),
        (&["limit", "--p", "1/2", "--n2", "0", "--n3", "10"], 0),
        (&["limit", "--p", "1/3", "--n2", "2", "--n3", "10"], 2),
    ];
    for (args, want_code) in examples {
        let (code, first) = run_cli(&k, args);
        if code != *want_code {
            failures.push(format!("{args:?}: exit {code}, expected {want_code}"));
        }
        let parsed: serde_json::Value = serde_json::from_str(&first).unwrap();
        let record = if parsed.is_array() { parsed[0].clone() } else { parsed };
        let echo = record["command"].as_str().unwrap().to_string();
        let replay: Vec<&str> = echo.split_whitespace().collect();
        let (code2, second) = run_cli(&k, &replay);
        if code2 != code || second != first {
            failures.push(format!("{args:?}: replay of {echo:?} differs"));
        }
        let (_, third) = run_cli(&k, args);
        if third != first {
            failures.push(format!("{args:?}: output not byte-stable"));
        }
    }

    let expect_value = |args: &[&str], field: &str, num: &str, den: &str, failures: &mut Vec<String>| {
        let (_, out) = run_cli(&k, args);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let v = if v.is_array() { v[0].clone() } else { v };
        let exact = &v["exact"][field];
        if exact["num"] != num || exact["den"] != den {
            failures.push(format!("{args:?}: exact {exact}, expected {num}/{den}"));
        }
    };
    expect_value(&["cg", "1/2", "1/2", "1/2", "-1/2", "1", "0", "--backend", "all"], "radicand", "1", "2", &mut failures);
    expect_value(&["dist", "hypergeom-pmf", "--n1", "5", "--n2", "2", "--n3", "10", "--x", "1"], "rational", "5", "9", &mut failures);
    expect_value(&["dist", "conditional", "--l1", "2", "--k1", "1", "--l2", "2", "--k2", "1", "--p", "1/3"], "rational", "2", "3", &mut failures);
    expect_value(&["dist", "mean", "--n1", "5", "--n2", "4", "--n3", "10"], "rational", "2", "1", &mut failures);
    expect_value(&["limit", "--p", "1/2", "--n2", "2", "--n3", "10"], "rational", "1", "18", &mut failures);
    expect_value(&["limit", "--p", "1/2", "--n2", "0", "--n3", "10"], "rational", "0", "1", &mut failures);

    let (_, zero) = run_cli(&k, &["cg", "1/2", "1/2", "1/2", "1/2", "1", "0"]);
    if !zero.contains(r#""status":"zero""#) || !zero.contains("selection rule: gamma != alpha+beta") {
        failures.push(format!("zero example: {zero}"));
    }
    let (_, agree) = run_cli(&k, &["cg", "1/2", "1/2", "1/2", "-1/2", "1", "0", "--backend", "all"]);
    if !agree.contains(r#""agreement":true"#) {
        failures.push("agreement flag missing".into());
    }
    let (_, bad) = run_cli(&k, &["cg", "1/2", "3/2", "1/2", "-1/2", "1", "0"]);
    if !bad.contains("m out of range") {
        failures.push(format!("structural error text: {bad}"));
    }

    let verify_args = ["verify", "--max-twice-ab", "2", "--max-l", "3", "--max-n3", "6"];
    let (code, _) = run_cli(&k, &verify_args);
    if code != 0 {
        failures.push(format!("verify pass: exit {code}"));
    }
    let broken = Kernels { cg_racah: corrupted_racah, ..Kernels::default() };
    let (code, report) = run_cli(&broken, &verify_args);
    if code != 1 || !report.contains(r#""passed":false"#) {
        failures.push(format!("verify with corrupted backend: exit {code}"));
    }
    let (code, _) = run_cli(&k, &["verify", "--suite", "nonsense"]);
    if code != 2 {
        failures.push(format!("unknown suite: exit {code}"));
    }
    record(10, "CLI examples replay byte-identically; exit codes 0/1/2", &failures, format!("{} example invocations", examples.len()));
}
