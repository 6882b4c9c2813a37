//! Exhaustive identity sweeps with structured reports.
//!
//! Suites reach the mathematics only through a [`Kernels`] table of public
//! operations, so a test can swap one entry for a broken version and check
//! that the suite notices.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::angular::{
    self, racah_z_terms, CgLabels, DegenerateLabels, HalfInt, ProductStateVector,
};
use crate::error::Result;
use crate::exact::{rational_pow, ratio, SignedSqrtRational};
use crate::prob::{self, BinomialParams, HypergeomParams, PmfTable};

/// Counterexamples kept per report; the full count is still recorded.
pub const MAX_REPORTED_FAILURES: usize = 20;

/// Largest trial count in the convolution-closure sweep.
pub const CONVOLUTION_MAX_TRIALS: u64 = 12;

/// Success probabilities used by the convolution and conditioning sweeps.
pub fn sweep_probabilities() -> [BigRational; 4] {
    [ratio(1, 2), ratio(1, 3), ratio(3, 10), ratio(99, 100)]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite_name: String,
    pub parameter_ranges: String,
    pub cases_run: u64,
    pub failure_count: u64,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    fn new(name: &str, ranges: String) -> Self {
        SuiteReport {
            suite_name: name.to_string(),
            parameter_ranges: ranges,
            cases_run: 0,
            failure_count: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    fn case(&mut self) {
        self.cases_run += 1;
    }

    fn fail(&mut self, input: impl ToString, expected: impl ToString, actual: impl ToString) {
        self.failure_count += 1;
        if self.failures.len() < MAX_REPORTED_FAILURES {
            self.failures.push(Failure {
                input: input.to_string(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    fn check<T: PartialEq + std::fmt::Display>(&mut self, input: impl ToString, expected: &T, actual: &T) {
        if expected != actual {
            self.fail(input, expected, actual);
        }
    }
}

fn show<T: std::fmt::Display>(r: &Result<T>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

/// The operations a suite is allowed to call.
#[derive(Clone, Copy)]
pub struct Kernels {
    pub cg_racah: fn(&CgLabels) -> SignedSqrtRational,
    pub cg_3f2: fn(&CgLabels) -> Result<SignedSqrtRational>,
    pub cg_ladder_stretched: fn(HalfInt, HalfInt, u64) -> Result<ProductStateVector>,
    pub cg_degenerate_squared: fn(&DegenerateLabels) -> BigRational,
    pub conditional_probability: fn(&DegenerateLabels, &BigRational) -> Result<BigRational>,
    pub hypergeom_pmf_table: fn(&HypergeomParams) -> PmfTable,
    pub hypergeom_pgf: fn(&HypergeomParams, &BigRational) -> Result<BigRational>,
    pub hypergeom_mean: fn(&HypergeomParams) -> Result<BigRational>,
    pub hypergeom_variance: fn(&HypergeomParams) -> Result<BigRational>,
    pub binomial_pmf: fn(&BinomialParams, i64) -> BigRational,
    pub binomial_convolve: fn(&BinomialParams, &BinomialParams) -> Result<PmfTable>,
}

impl Default for Kernels {
    fn default() -> Self {
        Kernels {
            cg_racah: angular::cg_racah,
            cg_3f2: angular::cg_3f2,
            cg_ladder_stretched: angular::cg_ladder_stretched,
            cg_degenerate_squared: angular::cg_degenerate_squared,
            conditional_probability: prob::conditional_probability,
            hypergeom_pmf_table: prob::hypergeom_pmf_table,
            hypergeom_pgf: prob::hypergeom_pgf,
            hypergeom_mean: prob::hypergeom_mean,
            hypergeom_variance: prob::hypergeom_variance,
            binomial_pmf: prob::binomial_pmf,
            binomial_convolve: prob::binomial_convolve,
        }
    }
}

/// Binomial-sum and `3F2` backends agree exactly on every label set from
/// [`CgLabels::enumerate`].
pub fn run_backend_agreement(max_twice_ab: i64) -> SuiteReport {
    run_backend_agreement_with(&Kernels::default(), max_twice_ab)
}

pub fn run_backend_agreement_with(k: &Kernels, max_twice_ab: i64) -> SuiteReport {
    let mut report = SuiteReport::new(
        "agreement",
        format!("2a, 2b <= {max_twice_ab}; 2c <= 2a + 2b + 2; all valid alpha, beta, gamma"),
    );
    for labels in CgLabels::enumerate(max_twice_ab) {
        report.case();
        let racah = (k.cg_racah)(&labels);
        match (k.cg_3f2)(&labels) {
            Ok(v) => report.check(labels, &racah, &v),
            Err(e) => report.fail(labels, racah, format!("error: {e}")),
        }
    }
    report
}

/// Stretched coefficients: binomial-sum radicand equals the three-binomial
/// ratio and the conditional probability at `p = 1/3`, the sign is `+1`, the
/// z-sum collapses to its `z = 0` term, and the ladder construction agrees.
pub fn run_degenerate_identity(max_l: u64) -> SuiteReport {
    run_degenerate_identity_with(&Kernels::default(), max_l)
}

pub fn run_degenerate_identity_with(k: &Kernels, max_l: u64) -> SuiteReport {
    let mut report = SuiteReport::new("degenerate", format!("l1, l2 <= {max_l}; all k1, k2; p = 1/3"));
    let p = ratio(1, 3);
    let mut ladders: HashMap<(u64, u64, u64), Result<ProductStateVector>> = HashMap::new();
    for d in DegenerateLabels::enumerate(max_l) {
        report.case();
        let labels = d.to_cg_labels();
        let racah = (k.cg_racah)(&labels);
        let closed = (k.cg_degenerate_squared)(&d);
        report.check(format!("{d} radicand"), &closed, racah.radicand());
        if racah.sign() != 1 {
            report.fail(format!("{d} sign"), 1, racah.sign());
        }
        let cond = (k.conditional_probability)(&d, &p);
        if cond.as_ref() != Ok(&closed) {
            report.fail(format!("{d} conditional probability"), &closed, show(&cond));
        }
        let nonzero: Vec<i64> =
            racah_z_terms(&labels).into_iter().filter(|(_, t)| !t.is_zero()).map(|(z, _)| z).collect();
        if nonzero != [0] {
            report.fail(format!("{d} nonzero z terms"), "[0]", format!("{nonzero:?}"));
        }
        let state = ladders
            .entry((d.l1(), d.l2(), d.k()))
            .or_insert_with(|| (k.cg_ladder_stretched)(labels.a, labels.b, d.k()));
        match state {
            Ok(s) => report.check(format!("{d} ladder"), &racah, &s.amplitude(labels.alpha, labels.beta)),
            Err(e) => report.fail(format!("{d} ladder"), &racah, format!("error: {e}")),
        }
    }
    report
}

/// Normalisation, first two moments and the generating function of every
/// hypergeometric distribution with `n3 <= max_n3`, plus binomial
/// convolution closure.
pub fn run_distribution_identities(max_n3: u64) -> SuiteReport {
    run_distribution_identities_with(&Kernels::default(), max_n3)
}

pub fn run_distribution_identities_with(k: &Kernels, max_n3: u64) -> SuiteReport {
    let mut report = SuiteReport::new(
        "distributions",
        format!(
            "hypergeometric 1 <= n3 <= {max_n3}, all n1, n2 <= n3; \
             convolution l1, l2 <= {CONVOLUTION_MAX_TRIALS}, p in {{1/2, 1/3, 3/10}}"
        ),
    );
    let one = BigRational::one();
    let t = ratio(1, 2);
    for n3 in 1..=max_n3 {
        for n1 in 0..=n3 {
            for n2 in 0..=n3 {
                report.case();
                let params = HypergeomParams::new(n1, n2, n3).expect("sweep stays in range");
                let input = format!("hypergeom (n1={n1}, n2={n2}, n3={n3})");
                let table = (k.hypergeom_pmf_table)(&params);
                let total: BigRational = table.entries().iter().map(|(_, p)| p).sum();
                report.check(format!("{input} total"), &one, &total);
                let mean = (k.hypergeom_mean)(&params);
                let first = table.raw_moment(1);
                if mean.as_ref() != Ok(&first) {
                    report.fail(format!("{input} mean"), &first, show(&mean));
                }
                if n3 >= 2 {
                    let second = table.raw_moment(2) - &first * &first;
                    let var = (k.hypergeom_variance)(&params);
                    if var.as_ref() != Ok(&second) {
                        report.fail(format!("{input} variance"), &second, show(&var));
                    }
                }
                if n3 + 1 > n1 + n2 {
                    let at_one = (k.hypergeom_pgf)(&params, &one);
                    if at_one.as_ref() != Ok(&one) {
                        report.fail(format!("{input} G(1)"), &one, show(&at_one));
                    }
                    let poly: BigRational =
                        table.entries().iter().map(|(x, p)| p * rational_pow(&t, *x as u64)).sum();
                    let at_t = (k.hypergeom_pgf)(&params, &t);
                    if at_t.as_ref() != Ok(&poly) {
                        report.fail(format!("{input} G(1/2)"), &poly, show(&at_t));
                    }
                }
            }
        }
    }
    for p in &sweep_probabilities()[..3] {
        for l1 in 0..=CONVOLUTION_MAX_TRIALS {
            for l2 in 0..=CONVOLUTION_MAX_TRIALS {
                report.case();
                let input = format!("convolve B({l1}, {p}) * B({l2}, {p})");
                let a = BinomialParams::new(l1, p.clone()).expect("p in range");
                let b = BinomialParams::new(l2, p.clone()).expect("p in range");
                let whole = BinomialParams::new(l1 + l2, p.clone()).expect("p in range");
                match (k.binomial_convolve)(&a, &b) {
                    Ok(table) => {
                        for r in 0..=(l1 + l2) as i64 {
                            report.check(format!("{input} at {r}"), &(k.binomial_pmf)(&whole, r), &table.probability(r));
                        }
                        if table.entries().len() as u64 != l1 + l2 + 1 {
                            report.fail(format!("{input} support"), l1 + l2 + 1, table.entries().len());
                        }
                    }
                    Err(e) => report.fail(input, "table", format!("error: {e}")),
                }
            }
        }
    }
    report
}
