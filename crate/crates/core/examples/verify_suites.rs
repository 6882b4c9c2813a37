use clebsch_binom::verify::{run_backend_agreement, run_degenerate_identity, run_distribution_identities};

fn main() {
    let reports = [run_backend_agreement(3), run_degenerate_identity(6), run_distribution_identities(12)];
    for r in &reports {
        println!("{:<28} {:>6} cases  {} failures", r.suite_name, r.cases_run, r.failure_count);
    }
    let ok = reports.iter().all(|r| r.passed());
    std::process::exit(if ok { 0 } else { 1 });
}
