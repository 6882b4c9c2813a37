//! Stretched coefficients are ratios of binomials and need no sum.

use clebsch_binom::angular::{cg_racah, racah_z_terms, DegenerateLabels};
use clebsch_binom::exact::binomial;

fn main() {
    let (l1, l2) = (4, 3);
    println!("l1 = {l1}, l2 = {l2}");
    for k1 in 0..=l1 {
        for k2 in 0..=l2 {
            let d = DegenerateLabels::new(l1, k1, l2, k2).unwrap();
            let v = cg_racah(&d.to_cg_labels());
            let terms = racah_z_terms(&d.to_cg_labels());
            println!(
                "k1={k1} k2={k2}  {v}  C({l1},{k1})C({l2},{k2})/C({},{}) = {}*{}/{}  z-terms={}",
                d.l(),
                d.k(),
                binomial(l1, k1 as i64),
                binomial(l2, k2 as i64),
                binomial(d.l(), d.k() as i64),
                terms.len()
            );
        }
    }
}
