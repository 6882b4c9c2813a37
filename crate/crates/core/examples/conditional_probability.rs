// P(X1 = k1 | X1 + X2 = k) for independent binomials, against the squared coefficient.

use clebsch_binom::angular::{cg_degenerate_squared, DegenerateLabels};
use clebsch_binom::exact::ratio;
use clebsch_binom::prob::conditional_probability;

fn main() {
    let d = DegenerateLabels::new(5, 2, 3, 1).unwrap();
    println!("{d}");
    println!("    squared coefficient  {}", cg_degenerate_squared(&d));
    for p in [ratio(1, 10), ratio(1, 2), ratio(7, 9)] {
        println!("    p = {p:<5} conditional  {}", conditional_probability(&d, &p).unwrap());
    }
}
