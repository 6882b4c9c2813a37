use clebsch_binom::exact::{ratio, rational_to_decimal};
use clebsch_binom::prob::binomial_limit_tv;

fn main() {
    let n3: Vec<u64> = (0..6).map(|i| 40 * 4u64.pow(i)).collect();
    for (n, tv) in binomial_limit_tv(&ratio(1, 2), 10, &n3).unwrap() {
        println!("n3 = {n:>6}  tv = {}", rational_to_decimal(&tv, 10));
    }
}
