//! Evaluate one coefficient with every backend.
//!
//! cargo run --example backends -- 3/2 1/2 1 -1 5/2 -1/2

use clebsch_binom::angular::{Backend, CgLabels};
use clebsch_binom::exact::sqrt_to_decimal;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let texts: [&str; 6] = if args.len() == 6 {
        std::array::from_fn(|i| args[i].as_str())
    } else {
        ["3/2", "1/2", "1", "-1", "5/2", "-1/2"]
    };
    let labels = match CgLabels::parse(texts) {
        Ok(l) => l,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    println!("{labels}");
    for backend in Backend::ALL {
        match backend.evaluate(&labels) {
            Ok(Some(v)) => println!("{:>8}  {v}  ~ {}", backend.name(), sqrt_to_decimal(&v, 20)),
            Ok(None) => println!("{:>8}  not applicable", backend.name()),
            Err(e) => println!("{:>8}  error: {e}", backend.name()),
        }
    }
}
