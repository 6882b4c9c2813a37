// Build a coupled state by repeated lowering and print each amplitude.

use clebsch_binom::angular::{cg_ladder_stretched, HalfInt};

fn main() {
    let a = HalfInt::from_twice(3);
    let b = HalfInt::from_int(1);
    for steps in 0..=3 {
        let state = cg_ladder_stretched(a, b, steps).unwrap();
        println!("|{}, {}>  norm^2 = {}", a + b, a + b - HalfInt::from_int(steps as i64), state.norm_squared());
        for ((m1, m2), amp) in state.entries() {
            println!("    ({m1:>4}, {m2:>4})  {amp}");
        }
    }
}
