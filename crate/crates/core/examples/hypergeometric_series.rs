//! Terminating series at exact rational parameters.

use clebsch_binom::exact::ratio;
use clebsch_binom::hypseries::{eval_2f1, eval_3f2_unit, eval_3f2_unit_regularized, terms_3f2_unit, SeriesParams2F1, SeriesParams3F2};

fn main() {
    let p = SeriesParams3F2::from_integers([-3, 2, 1], [4, 2]);
    println!("terms  {:?}", terms_3f2_unit(&p).unwrap().iter().map(|t| t.to_string()).collect::<Vec<_>>());
    println!("3F2    {}", eval_3f2_unit(&p).unwrap());

    // Vandermonde: 2F1(-n, b; c; 1) = (c-b)_n / (c)_n
    let q = SeriesParams2F1::from_integers([-4, 3], 6, ratio(1, 1));
    println!("2F1    {}", eval_2f1(&q).unwrap());

    let pole = SeriesParams3F2::from_integers([-2, 1, 1], [-1, 1]);
    println!("pole   {:?}", eval_3f2_unit(&pole).err());
    println!("regularized {}", eval_3f2_unit_regularized(&pole).unwrap());
}
