use clebsch_binom::exact::{ratio, rational_to_decimal};
use clebsch_binom::prob::{
    binomial_convolve, hypergeom_mean, hypergeom_mgf, hypergeom_pgf, hypergeom_pmf_table, hypergeom_variance,
    BinomialParams, HypergeomParams,
};

fn main() {
    let h = HypergeomParams::new(5, 4, 12).unwrap();
    println!("hypergeometric n1=5 n2=4 n3=12");
    for (x, q) in hypergeom_pmf_table(&h).entries() {
        println!("    P({x}) = {q}");
    }
    println!("    mean     = {}", hypergeom_mean(&h).unwrap());
    println!("    variance = {}", hypergeom_variance(&h).unwrap());
    println!("    G(1/2)   = {}", hypergeom_pgf(&h, &ratio(1, 2)).unwrap());
    let m = hypergeom_mgf(&h, &ratio(1, 10), 20).unwrap();
    println!("    M(0.1)   ~ {}", rational_to_decimal(&m, 20));

    let a = BinomialParams::new(3, ratio(2, 5)).unwrap();
    let b = BinomialParams::new(2, ratio(2, 5)).unwrap();
    println!("B(3, 2/5) * B(2, 2/5)");
    for (r, q) in binomial_convolve(&a, &b).unwrap().entries() {
        println!("    P({r}) = {q}");
    }
}
