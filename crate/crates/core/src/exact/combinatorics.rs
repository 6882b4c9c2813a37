use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

/// Largest `n` for which binomials are assembled from cached factorials. Above
/// this the multiplicative formula is cheaper than materialising `n!`.
const FACTORIAL_BINOMIAL_LIMIT: u64 = 256;

fn factorial_table() -> &'static RwLock<Vec<BigUint>> {
    static TABLE: OnceLock<RwLock<Vec<BigUint>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![BigUint::one()]))
}

/// `n!`, served from an append-only table that grows on demand.
///
/// Readers share the lock; growth takes the write lock, so a reader always
/// observes a complete prefix of the table.
pub fn factorial(n: u64) -> BigUint {
    let idx = n as usize;
    {
        let table = factorial_table().read().unwrap_or_else(|e| e.into_inner());
        if let Some(v) = table.get(idx) {
            return v.clone();
        }
    }
    let mut table = factorial_table().write().unwrap_or_else(|e| e.into_inner());
    while table.len() <= idx {
        let next = table.len() as u64;
        let v = table.last().expect("table is never empty") * BigUint::from(next);
        table.push(v);
    }
    table[idx].clone()
}

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::from(0u32);
    }
    let k = k as u64;
    if n <= FACTORIAL_BINOMIAL_LIMIT {
        return factorial(n) / (factorial(k) * factorial(n - k));
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= BigUint::from(n - i);
        acc /= BigUint::from(i + 1);
    }
    acc
}

/// Binomial with a signed top argument; zero for `n < 0`.
///
/// Angular-momentum formulas produce their binomial arguments as signed
/// differences of labels, so this form saves casts at every call site.
pub fn binomial_i(n: i64, k: i64) -> BigInt {
    if n < 0 {
        return BigInt::from(0);
    }
    BigInt::from(binomial(n as u64, k))
}

/// Rising factorial `(a)_k = a(a+1)...(a+k-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &BigRational, k: u64) -> BigRational {
    let mut acc = BigRational::one();
    let mut x = a.clone();
    for _ in 0..k {
        acc *= &x;
        x += BigRational::one();
    }
    acc
}
