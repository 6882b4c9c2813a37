use serde::{Deserialize, Serialize};

use crate::angular::HalfInt;
use crate::error::{Error, Result};

/// The six labels of a coupling coefficient `C^{c gamma}_{a alpha, b beta}`.
///
/// Construction checks only the structural invariants (ranges and parity).
/// Selection-rule violations are legal labels whose coefficient is zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CgLabels {
    pub a: HalfInt,
    pub alpha: HalfInt,
    pub b: HalfInt,
    pub beta: HalfInt,
    pub c: HalfInt,
    pub gamma: HalfInt,
}

fn check_projection(name: &str, j: HalfInt, jname: &str, m: HalfInt) -> Result<()> {
    if j.twice() < 0 {
        return Err(Error::InvalidLabels(format!("{jname} = {j} is negative")));
    }
    if m.abs() > j {
        return Err(Error::InvalidLabels(format!("m out of range: |{name}| = {} > {jname} = {j}", m.abs())));
    }
    if !j.same_parity(m) {
        return Err(Error::InvalidLabels(format!("parity mismatch: {jname} = {j}, {name} = {m}")));
    }
    Ok(())
}

impl CgLabels {
    pub fn new(a: HalfInt, alpha: HalfInt, b: HalfInt, beta: HalfInt, c: HalfInt, gamma: HalfInt) -> Result<Self> {
        check_projection("alpha", a, "a", alpha)?;
        check_projection("beta", b, "b", beta)?;
        check_projection("gamma", c, "c", gamma)?;
        Ok(CgLabels { a, alpha, b, beta, c, gamma })
    }

    /// Builds labels from doubled values `(2a, 2alpha, 2b, 2beta, 2c, 2gamma)`.
    pub fn from_twice(t: [i64; 6]) -> Result<Self> {
        let [a, alpha, b, beta, c, gamma] = t.map(HalfInt::from_twice);
        Self::new(a, alpha, b, beta, c, gamma)
    }

    /// Parses the six labels from `k` / `k/2` text.
    pub fn parse(texts: [&str; 6]) -> Result<Self> {
        let mut v = [HalfInt::ZERO; 6];
        for (slot, t) in v.iter_mut().zip(texts) {
            *slot = t.parse()?;
        }
        let [a, alpha, b, beta, c, gamma] = v;
        Self::new(a, alpha, b, beta, c, gamma)
    }

    pub fn twice(&self) -> [i64; 6] {
        [self.a, self.alpha, self.b, self.beta, self.c, self.gamma].map(HalfInt::twice)
    }

    /// Every structurally valid label set with `2a, 2b <= max_twice_ab` and
    /// `2c <= 2a + 2b + 2`, in lexicographic order of the doubled labels
    /// `(2a, 2b, 2c, 2alpha, 2beta, 2gamma)`.
    ///
    /// The range deliberately includes triangle violations, parity
    /// mismatches of `a + b + c` and `gamma != alpha + beta`.
    pub fn enumerate(max_twice_ab: i64) -> Vec<CgLabels> {
        let mut out = Vec::new();
        for ta in 0..=max_twice_ab {
            for tb in 0..=max_twice_ab {
                for tc in 0..=ta + tb + 2 {
                    for talpha in (-ta..=ta).step_by(2) {
                        for tbeta in (-tb..=tb).step_by(2) {
                            for tgamma in (-tc..=tc).step_by(2) {
                                out.push(
                                    CgLabels::from_twice([ta, talpha, tb, tbeta, tc, tgamma])
                                        .expect("enumerated labels are structurally valid"),
                                );
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

impl std::fmt::Display for CgLabels {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "(a={}, alpha={}, b={}, beta={}, c={}, gamma={})",
            self.a, self.alpha, self.b, self.beta, self.c, self.gamma
        )
    }
}

/// The stretched coupling `c = a + b` in the `(l1, k1, l2, k2)` form:
/// `a = l1/2, alpha = l1/2 - k1, b = l2/2, beta = l2/2 - k2, c = l/2, gamma = l/2 - k`
/// with `l = l1 + l2` and `k = k1 + k2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DegenerateLabels {
    l1: u64,
    k1: u64,
    l2: u64,
    k2: u64,
}

impl DegenerateLabels {
    pub fn new(l1: u64, k1: u64, l2: u64, k2: u64) -> Result<Self> {
        if k1 > l1 || k2 > l2 {
            return Err(Error::InvalidLabels(format!(
                "need k1 <= l1 and k2 <= l2, got l1={l1}, k1={k1}, l2={l2}, k2={k2}"
            )));
        }
        Ok(DegenerateLabels { l1, k1, l2, k2 })
    }

    pub fn l1(&self) -> u64 {
        self.l1
    }

    pub fn k1(&self) -> u64 {
        self.k1
    }

    pub fn l2(&self) -> u64 {
        self.l2
    }

    pub fn k2(&self) -> u64 {
        self.k2
    }

    pub fn l(&self) -> u64 {
        self.l1 + self.l2
    }

    pub fn k(&self) -> u64 {
        self.k1 + self.k2
    }

    pub fn to_cg_labels(&self) -> CgLabels {
        let (l1, k1, l2, k2) = (self.l1 as i64, self.k1 as i64, self.l2 as i64, self.k2 as i64);
        let (l, k) = (l1 + l2, k1 + k2);
        CgLabels::from_twice([l1, l1 - 2 * k1, l2, l2 - 2 * k2, l, l - 2 * k])
            .expect("degenerate labels map to valid coupling labels")
    }

    /// All `(l1, k1, l2, k2)` with `l1, l2 <= max_l`, lexicographic.
    pub fn enumerate(max_l: u64) -> Vec<DegenerateLabels> {
        let mut out = Vec::new();
        for l1 in 0..=max_l {
            for l2 in 0..=max_l {
                for k1 in 0..=l1 {
                    for k2 in 0..=l2 {
                        out.push(DegenerateLabels { l1, k1, l2, k2 });
                    }
                }
            }
        }
        out
    }
}

impl std::fmt::Display for DegenerateLabels {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(l1={}, k1={}, l2={}, k2={})", self.l1, self.k1, self.l2, self.k2)
    }
}
