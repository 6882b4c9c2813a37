//! Decimal rendering and parsing for exact values. Everything here runs on
//! big integers; no machine floating point is involved.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::SignedSqrtRational;

const GUARD_DIGITS: i64 = 2;

fn pow10(e: u64) -> BigInt {
    Pow::pow(BigInt::from(10u32), e)
}

#[derive(Clone, Copy)]
enum Magnitude<'a> {
    /// The value is the rational itself.
    Plain(&'a BigRational),
    /// The value is the square root of the rational.
    Root(&'a BigRational),
}

impl Magnitude<'_> {
    fn radicand(&self) -> &BigRational {
        match self {
            Magnitude::Plain(r) | Magnitude::Root(r) => r,
        }
    }

    fn exponent_scale(&self) -> i64 {
        match self {
            Magnitude::Plain(_) => 1,
            Magnitude::Root(_) => 2,
        }
    }

    /// value < 10^e
    fn below_pow10(&self, e: i64) -> bool {
        let r = self.radicand();
        let e = e * self.exponent_scale();
        if e >= 0 {
            r.numer() < &(r.denom() * pow10(e as u64))
        } else {
            r.numer() * pow10((-e) as u64) < *r.denom()
        }
    }

    /// Smallest `e` with value < 10^e.
    fn decimal_exponent(&self) -> i64 {
        let r = self.radicand();
        let approx = r.numer().to_string().len() as i64 - r.denom().to_string().len() as i64;
        let mut e = approx.div_euclid(self.exponent_scale());
        while !self.below_pow10(e) {
            e += 1;
        }
        while self.below_pow10(e - 1) {
            e -= 1;
        }
        e
    }

    /// `floor(value * 10^t)` and whether that floor is exact.
    fn scaled_floor(&self, t: i64) -> (BigInt, bool) {
        let r = self.radicand();
        let t = t * self.exponent_scale();
        let (num, den) = if t >= 0 {
            (r.numer() * pow10(t as u64), r.denom().clone())
        } else {
            (r.numer().clone(), r.denom() * pow10((-t) as u64))
        };
        let (q, rem) = num.div_rem(&den);
        match self {
            Magnitude::Plain(_) => (q, rem.is_zero()),
            Magnitude::Root(_) => {
                let root = q.sqrt();
                let exact = rem.is_zero() && &root * &root == q;
                (root, exact)
            }
        }
    }
}

fn render(negative: bool, mag: Magnitude<'_>, digits: u32) -> String {
    assert!(digits >= 1, "at least one significant digit is required");
    if mag.radicand().is_zero() {
        return "0".to_string();
    }
    let digits = digits as i64;
    let e = mag.decimal_exponent();
    let mut frac = digits - e;
    let (guarded, exact) = mag.scaled_floor(frac + GUARD_DIGITS);
    let (mut q, rem) = guarded.div_rem(&pow10(GUARD_DIGITS as u64));
    let half = pow10(GUARD_DIGITS as u64) / 2;
    let round_up = match rem.cmp(&half) {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Less => false,
        // exactly on the half only if nothing was truncated below the guards
        std::cmp::Ordering::Equal => !exact || q.is_odd(),
    };
    if round_up {
        q += 1;
        if q == pow10(digits as u64) {
            q = pow10(digits as u64 - 1);
            frac -= 1;
        }
    }
    let mut text = q.to_string();
    if frac > 0 {
        let frac = frac as usize;
        if text.len() <= frac {
            text = format!("{}{}", "0".repeat(frac + 1 - text.len()), text);
        }
        text.insert(text.len() - frac, '.');
    } else {
        text.push_str(&"0".repeat((-frac) as usize));
    }
    if negative {
        text.insert(0, '-');
    }
    text
}

/// Decimal expansion of `sign * sqrt(radicand)` to `digits` significant
/// digits, rounded half to even.
pub fn sqrt_to_decimal(v: &SignedSqrtRational, digits: u32) -> String {
    render(v.sign() < 0, Magnitude::Root(v.radicand()), digits)
}

/// Decimal expansion of a rational to `digits` significant digits, rounded
/// half to even.
pub fn rational_to_decimal(r: &BigRational, digits: u32) -> String {
    let abs = r.abs();
    render(r.is_negative(), Magnitude::Plain(&abs), digits)
}

/// Parses `[-]int[.frac][e[-]exp]` into the exact rational it denotes.
pub fn parse_decimal(text: &str) -> Result<BigRational> {
    let err = || Error::Parse(format!("not a decimal number: {text:?}"));
    let s = text.trim();
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i64>().map_err(|_| err())?),
        None => (s, 0),
    };
    let (negative, body) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(err());
    }
    let digits = format!("{int_part}{frac_part}");
    let mut value = BigInt::parse_bytes(digits.as_bytes(), 10).ok_or_else(err)?;
    if negative {
        value = -value;
    }
    let shift = exponent - frac_part.len() as i64;
    Ok(if shift >= 0 {
        BigRational::from_integer(value * pow10(shift as u64))
    } else {
        BigRational::new(value, pow10((-shift) as u64))
    })
}

/// Parses `num/den`, or any form accepted by [`parse_decimal`].
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let s = text.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let err = || Error::Parse(format!("not a rational number: {text:?}"));
            let n: BigInt = n.trim().parse().map_err(|_| err())?;
            let d: BigInt = d.trim().parse().map_err(|_| err())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {text:?}")));
            }
            Ok(BigRational::new(n, d))
        }
        None => parse_decimal(s),
    }
}

/// `exp(y)` as a rational whose relative error is below `10^-digits`.
pub fn exp_rational(y: &BigRational, digits: u32) -> BigRational {
    if y.is_zero() {
        return BigRational::one();
    }
    if y.is_negative() {
        return exp_rational(&-y, digits + 2).recip();
    }
    // halve the argument until it is below 1/8, then square back up
    let halvings = y.ceil().to_integer().bits() + 3;
    let work_bits = (digits as u64) * 10 / 3 + 2 * halvings + 64;
    let one = BigInt::one() << work_bits;
    let shift = work_bits - halvings;
    let x = (y.numer() << shift) / y.denom();

    let mut sum = one.clone();
    let mut term = one.clone();
    let mut i: u64 = 1;
    loop {
        term = ((term * &x) >> work_bits) / BigInt::from(i);
        if term.sign() == Sign::NoSign {
            break;
        }
        sum += &term;
        i += 1;
    }
    for _ in 0..halvings {
        sum = (&sum * &sum) >> work_bits;
    }
    BigRational::new(sum, one)
}
