//! Exact rational helpers: decimal parsing, half-even rounding, factorials.
//!
//! All engine arithmetic is on [`BigRational`]; decimals only appear at the
//! file-format boundary and in rendered reports.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Shorthand for small rational constants, mostly in tests.
pub fn rat(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Parses a plain decimal string (`-12`, `42310.79`, `.5`) into an exact rational.
pub fn parse_decimal(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (sign, digits) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.bytes().all(|b| b.is_ascii_digit()) || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let mut numer = BigInt::zero();
    for b in int_part.bytes().chain(frac_part.bytes()) {
        numer = numer * 10 + (b - b'0');
    }
    let denom = BigInt::from(10u32).pow(frac_part.len() as u32);
    Some(BigRational::new(BigInt::from(sign) * numer, denom))
}

/// Rounds to `dp` decimal places, ties to even (banker's rounding).
pub fn round_half_even(value: &BigRational, dp: u32) -> BigRational {
    let scale = BigRational::from_integer(BigInt::from(10u32).pow(dp));
    let scaled = value * &scale;
    let floor = scaled.floor();
    let frac = &scaled - &floor;
    let half = rat(1, 2);
    let mut ipart = floor.to_integer();
    match frac.cmp(&half) {
        std::cmp::Ordering::Greater => ipart += 1,
        std::cmp::Ordering::Equal => {
            if ipart.bit(0) {
                ipart += 1;
            }
        }
        std::cmp::Ordering::Less => {}
    }
    BigRational::new(ipart, scale.to_integer())
}

/// Renders `value` rounded half-even to exactly `dp` decimal places.
pub fn format_decimal(value: &BigRational, dp: u32) -> String {
    let rounded = round_half_even(value, dp);
    let scale = BigInt::from(10u32).pow(dp);
    let scaled = (rounded * BigRational::from_integer(scale.clone())).to_integer();
    let sign = if scaled.is_negative() { "-" } else { "" };
    let abs = scaled.abs();
    let int_part = &abs / &scale;
    let frac_part = &abs % &scale;
    if dp == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part:0>width$}", width = dp as usize)
    }
}

/// Renders a rational exactly: integers as-is, otherwise `p/q`.
pub fn format_exact(value: &BigRational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Renders the exact decimal expansion when the denominator divides a power
/// of ten (used when echoing parsed dataset numbers back out).
pub fn format_shortest_decimal(value: &BigRational) -> Option<String> {
    let mut denom = value.denom().clone();
    let mut dp = 0u32;
    let ten = BigInt::from(10);
    let five = BigInt::from(5);
    let two = BigInt::from(2);
    while (&denom % &two).is_zero() {
        denom /= &two;
        dp += 1;
    }
    let mut fives = 0u32;
    while (&denom % &five).is_zero() {
        denom /= &five;
        fives += 1;
    }
    if !denom.is_one() {
        return None;
    }
    let _ = ten;
    Some(format_decimal(value, dp.max(fives)))
}

/// `0! ..= n!` as big integers.
pub fn factorials(n: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(BigInt::one());
    for k in 1..=n {
        let next = out[k - 1].clone() * BigInt::from(k);
        out.push(next);
    }
    out
}
