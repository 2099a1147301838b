//! Independent high-precision oracles shared by the integration tests.
//!
//! Fixed-point decimals: a `BigInt` `v` stands for `v / 10^DIGITS`.

#![allow(dead_code)]

use std::path::PathBuf;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub const DIGITS: u32 = 80;

pub fn scale() -> BigInt {
    BigInt::from(10u32).pow(DIGITS)
}

pub fn mul(a: &BigInt, b: &BigInt) -> BigInt {
    (a * b) / scale()
}

pub fn from_ratio(n: i64, d: i64) -> BigInt {
    BigInt::from(n) * scale() / BigInt::from(d)
}

/// `10^-exp` in fixed point.
pub fn eps(exp: u32) -> BigInt {
    BigInt::from(10u32).pow(DIGITS - exp)
}

/// `atan(1/x)` by its Taylor series.
fn atan_inv(x: u64) -> BigInt {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = scale() / &x;
    let mut sum = BigInt::zero();
    let mut n = 1u64;
    let mut sign = true;
    while !power.is_zero() {
        let term = &power / BigInt::from(n);
        if sign {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        n += 2;
        sign = !sign;
    }
    sum
}

/// π from Machin's formula.
pub fn pi() -> BigInt {
    atan_inv(5) * 16 - atan_inv(239) * 4
}

/// `cos x` by its Taylor series (fixed-point `x`).
pub fn cos(x: &BigInt) -> BigInt {
    let x2 = mul(x, x);
    let mut term = scale();
    let mut sum = term.clone();
    let mut k = 1u64;
    while !term.is_zero() {
        term = -mul(&term, &x2) / BigInt::from((2 * k - 1) * (2 * k));
        sum += &term;
        k += 1;
    }
    sum
}

/// `cos(2π m/p)` for `m = 0..p`, via the Chebyshev recurrence from `cos(2π/p)`.
pub fn cos_turn_table(p: u64, two_pi: &BigInt) -> Vec<BigInt> {
    let c1 = cos(&(two_pi / BigInt::from(p)));
    let mut out = vec![scale(), c1.clone()];
    while out.len() < p as usize {
        let n = out.len();
        let next = mul(&c1, &out[n - 1]) * 2 - &out[n - 2];
        out.push(next);
    }
    out.truncate(p as usize);
    out
}

/// Which of `{-1, -1/2, 0, 1/2, 1}` lies within `tol` of `v`, if any.
pub fn near_niven_value(v: &BigInt, tol: &BigInt) -> Option<(i64, i64)> {
    [(-1, 1), (-1, 2), (0, 1), (1, 2), (1, 1)]
        .into_iter()
        .find(|&(n, d)| (v - from_ratio(n, d)).abs() < *tol)
}

/// `arccos(3/5) / 2π` as fixed point, from `atan(4/3) = π/2 − atan(1/2) − atan(2/11)`.
pub fn arccos_three_fifths_turns() -> BigInt {
    let pi = pi();
    let atan_2_11 = {
        // atan(2/11) = Σ (-1)^k (2/11)^(2k+1) / (2k+1)
        let r = from_ratio(2, 11);
        let r2 = mul(&r, &r);
        let mut power = r;
        let mut sum = BigInt::zero();
        let mut n = 1u64;
        let mut sign = true;
        while !power.is_zero() {
            let t = &power / BigInt::from(n);
            if sign {
                sum += t;
            } else {
                sum -= t;
            }
            power = mul(&power, &r2);
            n += 2;
            sign = !sign;
        }
        sum
    };
    let angle = &pi / 2 - atan_inv(2) - atan_2_11;
    angle * scale() / (pi * 2)
}

/// Continued-fraction partial quotients of `num/den` (exact), at most `depth` of them.
pub fn continued_fraction(mut num: BigInt, mut den: BigInt, depth: usize) -> Vec<BigInt> {
    let mut out = Vec::new();
    while out.len() < depth && !den.is_zero() {
        let (q, r) = num.div_mod_floor(&den);
        out.push(q);
        num = den;
        den = r;
    }
    out
}

/// Partial quotients shared by every real in `[v − err, v + err]`.
pub fn certified_continued_fraction(v: &BigInt, err: &BigInt, depth: usize) -> Vec<BigInt> {
    let lo = continued_fraction(v - err, scale(), depth + 1);
    let hi = continued_fraction(v + err, scale(), depth + 1);
    // the last matching quotient is only a bound, so drop it
    let common = lo.iter().zip(&hi).take_while(|(a, b)| a == b).count();
    lo[..common.saturating_sub(1)].to_vec()
}

/// `√2` in fixed point, to the last digit.
pub fn sqrt2() -> BigInt {
    let two: BigInt = scale() * scale() * 2;
    two.sqrt()
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub const GOLDEN_CASES: [(&str, &[&str]); 3] = [
    (
        "mz_json.json",
        &["mz", "--cos", "3/5", "--performed", "1", "--format", "json"],
    ),
    ("ensemble_text.txt", &["ensemble", "--p", "8", "--n", "4"]),
    (
        "chsh_text.txt",
        &[
            "chsh",
            "--cosines",
            "-7/10,7/10,-7/10,-7/10",
            "--sizes",
            "40,40,40,40",
        ],
    ),
];
