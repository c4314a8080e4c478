//! Square divisors of `2^d - 1` and squarefreeness tests.

use crate::error::{Error, Result};

/// Largest `|n|` accepted by `is_squarefree`.
pub const SQUAREFREE_MAX: u64 = 1 << 60;

/// Largest `d` accepted by `square_divisor_scan`.
pub const SCAN_MAX_D: u64 = 1_000_000;

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

fn icbrt(n: u64) -> u64 {
    let mut r = (n as f64).cbrt() as u64;
    while r > 0 && r * r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Whether no square `p^2 > 1` divides `n`.
///
/// Trial division removes every prime up to `n^(1/3)`; what remains has at
/// most two prime factors, so it is squarefree unless it is a perfect square.
pub fn is_squarefree(n: i64) -> Result<bool> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    let mut m = n.unsigned_abs();
    if m > SQUAREFREE_MAX {
        return Err(Error::Scale {
            operation: "squarefree test",
            limit: "|n| <= 2^60".into(),
        });
    }
    let bound = icbrt(m);
    let mut p = 2u64;
    while p <= bound {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return Ok(false);
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        let r = isqrt(m);
        if r * r == m {
            return Ok(false);
        }
    }
    Ok(true)
}

fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let m = u128::from(modulus);
    let mut b = u128::from(base) % m;
    let mut acc = 1u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Smallest `x` in `2..=x_max` with `x^2 | 2^d - 1`.
pub fn square_divisor_scan(d: u64, x_max: u64) -> Result<Option<u64>> {
    if d == 0 {
        return Err(Error::ZeroInput);
    }
    if d > SCAN_MAX_D {
        return Err(Error::Scale {
            operation: "square divisor scan",
            limit: format!("d <= {SCAN_MAX_D}"),
        });
    }
    if x_max > u64::from(u32::MAX) {
        return Err(Error::Scale {
            operation: "square divisor scan",
            limit: format!("x_max <= {}", u32::MAX),
        });
    }
    Ok((2..=x_max).find(|&x| pow_mod(2, d, x * x) == 1))
}
