//! Assembly-free ground truth for every arithmetic result in the crate.
//!
//! Everything here is pure big-integer arithmetic — no tiles, no grids, no
//! floating point — so tile-system results can be compared by exact equality.
//! These functions are written and tested before (and never share code with)
//! the tile systems they check.

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::OracleError;

/// `floor(p * 2^f / q)`: the `f`-fraction-bit truncated quotient as a scaled
/// integer.
pub fn oracle_divide_fixed(p: &BigUint, q: &BigUint, f: u32) -> Result<BigUint, OracleError> {
    if q.is_zero() {
        return Err(OracleError::DivisionByZero);
    }
    Ok((p << f) / q)
}

/// Floor square root of a scaled integer.
///
/// If `n` is a real value scaled by `2^(2f)` (i.e. `n = v * 4^f`), the result
/// is `floor(sqrt(v) * 2^f)`: the `f`-fraction-bit truncated square root as an
/// integer scaled by `2^f`. The fraction width `f` is part of the contract but
/// not of the computation — scaling by `4^f` under the root is exactly what
/// makes the plain integer square root produce the scaled answer.
pub fn oracle_isqrt_fixed(n: &BigUint, _f: u32) -> BigUint {
    n.sqrt()
}

/// Shape of the binary expansion of a proper fraction `p/q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryPeriod {
    /// True iff the expansion terminates (trailing zeroes forever).
    pub terminated: bool,
    /// First digit index (0-based, after the point) where the period begins.
    /// `None` for terminating expansions.
    pub period_start: Option<usize>,
    /// Length of the repeating block. `None` for terminating expansions.
    pub period_length: Option<usize>,
}

/// Period structure of the binary expansion of `p/q` with `0 < p < q`.
///
/// Strips factors of two from the reduced denominator; the expansion
/// terminates iff nothing else remains. Otherwise the period length is the
/// multiplicative order of 2 modulo the stripped denominator and the
/// preperiod is the dyadic valuation of the denominator.
pub fn oracle_binary_period(p: &BigUint, q: &BigUint) -> Result<BinaryPeriod, OracleError> {
    if q.is_zero() {
        return Err(OracleError::DivisionByZero);
    }
    if p.is_zero() || p >= q {
        return Err(OracleError::ImproperFraction {
            p: p.to_string(),
            q: q.to_string(),
        });
    }
    let gcd = gcd_biguint(p.clone(), q.clone());
    let q_red = q / &gcd;

    let mut stripped = q_red.clone();
    let mut valuation = 0usize;
    let two = BigUint::from(2u8);
    while (&stripped % &two).is_zero() {
        stripped /= &two;
        valuation += 1;
    }
    if stripped.is_one() {
        return Ok(BinaryPeriod {
            terminated: true,
            period_start: None,
            period_length: None,
        });
    }
    // Multiplicative order of 2 modulo `stripped` (odd, > 1): iterate powers.
    let mut pow = &two % &stripped;
    let mut order = 1usize;
    while !pow.is_one() {
        pow = (&pow * &two) % &stripped;
        order += 1;
    }
    Ok(BinaryPeriod {
        terminated: false,
        period_start: Some(valuation),
        period_length: Some(order),
    })
}

/// First `count` binary fraction digits of `p/q` (`0 <= p < q`), by the
/// schoolbook remainder recurrence `r <- 2r; digit = [r >= q]`.
pub fn oracle_binary_digits(p: &BigUint, q: &BigUint, count: usize) -> Result<Vec<u8>, OracleError> {
    if q.is_zero() {
        return Err(OracleError::DivisionByZero);
    }
    if p >= q {
        return Err(OracleError::ImproperFraction {
            p: p.to_string(),
            q: q.to_string(),
        });
    }
    let mut digits = Vec::with_capacity(count);
    let mut r = p.clone();
    for _ in 0..count {
        r <<= 1;
        if r >= *q {
            r -= q;
            digits.push(1);
        } else {
            digits.push(0);
        }
    }
    Ok(digits)
}

/// `4 * sum_{n < terms} (-1)^n * floor(2^f / (2n+1))` as a scaled integer:
/// the Gregory–Leibniz partial sum with per-term truncation to `f` fraction
/// bits, scaled by `2^f`.
///
/// Every partial sum of the alternating series with strictly decreasing terms
/// is nonnegative, so the computation stays in unsigned integers.
pub fn oracle_pi_partial(terms: u32, f: u32) -> BigUint {
    let mut sum = BigUint::zero();
    let numerator = BigUint::one() << f;
    for n in 0..terms {
        let term = &numerator / BigUint::from(2 * n + 1);
        if n % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum << 2u8
}

/// Numeric comparison of two equal-width MSB-first bit strings.
pub fn oracle_compare_bits(a: &[u8], b: &[u8]) -> Ordering {
    debug_assert_eq!(a.len(), b.len());
    a.cmp(b)
}

/// Logical right shift by one with a zero padded at the MSB; width kept.
pub fn oracle_shift_right(a: &[u8]) -> Vec<u8> {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(a.len());
    out.push(0);
    out.extend_from_slice(&a[..a.len() - 1]);
    out
}

/// Exact subtraction `a - b` alongside `b >> 1`, both at the common width.
pub fn oracle_sub_shift(a: &[u8], b: &[u8]) -> Result<(Vec<u8>, Vec<u8>), OracleError> {
    debug_assert_eq!(a.len(), b.len());
    let av = bits_to_biguint(a);
    let bv = bits_to_biguint(b);
    if av < bv {
        return Err(OracleError::Underflow);
    }
    let diff = biguint_to_bits(&(av - bv), a.len());
    Ok((diff, oracle_shift_right(b)))
}

/// Splice bit `c` into 1-based position `i` (from the left) of `q`, shifting
/// the suffix one place right and discarding the last bit; width kept.
pub fn oracle_insert_splice(q: &[u8], i: usize, c: u8) -> Result<Vec<u8>, OracleError> {
    let n = q.len();
    if i < 1 || i > n.saturating_sub(1) {
        return Err(OracleError::InsertOutOfRange {
            i,
            max: n.saturating_sub(1),
        });
    }
    let mut out = Vec::with_capacity(n);
    out.extend_from_slice(&q[..i - 1]);
    out.push(c);
    out.extend_from_slice(&q[i - 1..n - 1]);
    Ok(out)
}

/// MSB-first bits to an unsigned integer.
pub fn bits_to_biguint(bits: &[u8]) -> BigUint {
    let mut v = BigUint::zero();
    for &b in bits {
        v <<= 1;
        if b != 0 {
            v += 1u8;
        }
    }
    v
}

/// Unsigned integer to MSB-first bits at a fixed width (truncates high bits
/// only if the value does not fit, which callers are expected to avoid).
pub fn biguint_to_bits(v: &BigUint, width: usize) -> Vec<u8> {
    let mut out = vec![0u8; width];
    for i in 0..width {
        if v.bit((width - 1 - i) as u64) {
            out[i] = 1;
        }
    }
    out
}

fn gcd_biguint(mut a: BigUint, mut b: BigUint) -> BigUint {
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}
