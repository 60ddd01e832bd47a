//! Exact fixed-point binary numbers: an integer part and a fixed number of
//! fraction bits, both kept as explicit bit vectors (most significant bit
//! first). No floating point is involved anywhere; decimal conversions are
//! exact and reject inputs that have no finite binary expansion.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::ParseError;

/// A non-negative fixed-point binary number.
///
/// `int_bits` is the integer part, most significant bit first, normalized so
/// it never has a leading zero unless it is exactly `[0]`. `frac_bits` keeps
/// its full width — trailing zeros are significant to the format, so
/// `11.1110` and `11.111` compare unequal even though they denote the same
/// value ([`Self::value_eq`] compares by value instead).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FixedPointBinary {
    int_bits: Vec<u8>,
    frac_bits: Vec<u8>,
}

fn assert_bits(bits: &[u8]) {
    assert!(bits.iter().all(|&b| b <= 1), "bits must be 0 or 1");
}

fn trim_leading_zeros(mut bits: Vec<u8>) -> Vec<u8> {
    while bits.len() > 1 && bits[0] == 0 {
        bits.remove(0);
    }
    if bits.is_empty() {
        bits.push(0);
    }
    bits
}

impl FixedPointBinary {
    /// Build from explicit bit vectors (most significant first).
    pub fn from_bits(int_bits: Vec<u8>, frac_bits: Vec<u8>) -> Self {
        assert_bits(&int_bits);
        assert_bits(&frac_bits);
        FixedPointBinary {
            int_bits: trim_leading_zeros(int_bits),
            frac_bits,
        }
    }

    /// Build from an integer.
    pub fn from_uint(value: &BigUint) -> Self {
        Self::from_scaled(value, 0)
    }

    /// Build from a scaled numerator: the represented value is
    /// `numerator / 2^frac_len`.
    pub fn from_scaled(numerator: &BigUint, frac_len: usize) -> Self {
        let int = numerator >> frac_len;
        let int_bits = biguint_bits(&int, int.bits().max(1) as usize);
        let mut frac_bits = Vec::with_capacity(frac_len);
        for k in (0..frac_len).rev() {
            frac_bits.push(u8::from(numerator.bit(k as u64)));
        }
        FixedPointBinary {
            int_bits: trim_leading_zeros(int_bits),
            frac_bits,
        }
    }

    /// The scaled numerator and fraction width: value = `n / 2^f`.
    pub fn scaled(&self) -> (BigUint, usize) {
        let mut n = BigUint::zero();
        for &b in self.int_bits.iter().chain(self.frac_bits.iter()) {
            n = (n << 1u8) + BigUint::from(b);
        }
        (n, self.frac_bits.len())
    }

    pub fn int_bits(&self) -> &[u8] {
        &self.int_bits
    }

    pub fn frac_bits(&self) -> &[u8] {
        &self.frac_bits
    }

    pub fn frac_len(&self) -> usize {
        self.frac_bits.len()
    }

    pub fn is_zero(&self) -> bool {
        self.int_bits.iter().chain(self.frac_bits.iter()).all(|&b| b == 0)
    }

    /// Integer part as a `BigUint`.
    pub fn int_value(&self) -> BigUint {
        let (n, f) = self.scaled();
        n >> f
    }

    /// Equal as numbers, ignoring fraction width.
    pub fn value_eq(&self, other: &Self) -> bool {
        let (a, fa) = self.scaled();
        let (b, fb) = other.scaled();
        let f = fa.max(fb);
        (a << (f - fa)) == (b << (f - fb))
    }

    /// Parse either decimal (`23.5`) or, with a `0b` prefix, binary
    /// (`0b10111.1`).
    pub fn parse(input: &str) -> Result<Self, ParseError> {
        let s = input.trim();
        if let Some(rest) = s.strip_prefix("0b").or_else(|| s.strip_prefix("0B")) {
            Self::parse_binary(rest)
        } else {
            Self::parse_decimal(s)
        }
    }

    /// Parse a binary literal, e.g. `10111.1`. A leading `0b` prefix and a
    /// trailing `b` marker are both accepted and ignored.
    pub fn parse_binary(input: &str) -> Result<Self, ParseError> {
        let s = input.trim();
        let s = s.strip_prefix("0b").or_else(|| s.strip_prefix("0B")).unwrap_or(s);
        let s = s.strip_suffix(['b', 'B']).unwrap_or(s);
        if s.is_empty() {
            return Err(ParseError::Empty);
        }
        let (int_str, frac_str) = split_point(s)?;
        let int_bits = parse_bit_run(int_str, "integer part")?;
        let frac_bits = if frac_str.is_empty() {
            Vec::new()
        } else {
            parse_bit_run(frac_str, "fraction part")?
        };
        if int_bits.is_empty() && frac_bits.is_empty() {
            return Err(ParseError::Malformed(input.to_string()));
        }
        Ok(Self::from_bits(
            if int_bits.is_empty() { vec![0] } else { int_bits },
            frac_bits,
        ))
    }

    /// Parse a decimal literal exactly. The fraction must be dyadic (finite
    /// in binary): `.5`, `.25`, `.375`, ... — anything else is rejected.
    pub fn parse_decimal(input: &str) -> Result<Self, ParseError> {
        let s = input.trim();
        if s.is_empty() {
            return Err(ParseError::Empty);
        }
        let (int_str, frac_str) = split_point(s)?;
        let int_val = if int_str.is_empty() {
            BigUint::zero()
        } else {
            parse_decimal_digits(int_str)?
        };
        let mut frac_bits = Vec::new();
        if !frac_str.is_empty() {
            let mut numerator = parse_decimal_digits(frac_str)?;
            let mut denominator = BigUint::from(10u8).pow(frac_str.len() as u32);
            let g = gcd(numerator.clone(), denominator.clone());
            numerator /= &g;
            denominator /= &g;
            if !is_power_of_two(&denominator) {
                return Err(ParseError::NonDyadicDecimal(input.to_string()));
            }
            while !numerator.is_zero() {
                numerator <<= 1u8;
                if numerator >= denominator {
                    frac_bits.push(1);
                    numerator -= &denominator;
                } else {
                    frac_bits.push(0);
                }
            }
        }
        let int_bits = biguint_bits(&int_val, int_val.bits().max(1) as usize);
        Ok(Self::from_bits(int_bits, frac_bits))
    }

    /// Binary rendering: `11.1110` (no point if there are no fraction bits).
    pub fn to_binary_string(&self) -> String {
        let mut out = String::new();
        for &b in &self.int_bits {
            out.push(char::from(b'0' + b));
        }
        if !self.frac_bits.is_empty() {
            out.push('.');
            for &b in &self.frac_bits {
                out.push(char::from(b'0' + b));
            }
        }
        out
    }

    /// Exact decimal rendering: `3.875` (trailing fraction zeros trimmed).
    pub fn to_decimal_string(&self) -> String {
        let (n, f) = self.scaled();
        let int = &n >> f;
        let mask = (BigUint::one() << f) - BigUint::one();
        let frac = &n & &mask;
        if frac.is_zero() {
            return int.to_string();
        }
        // frac / 2^f = frac * 5^f / 10^f: exact decimal with f digits.
        let digits = (frac * BigUint::from(5u8).pow(f as u32)).to_string();
        let mut padded = "0".repeat(f.saturating_sub(digits.len()));
        padded.push_str(&digits);
        let trimmed = padded.trim_end_matches('0');
        format!("{int}.{trimmed}")
    }
}

impl fmt::Display for FixedPointBinary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_binary_string())
    }
}

/// Split at most one `.`; more is malformed.
fn split_point(s: &str) -> Result<(&str, &str), ParseError> {
    let mut parts = s.splitn(3, '.');
    let int = parts.next().unwrap_or("");
    let frac = parts.next().unwrap_or("");
    if parts.next().is_some() {
        return Err(ParseError::Malformed(s.to_string()));
    }
    Ok((int, frac))
}

fn parse_bit_run(s: &str, context: &'static str) -> Result<Vec<u8>, ParseError> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            other => Err(ParseError::InvalidCharacter {
                found: other,
                context,
            }),
        })
        .collect()
}

fn parse_decimal_digits(s: &str) -> Result<BigUint, ParseError> {
    if let Some(bad) = s.chars().find(|c| !c.is_ascii_digit()) {
        return Err(ParseError::InvalidCharacter {
            found: bad,
            context: "decimal number",
        });
    }
    s.parse::<BigUint>()
        .map_err(|_| ParseError::Malformed(s.to_string()))
}

/// `width` low bits of `v`, most significant first.
pub fn biguint_bits(v: &BigUint, width: usize) -> Vec<u8> {
    (0..width)
        .rev()
        .map(|k| u8::from(v.bit(k as u64)))
        .collect()
}

fn gcd(mut a: BigUint, mut b: BigUint) -> BigUint {
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

fn is_power_of_two(v: &BigUint) -> bool {
    !v.is_zero() && (v & (v - BigUint::one())).is_zero()
}
