//! Exact non-negative rationals.
//!
//! Support thresholds and sentence scores are compared exactly via
//! cross-multiplication. Floating point only appears at the reporting
//! boundary, never in a threshold decision.

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;

/// A non-negative rational kept in reduced canonical form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: u64,
    den: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseFractionError {
    Empty,
    InvalidDigit,
    ZeroDenominator,
    Overflow,
}

impl fmt::Display for ParseFractionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseFractionError::Empty => write!(f, "empty fraction"),
            ParseFractionError::InvalidDigit => write!(f, "invalid character in fraction"),
            ParseFractionError::ZeroDenominator => write!(f, "denominator is zero"),
            ParseFractionError::Overflow => write!(f, "fraction out of range"),
        }
    }
}

impl core::error::Error for ParseFractionError {}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn gcd128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Fraction {
    pub const ZERO: Fraction = Fraction { num: 0, den: 1 };
    pub const ONE: Fraction = Fraction { num: 1, den: 1 };

    /// Builds `num/den` in reduced form. Panics if `den == 0`.
    pub fn new(num: u64, den: u64) -> Fraction {
        assert!(den != 0, "fraction denominator must be non-zero");
        if num == 0 {
            return Fraction::ZERO;
        }
        let g = gcd(num, den);
        Fraction {
            num: num / g,
            den: den / g,
        }
    }

    pub fn numer(&self) -> u64 {
        self.num
    }

    pub fn denom(&self) -> u64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn as_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Exact sum; panics on overflow past u64 (far beyond any score this
    /// pipeline can produce).
    pub fn add(self, rhs: Fraction) -> Fraction {
        let num = self.num as u128 * rhs.den as u128 + rhs.num as u128 * self.den as u128;
        let den = self.den as u128 * rhs.den as u128;
        Fraction::from_u128(num, den)
    }

    /// Exact product with the same overflow policy as [`Fraction::add`].
    pub fn mul(self, rhs: Fraction) -> Fraction {
        let num = self.num as u128 * rhs.num as u128;
        let den = self.den as u128 * rhs.den as u128;
        Fraction::from_u128(num, den)
    }

    fn from_u128(num: u128, den: u128) -> Fraction {
        if num == 0 {
            return Fraction::ZERO;
        }
        let g = gcd128(num, den);
        let (num, den) = (num / g, den / g);
        Fraction {
            num: u64::try_from(num).expect("fraction numerator overflow"),
            den: u64::try_from(den).expect("fraction denominator overflow"),
        }
    }

    /// Parses `"0.08"`, `"7/85"`, or a bare integer, all exactly.
    pub fn parse(s: &str) -> Result<Fraction, ParseFractionError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseFractionError::Empty);
        }
        if let Some((n, d)) = s.split_once('/') {
            let num = parse_u64(n)?;
            let den = parse_u64(d)?;
            if den == 0 {
                return Err(ParseFractionError::ZeroDenominator);
            }
            return Ok(Fraction::new(num, den));
        }
        let (int_part, frac_part) = match s.split_once('.') {
            Some((i, f)) => (i, f),
            None => (s, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(ParseFractionError::Empty);
        }
        if frac_part.len() > 18 {
            return Err(ParseFractionError::Overflow);
        }
        let int_val = if int_part.is_empty() {
            0
        } else {
            parse_u64(int_part)?
        };
        let frac_val = if frac_part.is_empty() {
            0
        } else {
            parse_u64(frac_part)?
        };
        let den = 10u64
            .checked_pow(frac_part.len() as u32)
            .ok_or(ParseFractionError::Overflow)?;
        let num = int_val
            .checked_mul(den)
            .and_then(|v| v.checked_add(frac_val))
            .ok_or(ParseFractionError::Overflow)?;
        Ok(Fraction::new(num, den))
    }

    /// Renders as a finite decimal when the reduced denominator is of the form
    /// 2^a * 5^b, e.g. `3/20` -> `"0.15"`. Returns `None` otherwise.
    pub fn to_decimal_string(&self) -> Option<String> {
        use core::fmt::Write;
        let mut d = self.den;
        let mut twos = 0u32;
        let mut fives = 0u32;
        while d % 2 == 0 {
            d /= 2;
            twos += 1;
        }
        while d % 5 == 0 {
            d /= 5;
            fives += 1;
        }
        if d != 1 {
            return None;
        }
        let digits = twos.max(fives);
        let scale = 10u128.pow(digits);
        let scaled = self.num as u128 * scale / self.den as u128;
        let int = scaled / scale;
        let frac = scaled % scale;
        let mut out = String::new();
        if digits == 0 {
            let _ = write!(out, "{int}");
        } else {
            let _ = write!(out, "{int}.{frac:0width$}", width = digits as usize);
        }
        Some(out)
    }
}

fn parse_u64(s: &str) -> Result<u64, ParseFractionError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseFractionError::Empty);
    }
    if !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseFractionError::InvalidDigit);
    }
    s.parse::<u64>().map_err(|_| ParseFractionError::Overflow)
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Fraction) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Fraction) -> Ordering {
        let lhs = self.num as u128 * other.den as u128;
        let rhs = other.num as u128 * self.den as u128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}
