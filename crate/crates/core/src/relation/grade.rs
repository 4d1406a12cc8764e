//! Exact confidence grades in the unit interval and belief/doubt pairs.
//!
//! Every operator in the algebra is built from `max`, `min` and `1 - x`, so a
//! grade never needs general addition. Grades are kept as reduced fractions,
//! which makes equality structural and table reproduction bit-exact.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A rational number in `[0, 1]`, always in lowest terms.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Grade {
    num: u64,
    den: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

impl Grade {
    pub const ZERO: Grade = Grade { num: 0, den: 1 };
    pub const ONE: Grade = Grade { num: 1, den: 1 };

    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::MalformedGrade(format!("{num}/{den}")));
        }
        if num > den {
            return Err(Error::GradeOutOfRange(format!("{num}/{den}")));
        }
        let g = gcd(num, den);
        Ok(Grade {
            num: num / g,
            den: den / g,
        })
    }

    pub fn numer(self) -> u64 {
        self.num
    }

    pub fn denom(self) -> u64 {
        self.den
    }

    /// `1 - self`. Stays reduced: gcd(den - num, den) = gcd(num, den).
    pub fn complement(self) -> Self {
        Grade {
            num: self.den - self.num,
            den: self.den,
        }
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    fn terminates(self) -> bool {
        let mut d = self.den;
        while d.is_multiple_of(2) {
            d /= 2;
        }
        while d.is_multiple_of(5) {
            d /= 5;
        }
        d == 1
    }
}

impl Ord for Grade {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num as u128 * other.den as u128;
        let rhs = other.num as u128 * self.den as u128;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for Grade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Default for Grade {
    fn default() -> Self {
        Grade::ZERO
    }
}

/// Shortest exact decimal when the expansion terminates, `p/q` otherwise.
impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.terminates() {
            return write!(f, "{}/{}", self.num, self.den);
        }
        let whole = self.num / self.den;
        let mut rem = (self.num % self.den) as u128;
        write!(f, "{whole}")?;
        if rem == 0 {
            return Ok(());
        }
        let den = self.den as u128;
        let mut digits = String::new();
        while rem != 0 {
            rem *= 10;
            digits.push(char::from(b'0' + (rem / den) as u8));
            rem %= den;
        }
        write!(f, ".{digits}")
    }
}

impl fmt::Debug for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

const MAX_FRACTION_DIGITS: usize = 18;

/// Accepts `p/q` or a plain decimal such as `0.85`, `1`, `1.00`.
impl FromStr for Grade {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        let malformed = || Error::MalformedGrade(text.to_string());
        if text.starts_with('-') {
            return Err(Error::GradeOutOfRange(text.to_string()));
        }
        if let Some((p, q)) = text.split_once('/') {
            let p: u64 = p.trim().parse().map_err(|_| malformed())?;
            let q: u64 = q.trim().parse().map_err(|_| malformed())?;
            return Grade::new(p, q);
        }
        let (int_part, frac_part) = match text.split_once('.') {
            Some((i, f)) => (i, f),
            None => (text, ""),
        };
        let all_digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
        if (int_part.is_empty() && frac_part.is_empty())
            || !all_digits(int_part)
            || !all_digits(frac_part)
        {
            return Err(malformed());
        }
        let frac_part = frac_part.trim_end_matches('0');
        if frac_part.len() > MAX_FRACTION_DIGITS {
            return Err(malformed());
        }
        let int_value: u64 = if int_part.is_empty() {
            0
        } else {
            int_part.parse().map_err(|_| malformed())?
        };
        if int_value > 1 || (int_value == 1 && !frac_part.is_empty()) {
            return Err(Error::GradeOutOfRange(text.to_string()));
        }
        let den = 10u64.pow(frac_part.len() as u32);
        let frac: u64 = if frac_part.is_empty() {
            0
        } else {
            frac_part.parse().map_err(|_| malformed())?
        };
        Grade::new(int_value * den + frac, den)
    }
}

/// One ⟨belief, doubt⟩ annotation. The two components are independent; their
/// sum may fall below 1 (incomplete) or exceed it (inconsistent).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ConfidencePair {
    pub belief: Grade,
    pub doubt: Grade,
}

impl ConfidencePair {
    /// The implicit value of every unstored tuple: no information either way.
    pub const UNKNOWN: ConfidencePair = ConfidencePair {
        belief: Grade::ZERO,
        doubt: Grade::ZERO,
    };
    pub const TRUE: ConfidencePair = ConfidencePair {
        belief: Grade::ONE,
        doubt: Grade::ZERO,
    };
    pub const FALSE: ConfidencePair = ConfidencePair {
        belief: Grade::ZERO,
        doubt: Grade::ONE,
    };

    pub fn new(belief: Grade, doubt: Grade) -> Self {
        ConfidencePair { belief, doubt }
    }

    /// Parses both components with [`Grade::from_str`].
    pub fn parse(belief: &str, doubt: &str) -> Result<Self> {
        Ok(ConfidencePair::new(belief.parse()?, doubt.parse()?))
    }

    /// Compares `belief + doubt` against 1 without leaving the unit interval.
    pub fn sum_cmp_one(self) -> Ordering {
        self.belief.cmp(&self.doubt.complement())
    }

    pub fn is_consistent(self) -> bool {
        self.sum_cmp_one() != Ordering::Greater
    }

    pub fn is_complete(self) -> bool {
        self.sum_cmp_one() != Ordering::Less
    }

    pub fn is_exact(self) -> bool {
        self.sum_cmp_one() == Ordering::Equal
    }

    pub fn is_unknown(self) -> bool {
        self == ConfidencePair::UNKNOWN
    }

    pub fn swap(self) -> Self {
        ConfidencePair::new(self.doubt, self.belief)
    }
}

impl fmt::Display for ConfidencePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, {}>", self.belief, self.doubt)
    }
}

impl fmt::Debug for ConfidencePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
