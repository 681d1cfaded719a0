//! Fixed-point edit costs.
//!
//! Costs are counted in tenths of one classic edit, so a confusion weight of
//! 0.4 is the exact integer 4 and distance ties compare exactly.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use crate::error::Error;

/// An edit cost in tenths of one classic edit (`CostUnits(10)` is 1.0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CostUnits(pub u32);

impl CostUnits {
    pub const ZERO: CostUnits = CostUnits(0);
    /// The cost of one classic edit.
    pub const ONE: CostUnits = CostUnits(10);
    pub const MAX: CostUnits = CostUnits(u32::MAX);

    pub const fn units(self) -> u32 {
        self.0
    }

    /// Number of whole classic edits, for distances known to be classic.
    pub const fn edits(self) -> u32 {
        self.0 / 10
    }

    pub fn saturating_add(self, other: CostUnits) -> CostUnits {
        CostUnits(self.0.saturating_add(other.0))
    }
}

impl Add for CostUnits {
    type Output = CostUnits;

    fn add(self, rhs: CostUnits) -> CostUnits {
        CostUnits(self.0 + rhs.0)
    }
}

impl AddAssign for CostUnits {
    fn add_assign(&mut self, rhs: CostUnits) {
        self.0 += rhs.0;
    }
}

impl Mul<u32> for CostUnits {
    type Output = CostUnits;

    fn mul(self, rhs: u32) -> CostUnits {
        CostUnits(self.0 * rhs)
    }
}

/// Formats as a decimal with one fractional digit: `CostUnits(8)` is `0.8`.
impl fmt::Display for CostUnits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.0 / 10, self.0 % 10)
    }
}

/// Parses decimals such as `0.4`, `1`, `2.0` or `.5`. Any digits beyond the
/// first fractional digit must be zero, so the value is an exact multiple of
/// 0.1.
impl FromStr for CostUnits {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let invalid = || Error::InvalidCost(s.to_string());
        let text = s.trim();
        let (whole, frac) = match text.split_once('.') {
            Some((w, f)) => (w, f),
            None => (text, ""),
        };
        if whole.is_empty() && frac.is_empty() {
            return Err(invalid());
        }
        let all_digits = |p: &str| p.bytes().all(|b| b.is_ascii_digit());
        if !all_digits(whole) || !all_digits(frac) {
            return Err(invalid());
        }
        let whole: u32 = if whole.is_empty() {
            0
        } else {
            whole.parse().map_err(|_| invalid())?
        };
        let mut frac_digits = frac.bytes();
        let tenths = frac_digits.next().map_or(0, |b| u32::from(b - b'0'));
        if frac_digits.any(|b| b != b'0') {
            return Err(invalid());
        }
        whole
            .checked_mul(10)
            .and_then(|w| w.checked_add(tenths))
            .map(CostUnits)
            .ok_or_else(invalid)
    }
}
