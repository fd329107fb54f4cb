//! Dyadic rationals: the numbers that arise as values of finite partizan
//! games. Always kept in lowest terms (odd numerator unless the value is an
//! integer with exponent zero).

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

use crate::values::ValueError;

/// `numerator / 2^exponent`, normalized so `exponent == 0` or `numerator`
/// is odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DyadicRational {
    numerator: i64,
    exponent: u32,
}

impl DyadicRational {
    pub fn new(numerator: i64, exponent: u32) -> Result<Self, ValueError> {
        let mut n = numerator;
        let mut e = exponent;
        while e > 0 && n % 2 == 0 {
            n /= 2;
            e -= 1;
        }
        if e > 62 {
            return Err(ValueError::Overflow);
        }
        Ok(DyadicRational { numerator: n, exponent: e })
    }

    pub fn integer(n: i64) -> Self {
        DyadicRational { numerator: n, exponent: 0 }
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn numerator(self) -> i64 {
        self.numerator
    }

    pub fn exponent(self) -> u32 {
        self.exponent
    }

    pub fn is_integer(self) -> bool {
        self.exponent == 0
    }

    pub fn is_zero(self) -> bool {
        self.numerator == 0
    }

    /// Integer value, or `None` if there is a fractional part.
    pub fn as_integer(self) -> Option<i64> {
        self.is_integer().then_some(self.numerator)
    }

    pub fn checked_add(self, other: Self) -> Result<Self, ValueError> {
        let e = self.exponent.max(other.exponent);
        let a = (self.numerator as i128) << (e - self.exponent);
        let b = (other.numerator as i128) << (e - other.exponent);
        let sum = a + b;
        let n = i64::try_from(sum).map_err(|_| ValueError::Overflow)?;
        Self::new(n, e)
    }

    pub fn checked_neg(self) -> Result<Self, ValueError> {
        let n = self.numerator.checked_neg().ok_or(ValueError::Overflow)?;
        Ok(DyadicRational { numerator: n, exponent: self.exponent })
    }

    pub fn checked_sub(self, other: Self) -> Result<Self, ValueError> {
        self.checked_add(other.checked_neg()?)
    }

    /// Number born earliest in `(lo, hi)` exclusive: the unique simplest
    /// dyadic strictly between the endpoints. `None` bounds are open rays.
    pub fn simplest_between(lo: Option<Self>, hi: Option<Self>) -> Result<Self, ValueError> {
        if let (Some(l), Some(h)) = (lo, hi) {
            if l >= h {
                return Err(ValueError::EmptyInterval);
            }
        }
        // Try integers first: the one of smallest absolute value wins, with
        // ties broken toward zero (only relevant when 0 itself qualifies).
        let int_ok = |n: i64| {
            lo.map_or(true, |l| Self::integer(n) > l) && hi.map_or(true, |h| Self::integer(n) < h)
        };
        if int_ok(0) {
            return Ok(Self::zero());
        }
        match (lo, hi) {
            (Some(l), _) if l >= Self::zero() => {
                // Smallest integer above l, if it fits below hi.
                let n = l.floor_i64() + 1;
                if int_ok(n) {
                    return Ok(Self::integer(n));
                }
            }
            (_, Some(h)) if h <= Self::zero() => {
                let n = h.ceil_i64() - 1;
                if int_ok(n) {
                    return Ok(Self::integer(n));
                }
            }
            _ => {}
        }
        // No integer fits: both bounds are present and within one unit.
        let (l, h) = (lo.ok_or(ValueError::EmptyInterval)?, hi.ok_or(ValueError::EmptyInterval)?);
        // Increase the denominator until some p/2^e lands strictly inside;
        // the first such point is the simplest.
        for e in 1..=62u32 {
            let p = l.mul_pow2_floor(e) + 1;
            let candidate = Self::new(i64::try_from(p).map_err(|_| ValueError::Overflow)?, e)?;
            if candidate > l && candidate < h {
                return Ok(candidate);
            }
        }
        Err(ValueError::Overflow)
    }

    fn floor_i64(self) -> i64 {
        if self.exponent == 0 {
            self.numerator
        } else {
            self.numerator.div_euclid(1 << self.exponent)
        }
    }

    fn ceil_i64(self) -> i64 {
        if self.exponent == 0 {
            self.numerator
        } else {
            -((-self.numerator).div_euclid(1 << self.exponent))
        }
    }

    /// `floor(self * 2^e)` as an i128 (no overflow for e <= 62).
    fn mul_pow2_floor(self, e: u32) -> i128 {
        let n = self.numerator as i128;
        if e >= self.exponent {
            n << (e - self.exponent)
        } else {
            n.div_euclid(1 << (self.exponent - e))
        }
    }
}

impl PartialOrd for DyadicRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DyadicRational {
    fn cmp(&self, other: &Self) -> Ordering {
        let e = self.exponent.max(other.exponent);
        let a = (self.numerator as i128) << (e - self.exponent);
        let b = (other.numerator as i128) << (e - other.exponent);
        a.cmp(&b)
    }
}

impl fmt::Display for DyadicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, 1i64 << self.exponent)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: i64, e: u32) -> DyadicRational {
        DyadicRational::new(n, e).unwrap()
    }

    #[test]
    fn normalizes_to_lowest_terms() {
        assert_eq!(d(4, 2), DyadicRational::integer(1));
        assert_eq!(d(6, 1), DyadicRational::integer(3));
        assert_eq!(d(2, 3), d(1, 2));
        assert_eq!(d(0, 5), DyadicRational::zero());
    }

    #[test]
    fn ordering_crosses_denominators() {
        assert!(d(1, 1) < DyadicRational::integer(1));
        assert!(d(3, 2) > d(1, 1));
        assert!(d(-1, 1) < DyadicRational::zero());
    }

    #[test]
    fn addition_and_negation() {
        assert_eq!(d(1, 1).checked_add(d(1, 1)).unwrap(), DyadicRational::integer(1));
        assert_eq!(d(1, 1).checked_add(d(1, 2)).unwrap(), d(3, 2));
        assert_eq!(d(3, 2).checked_neg().unwrap(), d(-3, 2));
        assert_eq!(
            DyadicRational::integer(5).checked_sub(DyadicRational::integer(7)).unwrap(),
            DyadicRational::integer(-2)
        );
    }

    #[test]
    fn simplest_between_picks_integers_first() {
        let s = |lo, hi| DyadicRational::simplest_between(lo, hi).unwrap();
        assert_eq!(s(Some(d(-1, 1)), Some(d(1, 1))), DyadicRational::zero());
        assert_eq!(s(Some(DyadicRational::integer(2)), None), DyadicRational::integer(3));
        assert_eq!(s(None, Some(DyadicRational::integer(-2))), DyadicRational::integer(-3));
        assert_eq!(s(None, None), DyadicRational::zero());
        // 0 < x < 1 gives 1/2; 1/2 < x < 1 gives 3/4.
        assert_eq!(s(Some(DyadicRational::zero()), Some(DyadicRational::integer(1))), d(1, 1));
        assert_eq!(s(Some(d(1, 1)), Some(DyadicRational::integer(1))), d(3, 2));
        // 1/4 < x < 1/2 has no denominator-2 point strictly inside: 3/8.
        assert_eq!(s(Some(d(1, 2)), Some(d(1, 1))), d(3, 3));
        // 0 < x < 2 prefers the integer 1 over 1/2.
        assert_eq!(s(Some(DyadicRational::zero()), Some(DyadicRational::integer(2))), DyadicRational::integer(1));
    }

    #[test]
    fn simplest_between_rejects_empty_interval() {
        let err = DyadicRational::simplest_between(
            Some(DyadicRational::integer(1)),
            Some(DyadicRational::integer(1)),
        );
        assert!(matches!(err, Err(ValueError::EmptyInterval)));
    }

    #[test]
    fn display_forms() {
        assert_eq!(DyadicRational::integer(-3).to_string(), "-3");
        assert_eq!(d(1, 1).to_string(), "1/2");
        assert_eq!(d(-7, 3).to_string(), "-7/8");
    }
}
