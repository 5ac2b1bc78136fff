use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// An exact weight `numerator / 2^log2_denominator`, kept in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyadicWeight {
    numerator: u64,
    log2_denominator: u32,
}

impl DyadicWeight {
    pub fn new(numerator: u64, log2_denominator: u32) -> DyadicWeight {
        let mut w = DyadicWeight { numerator, log2_denominator };
        while w.log2_denominator > 0 && w.numerator.is_multiple_of(2) {
            w.numerator /= 2;
            w.log2_denominator -= 1;
        }
        if w.numerator == 0 {
            w.log2_denominator = 0;
        }
        w
    }

    pub fn zero() -> DyadicWeight {
        DyadicWeight::new(0, 0)
    }

    pub fn one() -> DyadicWeight {
        DyadicWeight::new(1, 0)
    }

    pub fn numerator(self) -> u64 {
        self.numerator
    }

    pub fn log2_denominator(self) -> u32 {
        self.log2_denominator
    }

    pub fn checked_add(self, other: DyadicWeight) -> Option<DyadicWeight> {
        let k = self.log2_denominator.max(other.log2_denominator);
        let a = self.numerator.checked_shl(k - self.log2_denominator)?;
        let b = other.numerator.checked_shl(k - other.log2_denominator)?;
        Some(DyadicWeight::new(a.checked_add(b)?, k))
    }

    /// Numerator over the fixed denominator `2^k`, if `k` is large enough.
    pub fn numerator_over(self, k: u32) -> Option<u64> {
        k.checked_sub(self.log2_denominator).map(|s| self.numerator << s)
    }
}

impl fmt::Display for DyadicWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/2^{}", self.numerator, self.log2_denominator)
    }
}

impl FromStr for DyadicWeight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidArgument(format!("not a dyadic weight: {s:?}"));
        let (n, k) = s.split_once("/2^").ok_or_else(bad)?;
        Ok(DyadicWeight::new(n.parse().map_err(|_| bad())?, k.parse().map_err(|_| bad())?))
    }
}

impl Serialize for DyadicWeight {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DyadicWeight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}
