//! Natural numbers extended with a top element.
//!
//! Every winning number and every formula result in this crate is an
//! [`ExtendedCount`]: Staller either wins within some number of moves or
//! cannot win at all, which is represented by [`ExtendedCount::Infinite`].

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A natural number or infinity. `Infinite` is the maximum of the order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtendedCount {
    Finite(u32),
    Infinite,
}

pub use ExtendedCount::{Finite, Infinite};

impl ExtendedCount {
    pub const INFINITY: ExtendedCount = ExtendedCount::Infinite;

    pub fn is_finite(self) -> bool {
        matches!(self, Finite(_))
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Infinite)
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Finite(v) => Some(v),
            Infinite => None,
        }
    }

    /// `x + 1`, with `INF + 1 = INF`.
    pub fn succ(self) -> Self {
        self.plus(1)
    }

    pub fn plus(self, k: u32) -> Self {
        match self {
            Finite(v) => Finite(v + k),
            Infinite => Infinite,
        }
    }

    /// `x - 1` saturating at zero; `INF - 1 = INF`.
    pub fn pred(self) -> Self {
        match self {
            Finite(v) => Finite(v.saturating_sub(1)),
            Infinite => Infinite,
        }
    }
}

impl Ord for ExtendedCount {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinite) => Ordering::Less,
            (Infinite, Finite(_)) => Ordering::Greater,
            (Infinite, Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for ExtendedCount {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<u32> for ExtendedCount {
    fn from(v: u32) -> Self {
        Finite(v)
    }
}

impl fmt::Display for ExtendedCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Finite(v) => write!(f, "{v}"),
            Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for ExtendedCount {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "inf" => Ok(Infinite),
            t => t
                .parse::<u32>()
                .map(Finite)
                .map_err(|_| format!("not a count: {s:?}")),
        }
    }
}

// JSON has no infinity, so it travels as the string "inf".
impl Serialize for ExtendedCount {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Finite(v) => serializer.serialize_u32(*v),
            Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtendedCount {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct CountVisitor;

        impl Visitor<'_> for CountVisitor {
            type Value = ExtendedCount;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a non-negative integer or \"inf\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Self::Value, E> {
                u32::try_from(v).map(Finite).map_err(E::custom)
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Self::Value, E> {
                v.parse().map_err(E::custom)
            }
        }

        deserializer.deserialize_any(CountVisitor)
    }
}

/// `⌈log₂ n⌉` for `n ≥ 1`.
pub fn ceil_log2(n: u64) -> u32 {
    assert!(n >= 1, "ceil_log2 of zero");
    if n == 1 {
        0
    } else {
        64 - (n - 1).leading_zeros()
    }
}

/// `⌊log₂ n⌋` for `n ≥ 1`.
pub fn floor_log2(n: u64) -> u32 {
    assert!(n >= 1, "floor_log2 of zero");
    63 - n.leading_zeros()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_is_top() {
        assert!(Finite(u32::MAX) < Infinite);
        assert_eq!(Finite(3).max(Infinite), Infinite);
        assert_eq!(Finite(3).min(Infinite), Finite(3));
        assert_eq!(Infinite.succ(), Infinite);
        assert_eq!(Finite(2).succ(), Finite(3));
        assert_eq!(Infinite.pred(), Infinite);
    }

    #[test]
    fn json_uses_inf_string() {
        assert_eq!(serde_json::to_string(&Infinite).unwrap(), "\"inf\"");
        assert_eq!(serde_json::to_string(&Finite(4)).unwrap(), "4");
        let back: ExtendedCount = serde_json::from_str("\"inf\"").unwrap();
        assert_eq!(back, Infinite);
        let back: ExtendedCount = serde_json::from_str("7").unwrap();
        assert_eq!(back, Finite(7));
    }

    #[test]
    fn logs() {
        let expect_ceil = [
            (1, 0),
            (2, 1),
            (3, 2),
            (4, 2),
            (5, 3),
            (8, 3),
            (9, 4),
            (1024, 10),
            (1025, 11),
        ];
        for (n, c) in expect_ceil {
            assert_eq!(ceil_log2(n), c, "ceil_log2({n})");
            assert_eq!(f64::from(n as u32).log2().ceil() as u32, c);
        }
        for n in 1..2000u64 {
            assert_eq!(floor_log2(n), (n as f64).log2().floor() as u32);
        }
    }
}
