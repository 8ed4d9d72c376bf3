//! Extended natural periods and per-position period arrays.

use std::fmt;
use std::ops::Index;

use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};

/// A period length `m >= 1`, or `Infinite` when no such power exists.
///
/// `Infinite` orders after every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Period {
    Finite(usize),
    Infinite,
}

impl Period {
    pub fn is_finite(self) -> bool {
        matches!(self, Period::Finite(_))
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Period::Finite(m) => Some(m),
            Period::Infinite => None,
        }
    }
}

impl From<Option<usize>> for Period {
    fn from(v: Option<usize>) -> Self {
        v.map_or(Period::Infinite, Period::Finite)
    }
}

impl fmt::Display for Period {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Period::Finite(m) => write!(f, "{m}"),
            Period::Infinite => f.write_str("inf"),
        }
    }
}

// JSON: a number, or null for infinity.
impl Serialize for Period {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Period::Finite(m) => s.serialize_u64(*m as u64),
            Period::Infinite => s.serialize_none(),
        }
    }
}

impl<'de> Deserialize<'de> for Period {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match Option::<u64>::deserialize(d)? {
            None => Ok(Period::Infinite),
            Some(0) => Err(de::Error::custom("period must be at least 1")),
            Some(m) => Ok(Period::Finite(m as usize)),
        }
    }
}

/// Periods indexed by 1-based position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PeriodArray(Vec<Period>);

impl PeriodArray {
    pub fn new(entries: Vec<Period>) -> Self {
        PeriodArray(entries)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entry at 1-based position `i`.
    pub fn get(&self, i: usize) -> Period {
        self.0[i - 1]
    }

    pub fn as_slice(&self) -> &[Period] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = Period> + '_ {
        self.0.iter().copied()
    }

    pub fn into_vec(self) -> Vec<Period> {
        self.0
    }
}

impl Index<usize> for PeriodArray {
    type Output = Period;

    /// 1-based.
    fn index(&self, i: usize) -> &Period {
        &self.0[i - 1]
    }
}

impl From<Vec<Period>> for PeriodArray {
    fn from(v: Vec<Period>) -> Self {
        PeriodArray(v)
    }
}
