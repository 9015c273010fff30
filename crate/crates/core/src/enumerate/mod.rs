//! Brute-force oracle: build every permutation of `[n]` whose cycle lengths
//! lie in a set `S`, filter by pattern avoidance, and tabulate.
//!
//! Permutations are built cycle by cycle rather than by filtering `S_n`: the
//! smallest unplaced element opens a cycle, its length is chosen from `S` in
//! increasing order, the other members are chosen as an ascending
//! combination of larger unplaced elements (lexicographic), and finally the
//! members are arranged in lexicographic order after the opener. For a
//! 3-cycle on `a < b < c` this gives `(a,b,c)` before `(a,c,b)`.
//!
//! Whenever the opener is `a`, positions `1..a` are already fixed, and so is
//! every other placed position. The pruned search checks the placed letters
//! for a pattern occurrence after each cycle and abandons the subtree early.

mod census;
mod generate;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use census::{
    collect_avoiders, count_avoiders, group_by_dyck_word, refined_census, Census, CensusKey,
};
pub use generate::{first_cycles, generate_cycle_constrained, CycleConstrained};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("cycle-length set must be nonempty")]
    EmptyCycleSet,
    #[error("cycle length 0 is meaningless")]
    ZeroLength,
    #[error("census keys only record cycle lengths 1, 2, 3; got {0}")]
    UnsupportedCycleLength(usize),
    #[error("cannot parse cycle-length set {0:?}")]
    Parse(String),
    #[error("malformed census JSON: {0}")]
    Json(String),
}

/// A nonempty set of allowed cycle lengths.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleSet(BTreeSet<usize>);

impl CycleSet {
    pub fn new(lengths: impl IntoIterator<Item = usize>) -> Result<Self, EnumerateError> {
        let set: BTreeSet<usize> = lengths.into_iter().collect();
        if set.is_empty() {
            return Err(EnumerateError::EmptyCycleSet);
        }
        if set.contains(&0) {
            return Err(EnumerateError::ZeroLength);
        }
        Ok(Self(set))
    }

    /// `{1, 2, 3}`.
    pub fn up_to_three() -> Self {
        Self([1, 2, 3].into())
    }

    /// `{1, 3}`: permutations of order dividing three.
    pub fn order_three() -> Self {
        Self([1, 3].into())
    }

    /// All seven nonempty subsets of `{1, 2, 3}`, in the order used by the
    /// published table: {1}, {2}, {3}, {1,2}, {1,3}, {2,3}, {1,2,3}.
    pub fn all_subsets_of_three() -> Vec<Self> {
        [&[1][..], &[2], &[3], &[1, 2], &[1, 3], &[2, 3], &[1, 2, 3]]
            .iter()
            .map(|s| Self(s.iter().copied().collect()))
            .collect()
    }

    pub fn contains(&self, len: usize) -> bool {
        self.0.contains(&len)
    }

    pub fn lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn max_length(&self) -> usize {
        *self.0.iter().next_back().expect("nonempty")
    }

    /// Compact key such as `"123"` or `"13"`.
    pub fn key(&self) -> String {
        self.0.iter().map(|l| l.to_string()).collect()
    }
}

impl fmt::Display for CycleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for CycleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for CycleSet {
    type Err = EnumerateError;

    /// `"1,2,3"`, `"{1,3}"`, or `"1 3"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s.trim().trim_start_matches('{').trim_end_matches('}');
        let lengths = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| EnumerateError::Parse(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(lengths)
    }
}

impl Serialize for CycleSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter())
    }
}

impl<'de> Deserialize<'de> for CycleSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(deserializer)?;
        Self::new(v).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_set_parsing() {
        assert_eq!("1,2,3".parse::<CycleSet>().unwrap(), CycleSet::up_to_three());
        assert_eq!("{3,1}".parse::<CycleSet>().unwrap(), CycleSet::order_three());
        assert_eq!("".parse::<CycleSet>(), Err(EnumerateError::EmptyCycleSet));
        assert_eq!("0,1".parse::<CycleSet>(), Err(EnumerateError::ZeroLength));
        assert!("1,a".parse::<CycleSet>().is_err());
        assert_eq!(CycleSet::up_to_three().to_string(), "{1,2,3}");
        assert_eq!(CycleSet::order_three().key(), "13");
    }
}
