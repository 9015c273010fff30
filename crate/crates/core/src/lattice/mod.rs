//! Dyck words, Motzkin paths and compositions, the free-block reduction that
//! links them, and the finite count of order-3 132-avoiders built on top.
//!
//! A 3-cycle on `a < b < c` is drawn as the 3-arc `[a, b, c]`. For a
//! 132-avoider made of `m` such arcs the first entries are exactly `1..=m`,
//! and the word on positions `m+1..=3m` with `0` for a middle entry and `1`
//! for a last entry is a Dyck word. The `i`-th `0` is always matched to the
//! `i`-th `1`.

mod bijection;
mod counting;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::perm::Permutation;

pub use bijection::{
    dyck_to_motzkin, free_decomposition, motzkin_to_dyck, reduce, FreeBlock, FreeBlockDecomposition,
};
pub use counting::{
    all_compositions, all_dyck_words, binomial, catalan_number, compositions, first_catalan_count,
    motzkin_flat_count, motzkin_number, order3_count, order3_count_with, BinomialVariant,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("not a Dyck word: {0:?}")]
    NotDyck(String),
    #[error("not a Motzkin path: {0:?}")]
    NotMotzkin(String),
    #[error("not a composition: {0:?}")]
    NotComposition(String),
    #[error("{0} has a cycle that is not a 3-cycle")]
    NotThreeCyclesOnly(String),
    #[error("{0}: first entries of the 3-arcs are not 1..={1}")]
    FirstEntriesNotInitial(String, usize),
    #[error("composition has {parts} parts but the path needs {needed}")]
    LengthMismatch { parts: usize, needed: usize },
}

/// A balanced word over `{0, 1}`; `true` stands for `1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckWord(Vec<bool>);

impl DyckWord {
    pub fn new(bits: Vec<bool>) -> Result<Self, LatticeError> {
        let mut height = 0i64;
        for &b in &bits {
            height += if b { -1 } else { 1 };
            if height < 0 {
                break;
            }
        }
        if height != 0 {
            return Err(LatticeError::NotDyck(bits_to_string(&bits)));
        }
        Ok(Self(bits))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn semilength(&self) -> usize {
        self.0.len() / 2
    }

    /// Positions of the zeros and of the ones, 0-based; entry `i` of each is
    /// the `i`-th matched pair.
    pub fn matching(&self) -> (Vec<usize>, Vec<usize>) {
        let mut zeros = Vec::with_capacity(self.semilength());
        let mut ones = Vec::with_capacity(self.semilength());
        for (pos, &b) in self.0.iter().enumerate() {
            if b {
                ones.push(pos);
            } else {
                zeros.push(pos);
            }
        }
        (zeros, ones)
    }

    /// Even positions where the prefix is balanced, including `0` and the
    /// full length.
    pub fn hits(&self) -> Vec<usize> {
        let mut out = vec![0];
        let mut height = 0i64;
        for (pos, &b) in self.0.iter().enumerate() {
            height += if b { -1 } else { 1 };
            if height == 0 {
                out.push(pos + 1);
            }
        }
        out
    }
}

fn bits_to_string(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

pub fn hits(d: &DyckWord) -> Vec<usize> {
    d.hits()
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&bits_to_string(&self.0))
    }
}

impl fmt::Debug for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyckWord({self})")
    }
}

impl FromStr for DyckWord {
    type Err = LatticeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bits = s
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(LatticeError::NotDyck(s.to_string())),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(bits)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MotzkinStep {
    Up,
    Down,
    Flat,
}

impl MotzkinStep {
    fn letter(self) -> char {
        match self {
            MotzkinStep::Up => 'u',
            MotzkinStep::Down => 'd',
            MotzkinStep::Flat => 'f',
        }
    }
}

/// A word over `{u, d, f}` that never dips below its start and ends level.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MotzkinPath(Vec<MotzkinStep>);

impl MotzkinPath {
    pub fn new(steps: Vec<MotzkinStep>) -> Result<Self, LatticeError> {
        let mut height = 0i64;
        for &s in &steps {
            match s {
                MotzkinStep::Up => height += 1,
                MotzkinStep::Down => height -= 1,
                MotzkinStep::Flat => {}
            }
            if height < 0 {
                break;
            }
        }
        if height != 0 {
            let text: String = steps.iter().map(|s| s.letter()).collect();
            return Err(LatticeError::NotMotzkin(text));
        }
        Ok(Self(steps))
    }

    pub fn steps(&self) -> &[MotzkinStep] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn flats_at_level_zero(&self) -> usize {
        let mut height = 0i64;
        let mut flats = 0;
        for &s in &self.0 {
            match s {
                MotzkinStep::Up => height += 1,
                MotzkinStep::Down => height -= 1,
                MotzkinStep::Flat if height == 0 => flats += 1,
                MotzkinStep::Flat => {}
            }
        }
        flats
    }
}

impl fmt::Display for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.letter()))
    }
}

impl fmt::Debug for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MotzkinPath({self})")
    }
}

impl FromStr for MotzkinPath {
    type Err = LatticeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'u' | 'U' => Ok(MotzkinStep::Up),
                'd' | 'D' => Ok(MotzkinStep::Down),
                'f' | 'F' => Ok(MotzkinStep::Flat),
                _ => Err(LatticeError::NotMotzkin(s.to_string())),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(steps)
    }
}

/// A nonempty sequence of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, LatticeError> {
        if parts.is_empty() || parts.contains(&0) {
            let text: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
            return Err(LatticeError::NotComposition(text.join(",")));
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&text.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Composition {
    type Err = LatticeError;

    /// `"2,1,1"`, optionally parenthesised.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = body
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| LatticeError::NotComposition(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(parts)
    }
}

macro_rules! serde_via_string {
    ($ty:ty) => {
        impl Serialize for $ty {
            fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                serializer.collect_str(self)
            }
        }

        impl<'de> Deserialize<'de> for $ty {
            fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
                let s = String::deserialize(deserializer)?;
                s.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

serde_via_string!(DyckWord);
serde_via_string!(MotzkinPath);
serde_via_string!(Composition);

/// The 3-arcs `[a, b, c]` of a permutation made only of 3-cycles, sorted by
/// their first entry.
pub fn three_arcs(p: &Permutation) -> Result<Vec<[usize; 3]>, LatticeError> {
    let mut arcs = Vec::new();
    for cycle in p.decompose().cycles() {
        if cycle.len() != 3 {
            return Err(LatticeError::NotThreeCyclesOnly(p.to_string()));
        }
        let mut s = [cycle[0], cycle[1], cycle[2]];
        s.sort_unstable();
        arcs.push(s);
    }
    arcs.sort_unstable();
    Ok(arcs)
}

/// The Dyck word of a permutation of `[3m]` made only of 3-cycles whose
/// first entries are `1..=m`.
pub fn dyck_word_of(p: &Permutation) -> Result<DyckWord, LatticeError> {
    let arcs = three_arcs(p)?;
    let m = arcs.len();
    if arcs.iter().enumerate().any(|(i, arc)| arc[0] != i + 1) {
        return Err(LatticeError::FirstEntriesNotInitial(p.to_string(), m));
    }
    let mut bits = vec![false; 2 * m];
    for arc in &arcs {
        bits[arc[2] - m - 1] = true;
    }
    DyckWord::new(bits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dyck(s: &str) -> DyckWord {
        s.parse().unwrap()
    }

    #[test]
    fn dyck_word_of_examples() {
        let p = Permutation::from_cycles(12, &[[1, 11, 12], [2, 10, 8], [3, 9, 6], [4, 7, 5]]).unwrap();
        assert_eq!(p.to_string(), "11 10 9 7 4 3 5 2 6 8 12 1");
        assert_eq!(dyck_word_of(&p).unwrap(), dyck("00101101"));
        assert_eq!(dyck_word_of(&"231".parse().unwrap()).unwrap(), dyck("01"));
        // (1,3,2)(4,6,5) is not of the required shape: 4 is a first entry.
        let stacked = Permutation::from_cycles(6, &[[1, 3, 2], [4, 6, 5]]).unwrap();
        assert!(matches!(dyck_word_of(&stacked), Err(LatticeError::FirstEntriesNotInitial(..))));
        // First entries 1 and 2, so both arcs contribute to the word.
        let q = Permutation::from_cycles(6, &[[1, 4, 5], [2, 3, 6]]).unwrap();
        assert_eq!(dyck_word_of(&q).unwrap(), dyck("0011"));
        let r = Permutation::from_cycles(6, &[[1, 5, 6], [2, 3, 4]]).unwrap();
        assert_eq!(dyck_word_of(&r).unwrap(), dyck("0101"));
    }

    #[test]
    fn dyck_word_of_rejects_other_cycle_types() {
        assert!(matches!(dyck_word_of(&"213".parse().unwrap()), Err(LatticeError::NotThreeCyclesOnly(_))));
        assert!(matches!(dyck_word_of(&"1".parse().unwrap()), Err(LatticeError::NotThreeCyclesOnly(_))));
    }

    #[test]
    fn hits_examples() {
        assert_eq!(dyck("00101101").hits(), vec![0, 6, 8]);
        assert_eq!(dyck("01").hits(), vec![0, 2]);
        assert_eq!(dyck("0011").hits(), vec![0, 4]);
        assert_eq!(DyckWord::empty().hits(), vec![0]);
    }

    #[test]
    fn parsing_and_validation() {
        assert!("0110".parse::<DyckWord>().is_err());
        assert!("001".parse::<DyckWord>().is_err());
        assert!("0a".parse::<DyckWord>().is_err());
        assert_eq!("ududf".parse::<MotzkinPath>().unwrap().to_string(), "ududf");
        assert!("du".parse::<MotzkinPath>().is_err());
        assert!("uu".parse::<MotzkinPath>().is_err());
        assert_eq!("(2,1,1)".parse::<Composition>().unwrap().parts(), &[2, 1, 1]);
        assert!("2,0".parse::<Composition>().is_err());
        assert!("".parse::<Composition>().is_err());
    }

    #[test]
    fn flats_at_level_zero() {
        assert_eq!("fuffdf".parse::<MotzkinPath>().unwrap().flats_at_level_zero(), 2);
        assert_eq!("".parse::<MotzkinPath>().unwrap().flats_at_level_zero(), 0);
    }

    #[test]
    fn serde_as_strings() {
        let d = dyck("0101");
        let json = serde_json::to_value(&d).unwrap();
        assert_eq!(json, "0101");
        assert_eq!(serde_json::from_value::<DyckWord>(json).unwrap(), d);
    }
}
