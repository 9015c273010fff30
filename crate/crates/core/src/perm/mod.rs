//! Permutations in one-line notation, their cycle structure, and arc diagrams.
//!
//! Values are 1-based throughout: a permutation of size `n` is a rearrangement
//! of `1..=n`, and `image(i)` is the value at position `i`. The empty
//! permutation is allowed and avoids every nonempty pattern.

mod parse;
pub mod pattern;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use pattern::contains_pattern;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("not a permutation of 1..{n}: {detail}")]
    NotBijective { n: usize, detail: String },
    #[error("cycles do not partition 1..{n}: {detail}")]
    BadCycles { n: usize, detail: String },
    #[error("expected a 3-cycle, got a cycle of length {0}")]
    NotThreeCycle(usize),
    #[error("cannot parse permutation {input:?}: {detail}")]
    Parse { input: String, detail: String },
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self, PermError> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n {
                return Err(PermError::NotBijective {
                    n,
                    detail: format!("value {v} out of range"),
                });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(PermError::NotBijective {
                    n,
                    detail: format!("value {v} repeated"),
                });
            }
        }
        Ok(Self { one_line })
    }

    /// Build from a word already known to be a permutation of `1..=n`.
    pub(crate) fn from_vec_unchecked(one_line: Vec<usize>) -> Self {
        debug_assert!(Self::new(one_line.clone()).is_ok());
        Self { one_line }
    }

    pub fn identity(n: usize) -> Self {
        Self { one_line: (1..=n).collect() }
    }

    pub fn empty() -> Self {
        Self::identity(0)
    }

    /// Build a permutation of size `n` from disjoint cycles. Elements of
    /// `1..=n` not mentioned are fixed points.
    pub fn from_cycles<C: AsRef<[usize]>>(n: usize, cycles: &[C]) -> Result<Self, PermError> {
        let mut one_line = vec![0usize; n];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            if cycle.is_empty() {
                return Err(PermError::BadCycles { n, detail: "empty cycle".into() });
            }
            for (idx, &from) in cycle.iter().enumerate() {
                let to = cycle[(idx + 1) % cycle.len()];
                if from == 0 || from > n {
                    return Err(PermError::BadCycles {
                        n,
                        detail: format!("element {from} out of range"),
                    });
                }
                if one_line[from - 1] != 0 {
                    return Err(PermError::BadCycles {
                        n,
                        detail: format!("element {from} appears twice"),
                    });
                }
                one_line[from - 1] = to;
            }
        }
        for (idx, slot) in one_line.iter_mut().enumerate() {
            if *slot == 0 {
                *slot = idx + 1;
            }
        }
        Ok(Self { one_line })
    }

    pub fn len(&self) -> usize {
        self.one_line.len()
    }

    pub fn is_empty(&self) -> bool {
        self.one_line.is_empty()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// `π(i)` for `1 <= i <= n`.
    pub fn image(&self, i: usize) -> usize {
        self.one_line[i - 1]
    }

    pub fn decompose(&self) -> CycleDecomposition {
        let n = self.len();
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.image(cur);
            }
            cycles.push(cycle);
        }
        // Starting each walk at the smallest unseen element already yields the
        // canonical form: min-first cycles sorted by their minimum.
        CycleDecomposition { n, cycles }
    }

    pub fn cycle_counts(&self) -> CycleCounts {
        let mut counts = BTreeMap::new();
        for cycle in self.decompose().cycles() {
            *counts.entry(cycle.len()).or_insert(0) += 1;
        }
        CycleCounts { counts }
    }

    pub fn contains_pattern(&self, pattern: &Permutation) -> bool {
        contains_pattern(&self.one_line, &pattern.one_line)
    }

    pub fn avoids(&self, pattern: &Permutation) -> bool {
        !self.contains_pattern(pattern)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (idx, &v) in self.one_line.iter().enumerate() {
            inv[v - 1] = idx + 1;
        }
        Self { one_line: inv }
    }

    /// `i ↦ n + 1 - π(n + 1 - i)`.
    pub fn reverse_complement(&self) -> Self {
        let n = self.len();
        Self {
            one_line: self.one_line.iter().rev().map(|&v| n + 1 - v).collect(),
        }
    }

    pub fn apply_symmetry(&self, sym: Symmetry) -> Self {
        match sym {
            Symmetry::Identity => self.clone(),
            Symmetry::Inverse => self.inverse(),
            Symmetry::ReverseComplement => self.reverse_complement(),
            Symmetry::ReverseComplementInverse => self.reverse_complement().inverse(),
        }
    }

    pub fn arc_diagram(&self) -> ArcDiagram {
        let mut arcs = BTreeSet::new();
        for cycle in self.decompose().cycles() {
            let mut support = cycle.clone();
            support.sort_unstable();
            for pair in support.windows(2) {
                arcs.insert((pair[0], pair[1]));
            }
        }
        ArcDiagram { n: self.len(), arcs }
    }

    /// Positions `i` with `π(i) = i`.
    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&i| self.image(i) == i).collect()
    }

    /// One-line notation: digits run together when `n <= 9`, space-separated
    /// otherwise.
    pub fn to_one_line_string(&self) -> String {
        let sep = if self.len() > 9 { " " } else { "" };
        self.one_line
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(sep)
    }

    pub fn to_cycle_string(&self) -> String {
        self.decompose().to_string()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_one_line_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({})", self.to_one_line_string())
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_one_line_string())
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The four cycle-type-preserving symmetries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Identity,
    Inverse,
    ReverseComplement,
    ReverseComplementInverse,
}

impl Symmetry {
    pub const ALL: [Symmetry; 4] = [
        Symmetry::Identity,
        Symmetry::Inverse,
        Symmetry::ReverseComplement,
        Symmetry::ReverseComplementInverse,
    ];
}

/// Canonical cycle form: each cycle starts at its minimum, cycles sorted by
/// minimum, fixed points included as 1-cycles.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleDecomposition {
    n: usize,
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    /// Canonicalize an arbitrary list of disjoint cycles covering `1..=n`.
    pub fn new(n: usize, cycles: Vec<Vec<usize>>) -> Result<Self, PermError> {
        let perm = Permutation::from_cycles(n, &cycles)?;
        let covered: usize = cycles.iter().map(Vec::len).sum();
        if covered != n {
            return Err(PermError::BadCycles {
                n,
                detail: format!("cycles cover {covered} of {n} elements"),
            });
        }
        Ok(perm.decompose())
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn to_permutation(&self) -> Permutation {
        Permutation::from_cycles(self.n, &self.cycles).expect("canonical cycles are valid")
    }

    /// Cycles of exactly the given length.
    pub fn of_length(&self, len: usize) -> impl Iterator<Item = &Vec<usize>> {
        self.cycles.iter().filter(move |c| c.len() == len)
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in &self.cycles {
            let body: Vec<String> = cycle.iter().map(|v| v.to_string()).collect();
            write!(f, "({})", body.join(","))?;
        }
        Ok(())
    }
}

/// Number of cycles of each length; zero entries omitted.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CycleCounts {
    counts: BTreeMap<usize, usize>,
}

impl CycleCounts {
    pub fn get(&self, len: usize) -> usize {
        self.counts.get(&len).copied().unwrap_or(0)
    }

    pub fn as_map(&self) -> &BTreeMap<usize, usize> {
        &self.counts
    }

    /// `Σ k · c_k`, which equals the permutation size.
    pub fn weight(&self) -> usize {
        self.counts.iter().map(|(k, c)| k * c).sum()
    }

    pub fn max_length(&self) -> Option<usize> {
        self.counts.keys().next_back().copied()
    }
}

/// Points `1..=n` with an arc `a → b` whenever `a < b` are neighbours in the
/// sorted support of some cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcDiagram {
    n: usize,
    arcs: BTreeSet<(usize, usize)>,
}

impl ArcDiagram {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &BTreeSet<(usize, usize)> {
        &self.arcs
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.arcs.contains(&(a, b))
    }
}

/// The two orientations of a 3-cycle on `a < b < c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CycleForm3 {
    /// `(a,b,c)`
    Form123,
    /// `(a,c,b)`
    Form132,
}

pub fn form_of_3cycle(cycle: &[usize]) -> Result<CycleForm3, PermError> {
    if cycle.len() != 3 {
        return Err(PermError::NotThreeCycle(cycle.len()));
    }
    let start = (0..3).min_by_key(|&i| cycle[i]).expect("three entries");
    let second = cycle[(start + 1) % 3];
    let third = cycle[(start + 2) % 3];
    if second == third || second == cycle[start] || third == cycle[start] {
        return Err(PermError::BadCycles {
            n: 3,
            detail: "3-cycle entries must be distinct".into(),
        });
    }
    Ok(if second < third { CycleForm3::Form123 } else { CycleForm3::Form132 })
}

/// Relabel a set of distinct values to `1..=len`, preserving relative order.
pub fn standardize(values: &[usize]) -> Vec<usize> {
    let mut sorted: Vec<usize> = values.to_vec();
    sorted.sort_unstable();
    values
        .iter()
        .map(|v| sorted.binary_search(v).expect("value present") + 1)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(p("529614738").decompose().to_string(), "(1,5)(2)(3,9,8)(4,6)(7)");
        assert_eq!(p("123").decompose().to_string(), "(1)(2)(3)");
        assert_eq!(p("7615423").decompose().to_string(), "(1,7,3)(2,6)(4,5)");
    }

    #[test]
    fn cycle_counts_examples() {
        let counts = p("529614738").cycle_counts();
        assert_eq!(counts.as_map(), &BTreeMap::from([(1, 2), (2, 2), (3, 1)]));
        assert!(Permutation::empty().cycle_counts().as_map().is_empty());
        assert_eq!(p("231").cycle_counts().as_map(), &BTreeMap::from([(3, 1)]));
    }

    #[test]
    fn pattern_examples() {
        assert!(p("2371645").contains_pattern(&p("132")));
        // 24152673 repeats 2, so it is only checked as a word.
        assert!("24152673".parse::<Permutation>().is_err());
        assert!(!contains_pattern(&[2, 4, 1, 5, 2, 6, 7, 3], &[3, 2, 1]));
        assert!(p("2371645").contains_pattern(&Permutation::empty()));
        assert!(Permutation::empty().avoids(&p("1")));
    }

    #[test]
    fn symmetry_examples() {
        assert_eq!(p("231").apply_symmetry(Symmetry::Inverse), p("312"));
        assert_eq!(p("132").apply_symmetry(Symmetry::ReverseComplement), p("213"));
        assert_eq!(p("529614738").apply_symmetry(Symmetry::Identity), p("529614738"));
    }

    #[test]
    fn arc_diagram_examples() {
        let arcs = p("529614738").arc_diagram();
        let expected = BTreeSet::from([(1, 5), (3, 8), (8, 9), (4, 6)]);
        assert_eq!(arcs.arcs(), &expected);
        assert!(Permutation::identity(4).arc_diagram().arcs().is_empty());
        let arcs = p("(1,7,3)(2,6)(4,5)").arc_diagram();
        assert_eq!(arcs.arcs(), &BTreeSet::from([(1, 3), (3, 7), (2, 6), (4, 5)]));
    }

    #[test]
    fn forms_of_three_cycles() {
        assert_eq!(form_of_3cycle(&[3, 9, 8]), Ok(CycleForm3::Form132));
        assert_eq!(form_of_3cycle(&[1, 2, 3]), Ok(CycleForm3::Form123));
        assert_eq!(form_of_3cycle(&[2, 10, 8]), Ok(CycleForm3::Form132));
        // rotation invariant
        assert_eq!(form_of_3cycle(&[9, 8, 3]), Ok(CycleForm3::Form132));
        assert_eq!(form_of_3cycle(&[1, 2]), Err(PermError::NotThreeCycle(2)));
        assert_eq!(form_of_3cycle(&[1, 2, 3, 4]), Err(PermError::NotThreeCycle(4)));
    }

    #[test]
    fn from_cycles_rejects_overlap() {
        assert!(Permutation::from_cycles(4, &[vec![1, 2], vec![2, 3]]).is_err());
        assert!(Permutation::from_cycles(2, &[vec![1, 3]]).is_err());
    }

    #[test]
    fn new_rejects_non_bijections() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![3, 1]).is_err());
    }

    #[test]
    fn canonical_decomposition_from_rotated_cycles() {
        let d = CycleDecomposition::new(5, vec![vec![4, 2], vec![5, 1, 3]]).unwrap();
        assert_eq!(d.to_string(), "(1,3,5)(2,4)");
        assert!(CycleDecomposition::new(5, vec![vec![4, 2]]).is_err());
    }
}
