use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::lattice::{dyck_word_of, DyckWord};
use crate::perm::{contains_pattern, Permutation};

use super::generate::{first_cycles, CycleConstrained};
use super::{CycleSet, EnumerateError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CensusKey {
    pub c1: usize,
    pub c2: usize,
    pub c3: usize,
}

impl CensusKey {
    pub fn new(c1: usize, c2: usize, c3: usize) -> Self {
        Self { c1, c2, c3 }
    }

    pub fn weight(&self) -> usize {
        self.c1 + 2 * self.c2 + 3 * self.c3
    }
}

/// Avoiders of one pattern at one size, tallied by `(c1, c2, c3)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub n: usize,
    pub pattern: Permutation,
    pub allowed: CycleSet,
    pub table: BTreeMap<CensusKey, BigUint>,
}

#[derive(Serialize, Deserialize)]
struct CensusRow {
    c1: usize,
    c2: usize,
    c3: usize,
    count: String,
}

#[derive(Serialize, Deserialize)]
struct CensusWire {
    n: usize,
    pattern: Permutation,
    #[serde(rename = "S")]
    allowed: CycleSet,
    rows: Vec<CensusRow>,
}

impl Census {
    pub fn total(&self) -> BigUint {
        self.table.values().sum()
    }

    /// Zero for keys that never occur.
    pub fn get(&self, c1: usize, c2: usize, c3: usize) -> BigUint {
        self.table.get(&CensusKey::new(c1, c2, c3)).cloned().unwrap_or_default()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let wire = CensusWire {
            n: self.n,
            pattern: self.pattern.clone(),
            allowed: self.allowed.clone(),
            rows: self
                .table
                .iter()
                .map(|(k, v)| CensusRow { c1: k.c1, c2: k.c2, c3: k.c3, count: v.to_string() })
                .collect(),
        };
        serde_json::to_value(wire).expect("census serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, EnumerateError> {
        let wire: CensusWire =
            serde_json::from_value(value.clone()).map_err(|e| EnumerateError::Json(e.to_string()))?;
        let mut table = BTreeMap::new();
        for row in wire.rows {
            let count: BigUint =
                row.count.parse().map_err(|_| EnumerateError::Json(format!("bad count {:?}", row.count)))?;
            let key = CensusKey::new(row.c1, row.c2, row.c3);
            if key.weight() != wire.n {
                return Err(EnumerateError::Json(format!("row {key:?} does not have weight {}", wire.n)));
            }
            table.insert(key, count);
        }
        Ok(Self { n: wire.n, pattern: wire.pattern, allowed: wire.allowed, table })
    }
}

/// Pruning predicate: the letters placed so far, read left to right, must
/// avoid the pattern. Any occurrence among them survives completion.
fn placed_letters_avoid(pattern: &Permutation) -> impl FnMut(&[usize]) -> bool + '_ {
    let mut buf = Vec::new();
    move |word| {
        buf.clear();
        buf.extend(word.iter().copied().filter(|&v| v != 0));
        !contains_pattern(&buf, pattern.one_line())
    }
}

/// Fold over all avoiders, one independent subtree per first cycle. The
/// subtrees are merged in their generation order, so the result does not
/// depend on scheduling.
fn fold_avoiders<T, F, M>(n: usize, allowed: &CycleSet, pattern: &Permutation, init: impl Fn() -> T + Sync, fold: F, merge: M) -> T
where
    T: Send,
    F: Fn(T, &Permutation) -> T + Sync,
    M: Fn(T, T) -> T + Sync,
{
    if n == 0 {
        return fold(init(), &Permutation::empty());
    }
    let roots = first_cycles(n, allowed);
    let parts: Vec<T> = roots
        .into_par_iter()
        .map(|root| {
            CycleConstrained::starting_with(n, allowed, root)
                .with_pruning(placed_letters_avoid(pattern))
                .filter(|p| p.avoids(pattern))
                .fold(init(), |acc, p| fold(acc, &p))
        })
        .collect();
    parts.into_iter().fold(init(), merge)
}

/// `|S_n^S(pattern)|`.
pub fn count_avoiders(n: usize, allowed: &CycleSet, pattern: &Permutation) -> BigUint {
    fold_avoiders(n, allowed, pattern, BigUint::zero, |acc, _| acc + 1u32, |a, b| a + b)
}

/// Every avoider, in generation order. Meant for sweeps at small sizes.
pub fn collect_avoiders(n: usize, allowed: &CycleSet, pattern: &Permutation) -> Vec<Permutation> {
    fold_avoiders(
        n,
        allowed,
        pattern,
        Vec::new,
        |mut acc, p| {
            acc.push(p.clone());
            acc
        },
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    )
}

pub fn refined_census(n: usize, allowed: &CycleSet, pattern: &Permutation) -> Result<Census, EnumerateError> {
    if allowed.max_length() > 3 {
        return Err(EnumerateError::UnsupportedCycleLength(allowed.max_length()));
    }
    let table = fold_avoiders(
        n,
        allowed,
        pattern,
        BTreeMap::new,
        |mut acc: BTreeMap<CensusKey, BigUint>, p| {
            let c = p.cycle_counts();
            *acc.entry(CensusKey::new(c.get(1), c.get(2), c.get(3))).or_default() += 1u32;
            acc
        },
        |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        },
    );
    Ok(Census { n, pattern: pattern.clone(), allowed: allowed.clone(), table })
}

/// The 132-avoiders of size `3m` made of 3-cycles only, grouped by their
/// Dyck word.
pub fn group_by_dyck_word(m: usize) -> BTreeMap<DyckWord, Vec<Permutation>> {
    let pattern: Permutation = "132".parse().expect("literal pattern");
    let mut groups: BTreeMap<DyckWord, Vec<Permutation>> = BTreeMap::new();
    for p in collect_avoiders(3 * m, &CycleSet::new([3]).expect("nonempty"), &pattern) {
        let word = dyck_word_of(&p).expect("3-cycle-only 132-avoiders have a Dyck word");
        groups.entry(word).or_default().push(p);
    }
    groups
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn set(s: &str) -> CycleSet {
        s.parse().unwrap()
    }

    /// Unpruned reference: filter the plain stream.
    fn slow_count(n: usize, allowed: &CycleSet, pattern: &Permutation) -> usize {
        CycleConstrained::new(n, allowed).filter(|p| p.avoids(pattern)).count()
    }

    #[test]
    fn published_counts() {
        assert_eq!(count_avoiders(4, &set("1,2,3"), &perm("231")), 12u32.into());
        assert_eq!(count_avoiders(6, &set("1,3"), &perm("132")), 17u32.into());
        assert_eq!(count_avoiders(9, &set("1,3"), &perm("123")), 0u32.into());
        assert_eq!(count_avoiders(0, &set("1"), &perm("132")), 1u32.into());
    }

    #[test]
    fn pruning_does_not_change_counts() {
        for s in CycleSet::all_subsets_of_three() {
            for pat in ["123", "132", "231", "321", "1342"] {
                for n in 0..=8 {
                    let p = perm(pat);
                    assert_eq!(count_avoiders(n, &s, &p), slow_count(n, &s, &p).into(), "{s} {pat} n={n}");
                }
            }
        }
    }

    #[test]
    fn census_examples() {
        let c = refined_census(3, &set("1,2,3"), &perm("231")).unwrap();
        let expected: BTreeMap<CensusKey, BigUint> = [
            (CensusKey::new(3, 0, 0), 1u32.into()),
            (CensusKey::new(1, 1, 0), 3u32.into()),
            (CensusKey::new(0, 0, 1), 1u32.into()),
        ]
        .into();
        assert_eq!(c.table, expected);
        let c = refined_census(1, &set("1,2,3"), &perm("231")).unwrap();
        assert_eq!(c.get(1, 0, 0), 1u32.into());
        assert_eq!(refined_census(6, &set("2,3"), &perm("231")).unwrap().total(), 7u32.into());
    }

    #[test]
    fn census_keys_respect_weight_and_sum_to_count() {
        for n in 0..=8 {
            let c = refined_census(n, &set("1,2,3"), &perm("321")).unwrap();
            assert!(c.table.keys().all(|k| k.weight() == n));
            assert_eq!(c.total(), count_avoiders(n, &set("1,2,3"), &perm("321")));
        }
    }

    #[test]
    fn census_refuses_long_cycles() {
        assert_eq!(
            refined_census(4, &set("1,4"), &perm("231")),
            Err(EnumerateError::UnsupportedCycleLength(4))
        );
    }

    #[test]
    fn census_json_round_trip() {
        let c = refined_census(6, &set("1,2,3"), &perm("231")).unwrap();
        let json = c.to_json();
        assert_eq!(json["S"], serde_json::json!([1, 2, 3]));
        assert_eq!(json["pattern"], "231");
        assert!(json["rows"][0]["count"].is_string());
        assert_eq!(Census::from_json(&json).unwrap(), c);
    }

    #[test]
    fn symmetric_patterns_have_equal_counts() {
        for s in CycleSet::all_subsets_of_three() {
            for n in 0..=9 {
                assert_eq!(count_avoiders(n, &s, &perm("231")), count_avoiders(n, &s, &perm("312")));
                assert_eq!(count_avoiders(n, &s, &perm("132")), count_avoiders(n, &s, &perm("213")));
            }
        }
    }

    #[test]
    fn dyck_groups_small() {
        let g1 = group_by_dyck_word(1);
        assert_eq!(g1.len(), 1);
        assert_eq!(g1[&"01".parse::<DyckWord>().unwrap()].len(), 2);
        let g2 = group_by_dyck_word(2);
        let total: usize = g2.values().map(Vec::len).sum();
        assert_eq!(total, 8);
        assert_eq!(g2[&"0101".parse::<DyckWord>().unwrap()].len(), 4);
        assert_eq!(g2[&"0011".parse::<DyckWord>().unwrap()].len(), 4);
    }
}
