//! Structural claims about 231- and 132-avoiders, made executable.
//!
//! Each checker takes one permutation from the class it talks about and
//! returns a [`Report`] listing every violated claim with the offending
//! cycles as witness. A report also records which allowed configurations it
//! saw, so sweeps can confirm that none of them is vacuous.

mod audit;
mod c132;
mod c231;

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::perm::Permutation;

pub use audit::{
    audit_132_pairs, audit_231_pairs, forbidden_witnesses, ConfigurationAudit, PairShape,
};
pub use c132::{check_132_structure, classify_3arc_pair_132, PairConfig132, OBSERVATIONS_132};
pub use c231::{
    check_231_family_lemmas, classify_2cycle_pair, classify_2cycle_vs_family, classify_3cycle_pair_231,
    crossing_families, Family, PairConfig231, OBSERVATIONS_231,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CheckError {
    #[error("cycles {0:?} and {1:?} share an element")]
    Overlap(Vec<usize>, Vec<usize>),
    #[error("expected a {expected}-cycle, got {got:?}")]
    WrongLength { expected: usize, got: Vec<usize> },
    #[error("{permutation} is outside the checked class: {reason}")]
    OutsideClass { permutation: String, reason: &'static str },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub lemma: &'static str,
    pub witness: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub permutation: Permutation,
    pub violations: Vec<Violation>,
    #[serde(skip)]
    pub observed: BTreeSet<&'static str>,
}

impl Report {
    fn new(p: &Permutation) -> Self {
        Self { permutation: p.clone(), violations: Vec::new(), observed: BTreeSet::new() }
    }

    fn violate(&mut self, lemma: &'static str, witness: Vec<Vec<usize>>) {
        self.violations.push(Violation { lemma, witness });
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// Supports of two cycles must be disjoint.
fn ensure_disjoint(a: &[usize], b: &[usize]) -> Result<(), CheckError> {
    if a.iter().any(|x| b.contains(x)) {
        return Err(CheckError::Overlap(a.to_vec(), b.to_vec()));
    }
    Ok(())
}

fn sorted3(cycle: &[usize]) -> Result<[usize; 3], CheckError> {
    if cycle.len() != 3 {
        return Err(CheckError::WrongLength { expected: 3, got: cycle.to_vec() });
    }
    let mut s = [cycle[0], cycle[1], cycle[2]];
    s.sort_unstable();
    Ok(s)
}

fn sorted2(cycle: &[usize]) -> Result<[usize; 2], CheckError> {
    if cycle.len() != 2 {
        return Err(CheckError::WrongLength { expected: 2, got: cycle.to_vec() });
    }
    Ok([cycle[0].min(cycle[1]), cycle[0].max(cycle[1])])
}
