use serde::Serialize;

use crate::lattice::{free_decomposition, DyckWord};
use crate::perm::{form_of_3cycle, standardize, CycleForm3, Permutation};

use super::{ensure_disjoint, sorted3, CheckError, Report};

/// How two 3-arcs sit relative to each other, read on the six standardized
/// positions with the arc through `1` listed first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PairConfig132 {
    /// `{1,3,5}` and `{2,4,6}`.
    ConfigA,
    /// `{1,4,6}` and `{2,3,5}`.
    ConfigB,
    /// `{1,5,6}` and `{2,3,4}`.
    ConfigC,
    Other,
}

pub const OBSERVATIONS_132: [&str; 8] = [
    "config-a",
    "config-b",
    "config-c",
    "config-c-mixed-forms",
    "form-change-at-interior-hit",
    "fixed-point-at-initial-hit",
    "fixed-point-at-interior-hit",
    "fixed-point-at-final-hit",
];

pub fn classify_3arc_pair_132(a1: &[usize], a2: &[usize]) -> Result<PairConfig132, CheckError> {
    ensure_disjoint(a1, a2)?;
    let (s1, s2) = (sorted3(a1)?, sorted3(a2)?);
    let first = if s1[0] < s2[0] { s1 } else { s2 };
    let all: Vec<usize> = s1.iter().chain(&s2).copied().collect();
    let std = standardize(&all);
    let mut positions: Vec<usize> = first.iter().map(|v| std[all.iter().position(|x| x == v).unwrap()]).collect();
    positions.sort_unstable();
    Ok(match positions.as_slice() {
        [1, 3, 5] => PairConfig132::ConfigA,
        [1, 4, 6] => PairConfig132::ConfigB,
        [1, 5, 6] => PairConfig132::ConfigC,
        _ => PairConfig132::Other,
    })
}

fn ensure_132_class(p: &Permutation) -> Result<(), CheckError> {
    let outside = |reason| CheckError::OutsideClass { permutation: p.to_string(), reason };
    if p.cycle_counts().as_map().keys().any(|&len| len != 1 && len != 3) {
        return Err(outside("has a cycle of length other than 1 or 3"));
    }
    if p.contains_pattern(&Permutation::from_vec_unchecked(vec![1, 3, 2])) {
        return Err(outside("contains 132"));
    }
    Ok(())
}

/// One 3-cycle with its sorted support and orientation.
struct Arc3 {
    cycle: Vec<usize>,
    support: [usize; 3],
    form: CycleForm3,
}

/// Check a 132-avoider built from fixed points and 3-cycles against the
/// Dyck-word structure of its 3-cycle part: first entries lead, pairs of
/// arcs take one of three shapes, orientation only changes at hits, first
/// entries split into blocks mirroring the free blocks, and fixed points
/// sit at hits.
pub fn check_132_structure(p: &Permutation) -> Result<Report, CheckError> {
    ensure_132_class(p)?;
    let mut report = Report::new(p);
    let mut arcs: Vec<Arc3> = p
        .decompose()
        .of_length(3)
        .map(|c| Arc3 {
            cycle: c.clone(),
            support: sorted3(c).expect("3-cycle"),
            form: form_of_3cycle(c).expect("3-cycle"),
        })
        .collect();
    let m = arcs.len();

    for (i, x) in arcs.iter().enumerate() {
        for y in &arcs[i + 1..] {
            let config = classify_3arc_pair_132(&x.cycle, &y.cycle)?;
            let mixed = x.form != y.form;
            let witness = vec![x.cycle.clone(), y.cycle.clone()];
            match (config, mixed) {
                (PairConfig132::Other, _) => report.violate("arc-pair-config", witness),
                (PairConfig132::ConfigC, true) => {
                    report.observed.insert("config-c-mixed-forms");
                }
                (_, true) => report.violate("mixed-forms-config", witness),
                (PairConfig132::ConfigA, false) => {
                    report.observed.insert("config-a");
                }
                (PairConfig132::ConfigB, false) => {
                    report.observed.insert("config-b");
                }
                (PairConfig132::ConfigC, false) => {
                    report.observed.insert("config-c");
                }
            }
        }
    }

    // Relabel the 3-cycle part to 1..=3m.
    let mut support: Vec<usize> = arcs.iter().flat_map(|a| a.support).collect();
    support.sort_unstable();
    let rank = |v: usize| support.binary_search(&v).expect("in support") + 1;
    arcs.sort_by_key(|a| a.support[1]);
    let all_cycles = || arcs.iter().map(|a| a.cycle.clone()).collect::<Vec<_>>();

    let mut firsts: Vec<usize> = arcs.iter().map(|a| rank(a.support[0])).collect();
    firsts.sort_unstable();
    if firsts != (1..=m).collect::<Vec<_>>() {
        report.violate("first-entries-initial", all_cycles());
        return Ok(report);
    }
    if arcs.windows(2).any(|w| w[0].support[2] > w[1].support[2]) {
        report.violate("middles-and-lasts-aligned", all_cycles());
        return Ok(report);
    }
    let bits: Vec<bool> = (m + 1..=3 * m)
        .map(|pos| arcs.iter().any(|a| rank(a.support[2]) == pos))
        .collect();
    let Ok(dyck) = DyckWord::new(bits) else {
        report.violate("dyck-word", all_cycles());
        return Ok(report);
    };
    let hits = dyck.hits();
    let decomposition = free_decomposition(&dyck);

    for j in 1..m {
        let (x, y) = (&arcs[j - 1], &arcs[j]);
        let witness = vec![x.cycle.clone(), y.cycle.clone()];
        if decomposition.block_of_pair(j - 1) == decomposition.block_of_pair(j) && x.form != y.form {
            report.violate("same-form-in-free-block", witness.clone());
        }
        if x.form != y.form {
            if hits.contains(&(2 * j)) {
                report.observed.insert("form-change-at-interior-hit");
            } else {
                report.violate("form-change-at-hit", witness);
            }
        }
    }

    // B splits into blocks of sizes x_1..x_k, A into x_k..x_1, and arcs
    // out of the j-th A block land in the (k+1-j)-th B block.
    if let Some(composition) = decomposition.composition() {
        let parts = composition.parts();
        let k = parts.len();
        let mut a_block = vec![0; m + 1];
        let mut start = 1;
        for (i, &size) in parts.iter().rev().enumerate() {
            a_block[start..start + size].fill(i);
            start += size;
        }
        let mut pair = 0;
        for (j, &size) in parts.iter().enumerate() {
            for arc in &arcs[pair..pair + size] {
                if a_block[rank(arc.support[0])] != k - 1 - j {
                    report.violate("split-blocks", vec![arc.cycle.clone()]);
                }
            }
            pair += size;
        }
    }

    let max_first = arcs.iter().map(|a| a.support[0]).max().unwrap_or(0);
    for g in p.fixed_points() {
        let below = |k: usize| arcs.iter().filter(|a| a.support[k] < g).count();
        let (middles, lasts) = (below(1), below(2));
        if g < max_first || middles != lasts {
            report.violate("fixed-point-at-hit", vec![vec![g]]);
        } else if m > 0 {
            report.observed.insert(match middles {
                0 => "fixed-point-at-initial-hit",
                x if x == m => "fixed-point-at-final-hit",
                _ => "fixed-point-at-interior-hit",
            });
        }
    }
    Ok(report)
}
