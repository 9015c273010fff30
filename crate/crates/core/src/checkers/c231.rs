use serde::Serialize;

use crate::perm::{form_of_3cycle, CycleForm3, Permutation};

use super::{ensure_disjoint, sorted2, sorted3, CheckError, Report};

/// How two cycles, or a crossing family and a 2-cycle, sit relative to each
/// other inside a 231-avoider.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PairConfig231 {
    Disjoint,
    Nested,
    Crossing,
    Separated,
    CrossType1,
    CrossType2,
    /// `(e, f)` entirely below the family.
    Below,
    /// `A < e < f < B`.
    BetweenAB,
    /// `A < e < B < f < C`.
    Straddling,
    /// `B < e < f < C`.
    BetweenBC,
    /// `(e, f)` entirely above the family.
    Above,
    Other,
}

/// Labels a sweep over avoiders should see at least once.
pub const OBSERVATIONS_231: [&str; 12] = [
    "two-cycles-disjoint",
    "two-cycles-nested",
    "three-cycles-separated",
    "three-cycles-cross-type-1",
    "three-cycles-cross-type-2",
    "two-cycle-below",
    "two-cycle-between-a-b",
    "two-cycle-straddling",
    "two-cycle-between-b-c",
    "two-cycle-above",
    "fixed-point-between-a-b",
    "fixed-point-between-b-c",
];

pub fn classify_2cycle_pair(c1: &[usize], c2: &[usize]) -> Result<PairConfig231, CheckError> {
    ensure_disjoint(c1, c2)?;
    let (s1, s2) = (sorted2(c1)?, sorted2(c2)?);
    let ([_, b], [c, d]) = if s1[0] < s2[0] { (s1, s2) } else { (s2, s1) };
    Ok(if b < c {
        PairConfig231::Disjoint
    } else if d < b {
        PairConfig231::Nested
    } else {
        PairConfig231::Crossing
    })
}

/// With `[a, b, c]` the support holding the smaller minimum and `[d, e, f]`
/// the other: separated when `c < d`, crossing when `c > f` and `b` falls
/// in `(d, e)` or `(e, f)`.
pub fn classify_3cycle_pair_231(c1: &[usize], c2: &[usize]) -> Result<PairConfig231, CheckError> {
    ensure_disjoint(c1, c2)?;
    let (s1, s2) = (sorted3(c1)?, sorted3(c2)?);
    let ([_, b, c], [d, e, f]) = if s1[0] < s2[0] { (s1, s2) } else { (s2, s1) };
    Ok(if c < d {
        PairConfig231::Separated
    } else if c > f && d < b && b < e {
        PairConfig231::CrossType1
    } else if c > f && e < b && b < f {
        PairConfig231::CrossType2
    } else {
        PairConfig231::Other
    })
}

/// A maximal set of 3-cycles linked by overlapping spans, with its blocks
/// of smallest, middle and largest entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    pub cycles: Vec<Vec<usize>>,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub c: Vec<usize>,
}

impl Family {
    fn from_cycles(cycles: Vec<Vec<usize>>) -> Self {
        let supports: Vec<[usize; 3]> = cycles.iter().map(|c| sorted3(c).expect("3-cycle")).collect();
        let block = |k: usize| {
            let mut v: Vec<usize> = supports.iter().map(|s| s[k]).collect();
            v.sort_unstable();
            v
        };
        let (a, b, c) = (block(0), block(1), block(2));
        Self { cycles, a, b, c }
    }

    fn min(block: &[usize]) -> usize {
        block[0]
    }

    fn max(block: &[usize]) -> usize {
        block[block.len() - 1]
    }

    pub fn span(&self) -> (usize, usize) {
        (Self::min(&self.a), Self::max(&self.c))
    }

    /// `A < B < C` elementwise.
    pub fn blocks_ordered(&self) -> bool {
        Self::max(&self.a) < Self::min(&self.b) && Self::max(&self.b) < Self::min(&self.c)
    }

    pub fn blocks_consecutive(&self) -> bool {
        [&self.a, &self.b, &self.c]
            .iter()
            .all(|block| Self::max(block) - Self::min(block) + 1 == block.len())
    }

    /// Gap between the largest of one block and the smallest of the next.
    fn gap_ab(&self, g: usize) -> bool {
        Self::max(&self.a) < g && g < Self::min(&self.b)
    }

    fn gap_bc(&self, g: usize) -> bool {
        Self::max(&self.b) < g && g < Self::min(&self.c)
    }

    fn inside_a_block(&self, g: usize) -> bool {
        [&self.a, &self.b, &self.c]
            .iter()
            .any(|block| Self::min(block) < g && g < Self::max(block))
    }
}

/// Connected components of the overlap relation on 3-cycle spans, in order
/// of their smallest entry.
pub fn crossing_families(three_cycles: &[Vec<usize>]) -> Vec<Family> {
    let mut order: Vec<(usize, usize, &Vec<usize>)> = three_cycles
        .iter()
        .map(|c| {
            let s = sorted3(c).expect("3-cycle");
            (s[0], s[2], c)
        })
        .collect();
    order.sort_unstable();
    let mut families = Vec::new();
    let mut current: Vec<Vec<usize>> = Vec::new();
    let mut reach = 0;
    for (lo, hi, cycle) in order {
        if !current.is_empty() && lo > reach {
            families.push(Family::from_cycles(std::mem::take(&mut current)));
        }
        reach = if current.is_empty() { hi } else { reach.max(hi) };
        current.push(cycle.clone());
    }
    if !current.is_empty() {
        families.push(Family::from_cycles(current));
    }
    families
}

/// Which of the five allowed placements a 2-cycle takes against a family.
pub fn classify_2cycle_vs_family(family: &Family, two_cycle: &[usize]) -> Result<PairConfig231, CheckError> {
    let [e, f] = sorted2(two_cycle)?;
    for cycle in &family.cycles {
        ensure_disjoint(cycle, two_cycle)?;
    }
    let (a_max, b_min, b_max, c_min) = (
        Family::max(&family.a),
        Family::min(&family.b),
        Family::max(&family.b),
        Family::min(&family.c),
    );
    Ok(if f < Family::min(&family.a) {
        PairConfig231::Below
    } else if e > Family::max(&family.c) {
        PairConfig231::Above
    } else if a_max < e && f < b_min {
        PairConfig231::BetweenAB
    } else if a_max < e && e < b_min && b_max < f && f < c_min {
        PairConfig231::Straddling
    } else if b_max < e && f < c_min {
        PairConfig231::BetweenBC
    } else {
        PairConfig231::Other
    })
}

/// The two excluded arrangements of non-nested 2-cycles `e1 < f1 < e2 < f2`
/// around one family.
fn forbidden_pair(family: &Family, [e1, f1]: [usize; 2], [e2, f2]: [usize; 2]) -> bool {
    let (a_max, b_min, b_max, c_min) = (
        Family::max(&family.a),
        Family::min(&family.b),
        Family::max(&family.b),
        Family::min(&family.c),
    );
    let first = a_max < e1 && e2 < b_min && b_max < f2 && f2 < c_min;
    let second = a_max < e1 && e1 < b_min && b_max < f1 && f2 < c_min;
    first || second
}

fn ensure_231_class(p: &Permutation) -> Result<(), CheckError> {
    let outside = |reason| CheckError::OutsideClass { permutation: p.to_string(), reason };
    if p.cycle_counts().max_length().unwrap_or(0) > 3 {
        return Err(outside("has a cycle longer than 3"));
    }
    if p.contains_pattern(&Permutation::from_vec_unchecked(vec![2, 3, 1])) {
        return Err(outside("contains 231"));
    }
    Ok(())
}

/// Check a 231-avoider with cycles of length at most three against the
/// configuration rules for 2-cycles, 3-cycles, crossing families and fixed
/// points.
pub fn check_231_family_lemmas(p: &Permutation) -> Result<Report, CheckError> {
    ensure_231_class(p)?;
    let mut report = Report::new(p);
    let decomposition = p.decompose();
    let twos: Vec<Vec<usize>> = decomposition.of_length(2).cloned().collect();
    let threes: Vec<Vec<usize>> = decomposition.of_length(3).cloned().collect();
    let fixed = p.fixed_points();

    for (i, x) in twos.iter().enumerate() {
        for y in &twos[i + 1..] {
            match classify_2cycle_pair(x, y)? {
                PairConfig231::Disjoint => {
                    report.observed.insert("two-cycles-disjoint");
                }
                PairConfig231::Nested => {
                    report.observed.insert("two-cycles-nested");
                }
                _ => report.violate("two-cycles-do-not-cross", vec![x.clone(), y.clone()]),
            }
        }
    }

    for cycle in &threes {
        if form_of_3cycle(cycle).ok() != Some(CycleForm3::Form132) {
            report.violate("three-cycle-form", vec![cycle.clone()]);
        }
    }
    for (i, x) in threes.iter().enumerate() {
        for y in &threes[i + 1..] {
            let label = match classify_3cycle_pair_231(x, y)? {
                PairConfig231::Separated => "three-cycles-separated",
                PairConfig231::CrossType1 => "three-cycles-cross-type-1",
                PairConfig231::CrossType2 => "three-cycles-cross-type-2",
                _ => {
                    report.violate("three-cycle-pair", vec![x.clone(), y.clone()]);
                    continue;
                }
            };
            report.observed.insert(label);
        }
    }

    for family in crossing_families(&threes) {
        if !family.blocks_ordered() {
            report.violate("family-blocks-ordered", family.cycles.clone());
            continue;
        }
        if !family.blocks_consecutive() {
            report.violate("family-blocks-consecutive", family.cycles.clone());
        }
        let witness = |cycle: &[usize]| {
            let mut w = family.cycles.clone();
            w.push(cycle.to_vec());
            w
        };
        for two in &twos {
            let label = match classify_2cycle_vs_family(&family, two)? {
                PairConfig231::Below => "two-cycle-below",
                PairConfig231::BetweenAB => "two-cycle-between-a-b",
                PairConfig231::Straddling => "two-cycle-straddling",
                PairConfig231::BetweenBC => "two-cycle-between-b-c",
                PairConfig231::Above => "two-cycle-above",
                _ => {
                    report.violate("two-cycle-placement", witness(two));
                    continue;
                }
            };
            report.observed.insert(label);
        }
        for x in &twos {
            for y in &twos {
                let (sx, sy) = (sorted2(x)?, sorted2(y)?);
                if sx[1] < sy[0] && forbidden_pair(&family, sx, sy) {
                    let mut w = witness(x);
                    w.push(y.clone());
                    report.violate("forbidden-two-cycle-pair", w);
                }
            }
        }
        let (ab, bc): (Vec<usize>, Vec<usize>) = (
            fixed.iter().copied().filter(|&g| family.gap_ab(g)).collect(),
            fixed.iter().copied().filter(|&g| family.gap_bc(g)).collect(),
        );
        for (gap, label) in [(&ab, "fixed-point-between-a-b"), (&bc, "fixed-point-between-b-c")] {
            match gap.len() {
                0 => {}
                1 => {
                    report.observed.insert(label);
                }
                _ => report.violate("fixed-points-under-arc", witness(gap)),
            }
        }
        for &g in &fixed {
            if family.inside_a_block(g) {
                report.violate("fixed-point-inside-block", witness(&[g]));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn two_cycle_pairs() {
        assert_eq!(classify_2cycle_pair(&[1, 2], &[3, 4]), Ok(PairConfig231::Disjoint));
        assert_eq!(classify_2cycle_pair(&[1, 4], &[2, 3]), Ok(PairConfig231::Nested));
        assert_eq!(classify_2cycle_pair(&[1, 3], &[2, 4]), Ok(PairConfig231::Crossing));
        assert_eq!(classify_2cycle_pair(&[3, 4], &[1, 2]), Ok(PairConfig231::Disjoint));
        assert!(matches!(classify_2cycle_pair(&[1, 3], &[3, 4]), Err(CheckError::Overlap(..))));
    }

    #[test]
    fn three_cycle_pairs() {
        let c = |a, b| classify_3cycle_pair_231(a, b).unwrap();
        assert_eq!(c(&[1, 3, 2], &[4, 6, 5]), PairConfig231::Separated);
        assert_eq!(c(&[1, 6, 3], &[2, 5, 4]), PairConfig231::CrossType1);
        assert_eq!(c(&[1, 6, 4], &[2, 5, 3]), PairConfig231::CrossType2);
        assert_eq!(c(&[2, 5, 3], &[1, 6, 4]), PairConfig231::CrossType2);
        assert_eq!(c(&[1, 3, 2], &[4, 6, 5]), c(&[4, 6, 5], &[1, 3, 2]));
        assert_eq!(c(&[1, 4, 2], &[3, 6, 5]), PairConfig231::Other);
        assert!(classify_3cycle_pair_231(&[1, 3, 2], &[2, 5, 4]).is_err());
        assert!(classify_3cycle_pair_231(&[1, 3], &[4, 6, 5]).is_err());
    }

    #[test]
    fn families_are_overlap_components() {
        let fams = crossing_families(&[vec![1, 6, 3], vec![2, 5, 4], vec![7, 9, 8]]);
        assert_eq!(fams.len(), 2);
        assert_eq!(fams[0].a, vec![1, 2]);
        assert_eq!(fams[0].b, vec![3, 4]);
        assert_eq!(fams[0].c, vec![5, 6]);
        assert!(fams[0].blocks_ordered() && fams[0].blocks_consecutive());
        assert_eq!(fams[1].span(), (7, 9));
    }

    #[test]
    fn placements_against_a_family() {
        // family (3,10,6)(4,9,7): A = {3,4}, B = {6,7}, C = {9,10}
        let fam = &crossing_families(&[vec![3, 10, 6], vec![4, 9, 7]])[0];
        let place = |c: &[usize]| classify_2cycle_vs_family(fam, c).unwrap();
        assert_eq!(place(&[1, 2]), PairConfig231::Below);
        assert_eq!(place(&[5, 11]), PairConfig231::Other);
        assert_eq!(place(&[11, 12]), PairConfig231::Above);
        assert_eq!(place(&[5, 8]), PairConfig231::Straddling);
        let fam = &crossing_families(&[vec![1, 9, 5], vec![2, 8, 6]])[0];
        let place = |c: &[usize]| classify_2cycle_vs_family(fam, c).unwrap();
        assert_eq!(place(&[3, 4]), PairConfig231::BetweenAB);
        assert_eq!(place(&[3, 7]), PairConfig231::Straddling);
        assert_eq!(place(&[4, 7]), PairConfig231::Straddling);
        assert!(classify_2cycle_vs_family(fam, &[5, 7]).is_err());
    }

    #[test]
    fn nest_example_passes() {
        let pi = p("7615423");
        assert_eq!(pi.to_cycle_string(), "(1,7,3)(2,6)(4,5)");
        let report = check_231_family_lemmas(&pi).unwrap();
        assert!(report.passed(), "{:?}", report.violations);
        assert!(report.observed.contains("two-cycles-nested"));
        assert!(report.observed.contains("two-cycle-straddling"));
        assert!(report.observed.contains("two-cycle-between-b-c"));
    }

    #[test]
    fn trivial_inputs_pass() {
        assert!(check_231_family_lemmas(&Permutation::identity(5)).unwrap().passed());
        assert!(check_231_family_lemmas(&Permutation::empty()).unwrap().passed());
    }

    #[test]
    fn class_is_enforced() {
        assert!(matches!(check_231_family_lemmas(&p("231")), Err(CheckError::OutsideClass { .. })));
        assert!(matches!(check_231_family_lemmas(&p("4123")), Err(CheckError::OutsideClass { .. })));
    }

    #[test]
    fn forbidden_configurations_are_detected() {
        // A < e1 < f1 < e2 < B < f2 < C around the 3-cycle (1,7,5)
        let fam = &crossing_families(&[vec![1, 7, 5]])[0];
        assert!(forbidden_pair(fam, [2, 3], [4, 6]));
        // A < e1 < B < f1 < e2 < f2 < C around the 3-cycle (1,7,3)
        let fam = &crossing_families(&[vec![1, 7, 3]])[0];
        assert!(forbidden_pair(fam, [2, 4], [5, 6]));
        assert!(!forbidden_pair(fam, [4, 5], [6, 8]));
    }

    #[test]
    fn report_json_shape() {
        let report = check_231_family_lemmas(&p("7615423")).unwrap();
        let json = report.to_json();
        assert_eq!(json["permutation"], "7615423");
        assert!(json["violations"].as_array().unwrap().is_empty());
    }
}
