//! Exhaustive sweeps of the structural checkers over oracle-generated avoiders.

use std::collections::BTreeSet;

use cyclepat::checkers::{
    audit_132_pairs, audit_231_pairs, check_132_structure, check_231_family_lemmas, classify_2cycle_pair,
    classify_3cycle_pair_231, forbidden_witnesses, PairConfig231, OBSERVATIONS_132, OBSERVATIONS_231,
};
use cyclepat::enumerate::{collect_avoiders, CycleSet};
use cyclepat::perm::Permutation;

fn pattern(s: &str) -> Permutation {
    s.parse().unwrap()
}

#[test]
fn sweep_231_up_to_nine() {
    let mut observed = BTreeSet::new();
    let mut consecutive_everywhere = true;
    for n in 0..=9 {
        for p in collect_avoiders(n, &CycleSet::up_to_three(), &pattern("231")) {
            let d = p.decompose();
            let twos: Vec<_> = d.of_length(2).collect();
            for (i, x) in twos.iter().enumerate() {
                for y in &twos[i + 1..] {
                    assert_ne!(classify_2cycle_pair(x, y).unwrap(), PairConfig231::Crossing, "{p}");
                }
            }
            let threes: Vec<_> = d.of_length(3).collect();
            for (i, x) in threes.iter().enumerate() {
                for y in &threes[i + 1..] {
                    assert_ne!(classify_3cycle_pair_231(x, y).unwrap(), PairConfig231::Other, "{p}");
                }
            }
            let report = check_231_family_lemmas(&p).unwrap();
            consecutive_everywhere &= !report.violations.iter().any(|v| v.lemma == "family-blocks-consecutive");
            assert!(report.passed(), "{}", report.to_json());
            if n <= 7 {
                observed.extend(report.observed);
            }
        }
    }
    assert!(consecutive_everywhere);
    let expected: BTreeSet<&str> = OBSERVATIONS_231.into_iter().collect();
    assert_eq!(observed, expected);
}

#[test]
fn sweep_132_order_three_up_to_ten() {
    let mut observed = BTreeSet::new();
    let mut checked = 0;
    for n in 0..=10 {
        for p in collect_avoiders(n, &CycleSet::order_three(), &pattern("132")) {
            let report = check_132_structure(&p).unwrap();
            assert!(report.passed(), "{}", report.to_json());
            observed.extend(report.observed);
            checked += 1;
        }
    }
    assert!(checked > 0);
    let expected: BTreeSet<&str> = OBSERVATIONS_132.into_iter().collect();
    assert_eq!(observed, expected);
}

#[test]
fn configuration_audits() {
    assert!(audit_231_pairs().matches());
    assert!(audit_132_pairs().matches());
    let p231 = pattern("231");
    assert!(forbidden_witnesses().iter().all(|w| w.contains_pattern(&p231)));
    assert_eq!(forbidden_witnesses().len(), 7);
}
