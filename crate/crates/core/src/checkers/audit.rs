use std::collections::BTreeSet;

use serde::Serialize;

use crate::perm::{CycleForm3, Permutation};

/// Two 3-cycles on `1..=6`: the support of the cycle through `1`, and the
/// orientation of each cycle (that one first).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct PairShape {
    pub first: [usize; 3],
    pub forms: (CycleForm3, CycleForm3),
}

impl PairShape {
    fn cycle(support: [usize; 3], form: CycleForm3) -> Vec<usize> {
        let [a, b, c] = support;
        match form {
            CycleForm3::Form123 => vec![a, b, c],
            CycleForm3::Form132 => vec![a, c, b],
        }
    }

    pub fn permutation(&self) -> Permutation {
        let second: Vec<usize> = (1..=6).filter(|v| !self.first.contains(v)).collect();
        let second = [second[0], second[1], second[2]];
        let cycles = [Self::cycle(self.first, self.forms.0), Self::cycle(second, self.forms.1)];
        Permutation::from_cycles(6, &cycles).expect("two disjoint 3-cycles")
    }

    /// All 10 position patterns under all 4 orientation choices.
    pub fn all() -> Vec<PairShape> {
        let forms = [CycleForm3::Form123, CycleForm3::Form132];
        let mut out = Vec::with_capacity(40);
        for b in 2..=6 {
            for c in b + 1..=6 {
                for f1 in forms {
                    for f2 in forms {
                        out.push(PairShape { first: [1, b, c], forms: (f1, f2) });
                    }
                }
            }
        }
        out
    }
}

/// The shapes that avoid a pattern, next to the list claimed allowed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigurationAudit {
    pub pattern: Permutation,
    pub avoiders: BTreeSet<PairShape>,
    pub allowed: BTreeSet<PairShape>,
}

impl ConfigurationAudit {
    pub fn matches(&self) -> bool {
        self.avoiders == self.allowed
    }
}

fn audit(pattern: &str, allowed: BTreeSet<PairShape>) -> ConfigurationAudit {
    let pattern: Permutation = pattern.parse().expect("pattern");
    let avoiders = PairShape::all().into_iter().filter(|s| s.permutation().avoids(&pattern)).collect();
    ConfigurationAudit { pattern, avoiders, allowed }
}

/// Separated, and the two crossing shapes, each with both cycles `(a,c,b)`.
pub fn audit_231_pairs() -> ConfigurationAudit {
    let form = (CycleForm3::Form132, CycleForm3::Form132);
    let allowed = [[1, 2, 3], [1, 3, 6], [1, 4, 6]]
        .into_iter()
        .map(|first| PairShape { first, forms: form })
        .collect();
    audit("231", allowed)
}

/// Shapes A, B, C with matching orientations, and C with mixed ones.
pub fn audit_132_pairs() -> ConfigurationAudit {
    use CycleForm3::{Form123, Form132};
    let mut allowed = BTreeSet::new();
    for first in [[1, 3, 5], [1, 4, 6], [1, 5, 6]] {
        for form in [Form123, Form132] {
            allowed.insert(PairShape { first, forms: (form, form) });
        }
    }
    for forms in [(Form123, Form132), (Form132, Form123)] {
        allowed.insert(PairShape { first: [1, 5, 6], forms });
    }
    audit("132", allowed)
}

/// Small permutations exhibited to rule out configurations among
/// 231-avoiders; each must contain 231.
pub fn forbidden_witnesses() -> Vec<Permutation> {
    ["7326145", "7412653", "52431", "53241", "4231", "625134", "641253"]
        .iter()
        .map(|s| s.parse().expect("witness"))
        .collect()
}
