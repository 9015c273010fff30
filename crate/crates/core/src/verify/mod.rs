//! Reproducible verification suites.
//!
//! Every check records what was expected, what was computed, and whether the
//! two agree. Groups of checks are bundled into suites that the command-line
//! tool and the acceptance tests run.

mod groups;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use groups::{
    b231_consistency, bijection_audit, conjecture_chains, counting_formula, growth_band, lemma_sweeps,
    motzkin_cross_check, order3_132_theorem, pattern_tables, proposition_123, table_231, three_cycles_132,
};

/// Search and truncation limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    /// Largest `n` for oracle runs over cycles in `{1,2,3}`.
    pub n_max: usize,
    /// Largest semilength for exhaustive Dyck-word audits.
    pub m_max: usize,
    /// Extends the oracle to `n = 12` and the lemma sweeps by one size.
    pub deep: bool,
}

impl Default for Bounds {
    fn default() -> Self {
        Self { n_max: 10, m_max: 8, deep: false }
    }
}

impl Bounds {
    pub fn deep() -> Self {
        Self { deep: true, ..Self::default() }
    }

    /// Oracle bound for cycles in `{1,2,3}`.
    pub fn oracle_max(&self) -> usize {
        if self.deep {
            self.n_max.max(12)
        } else {
            self.n_max
        }
    }

    /// Order-3 avoiders are few enough to enumerate through `n = 12` always.
    pub fn order3_max(&self) -> usize {
        self.n_max.max(12)
    }

    /// Sizes for the 231 and 132 lemma sweeps.
    pub fn sweep_max(&self) -> (usize, usize) {
        if self.deep {
            (10, 12)
        } else {
            (9, 10)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

impl Check {
    pub fn equal<T: fmt::Display + PartialEq>(name: impl Into<String>, expected: T, actual: T) -> Self {
        let passed = expected == actual;
        Self { name: name.into(), expected: expected.to_string(), actual: actual.to_string(), passed }
    }

    pub fn holds(name: impl Into<String>, expected: impl Into<String>, actual: impl Into<String>, passed: bool) -> Self {
        Self { name: name.into(), expected: expected.into(), actual: actual.into(), passed }
    }
}

/// A titled list of checks, with free-form notes such as which candidate
/// formula matched.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckGroup {
    pub title: &'static str,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl CheckGroup {
    fn new(title: &'static str) -> Self {
        Self { title, checks: Vec::new(), notes: Vec::new() }
    }

    fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Tables,
    Series,
    Lemmas,
    Bijections,
    Formula,
    Conjecture,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 7] = ["tables", "series", "lemmas", "bijections", "formula", "conjecture", "all"];
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "tables" => Suite::Tables,
            "series" => Suite::Series,
            "lemmas" => Suite::Lemmas,
            "bijections" => Suite::Bijections,
            "formula" => Suite::Formula,
            "conjecture" => Suite::Conjecture,
            "all" => Suite::All,
            _ => return Err(format!("unknown suite {s:?}; expected one of {}", Suite::NAMES.join(", "))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Tables => "tables",
            Suite::Series => "series",
            Suite::Lemmas => "lemmas",
            Suite::Bijections => "bijections",
            Suite::Formula => "formula",
            Suite::Conjecture => "conjecture",
            Suite::All => "all",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub bounds: Bounds,
    pub groups: Vec<CheckGroup>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.groups.iter().all(CheckGroup::passed)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut value = serde_json::to_value(self).expect("report serializes");
        value["passed"] = self.passed().into();
        value
    }

    /// One line per check: group, check, expected, actual, pass.
    pub fn to_csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record(["group", "check", "expected", "actual", "passed"]).expect("in-memory write");
        for group in &self.groups {
            for c in &group.checks {
                let passed = if c.passed { "true" } else { "false" };
                writer
                    .write_record([group.title, &c.name, &c.expected, &c.actual, passed])
                    .expect("in-memory write");
            }
        }
        String::from_utf8(writer.into_inner().expect("flush")).expect("utf-8")
    }

    pub fn to_markdown(&self) -> String {
        let mut out = format!("# verify: {}\n\n", self.suite);
        for group in &self.groups {
            let mark = if group.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!("## {} [{mark}]\n\n", group.title));
            for note in &group.notes {
                out.push_str(&format!("> {note}\n\n"));
            }
            out.push_str("| check | expected | actual | ok |\n|---|---|---|---|\n");
            for c in &group.checks {
                let ok = if c.passed { "yes" } else { "**no**" };
                out.push_str(&format!("| {} | {} | {} | {ok} |\n", c.name, c.expected, c.actual));
            }
            out.push('\n');
        }
        out
    }
}

/// The groups making up a suite.
pub fn run(suite: Suite, bounds: &Bounds) -> VerifyReport {
    let groups = match suite {
        Suite::Tables => vec![table_231(bounds), proposition_123(bounds), pattern_tables(bounds)],
        Suite::Series => vec![
            b231_consistency(bounds),
            order3_132_theorem(bounds),
            three_cycles_132(bounds),
            growth_band(),
            motzkin_cross_check(),
        ],
        Suite::Lemmas => vec![lemma_sweeps(bounds)],
        Suite::Bijections => vec![bijection_audit(bounds)],
        Suite::Formula => vec![counting_formula(bounds)],
        Suite::Conjecture => vec![conjecture_chains(bounds)],
        Suite::All => {
            return VerifyReport {
                suite,
                bounds: *bounds,
                groups: [Suite::Tables, Suite::Series, Suite::Lemmas, Suite::Bijections, Suite::Formula, Suite::Conjecture]
                    .into_iter()
                    .flat_map(|s| run(s, bounds).groups)
                    .collect(),
            }
        }
    };
    VerifyReport { suite, bounds: *bounds, groups }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().to_string(), name);
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn empty_group_does_not_pass() {
        assert!(!CheckGroup::new("empty").passed());
    }

    #[test]
    fn report_formats() {
        let mut group = CheckGroup::new("demo");
        group.push(Check::equal("one", 1, 1));
        group.push(Check::equal("two, quoted", 2, 3));
        let report = VerifyReport { suite: Suite::Tables, bounds: Bounds::default(), groups: vec![group] };
        assert!(!report.passed());
        assert_eq!(report.to_json()["passed"], false);
        let csv = report.to_csv();
        assert!(csv.contains("\"two, quoted\",2,3,false"), "{csv}");
        assert!(report.to_markdown().contains("[FAIL]"));
    }
}
