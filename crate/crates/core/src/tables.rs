//! Published counts for `n = 1..=12`, bundled as CSV.

use std::fmt;

use crate::enumerate::CycleSet;
use crate::perm::Permutation;

const TABLES_CSV: &str = include_str!("../data/tables.csv");

/// Which published table a row belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TableId {
    /// 231-avoiders, one row per nonempty `S ⊆ {1,2,3}`.
    A231ByCycles,
    /// Cycles in `{1,3}`, one row per pattern of length three.
    Order3ByPattern,
    /// Cycles in `{1,2,3}`, one row per pattern of length three.
    Cycles123ByPattern,
}

impl TableId {
    pub const ALL: [TableId; 3] = [TableId::A231ByCycles, TableId::Order3ByPattern, TableId::Cycles123ByPattern];

    pub fn name(self) -> &'static str {
        match self {
            TableId::A231ByCycles => "a231_by_cycles",
            TableId::Order3ByPattern => "order3_by_pattern",
            TableId::Cycles123ByPattern => "cycles123_by_pattern",
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One row: the counts `a_1..a_12` for a cycle set and pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub table: TableId,
    /// The row label as printed: the cycle set's digits or the pattern.
    pub label: String,
    pub cycles: CycleSet,
    pub pattern: Permutation,
    pub values: Vec<u64>,
}

impl TableRow {
    /// `a_n`, with `a_0 = 1`.
    pub fn value(&self, n: usize) -> Option<u64> {
        if n == 0 {
            Some(1)
        } else {
            self.values.get(n - 1).copied()
        }
    }
}

/// Every bundled row, in file order.
pub fn published_rows() -> Vec<TableRow> {
    let mut reader = csv::Reader::from_reader(TABLES_CSV.as_bytes());
    reader
        .records()
        .map(|record| {
            let record = record.expect("bundled table parses");
            let table = TableId::ALL.into_iter().find(|t| t.name() == &record[0]).expect("table id");
            let label = record[1].to_string();
            let values = record.iter().skip(2).map(|v| v.parse().expect("count")).collect();
            // "123" as a cycle set means {1,2,3}
            let digits = || label.chars().map(|c| c.to_digit(10).expect("digit") as usize);
            let (cycles, pattern) = match table {
                TableId::A231ByCycles => (CycleSet::new(digits()).expect("cycle set"), "231".parse().expect("pattern")),
                TableId::Order3ByPattern => (CycleSet::order_three(), label.parse().expect("pattern")),
                TableId::Cycles123ByPattern => (CycleSet::up_to_three(), label.parse().expect("pattern")),
            };
            TableRow { table, label, cycles, pattern, values }
        })
        .collect()
}

pub fn rows_of(table: TableId) -> Vec<TableRow> {
    published_rows().into_iter().filter(|r| r.table == table).collect()
}

/// The published row for a cycle set and pattern, if there is one.
pub fn lookup(cycles: &CycleSet, pattern: &Permutation) -> Option<TableRow> {
    published_rows().into_iter().find(|r| &r.cycles == cycles && &r.pattern == pattern)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_rows_load() {
        let rows = published_rows();
        assert_eq!(rows.len(), 15);
        assert!(rows.iter().all(|r| r.values.len() == 12));
        assert_eq!(rows_of(TableId::A231ByCycles).len(), 7);
        let r = lookup(&"2,3".parse().unwrap(), &"231".parse().unwrap()).unwrap();
        assert_eq!(r.values[11], 351);
        assert_eq!(r.value(0), Some(1));
    }

    #[test]
    fn shared_rows_agree() {
        // S = {1,3} with 231 and S = {1,2,3} with 231 each appear twice
        let order3 = lookup(&CycleSet::order_three(), &"231".parse().unwrap()).unwrap();
        let from_231 = rows_of(TableId::A231ByCycles).into_iter().find(|r| r.label == "13").unwrap();
        assert_eq!(order3.values, from_231.values);
        let full = rows_of(TableId::Cycles123ByPattern).into_iter().find(|r| r.label == "231").unwrap();
        let from_231 = rows_of(TableId::A231ByCycles).into_iter().find(|r| r.label == "123").unwrap();
        assert_eq!(full.values, from_231.values);
    }
}
