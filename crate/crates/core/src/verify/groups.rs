use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::checkers::{
    audit_132_pairs, audit_231_pairs, check_132_structure, check_231_family_lemmas, forbidden_witnesses,
    OBSERVATIONS_132, OBSERVATIONS_231,
};
use crate::enumerate::{collect_avoiders, count_avoiders, refined_census, CycleSet};
use crate::gf::{
    a13_132, a13_132_closed, a231_subset, a231_table_closed_form, a3_132, b231, growth_estimate, motzkin,
    motzkin_flats,
};
use crate::lattice::{
    all_dyck_words, dyck_to_motzkin, first_catalan_count, free_decomposition, motzkin_flat_count, motzkin_number,
    motzkin_to_dyck, order3_count, order3_count_with, reduce, BinomialVariant, Composition,
};
use crate::perm::Permutation;
use crate::series::{rat, BivariateSeries, TruncatedSeries};
use crate::tables::{lookup, rows_of, TableId, TableRow};

use super::{Bounds, Check, CheckGroup};

const TABLE_LEN: usize = 12;

fn pattern(s: &str) -> Permutation {
    s.parse().expect("pattern")
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Coefficients `lo..=hi` as decimal strings.
fn coefficients(s: &TruncatedSeries, lo: usize, hi: usize) -> String {
    join((lo..=hi).map(|n| s.coeff(n).clone()))
}

fn published(row: &TableRow, lo: usize, hi: usize) -> String {
    join((lo..=hi).map(|n| row.value(n).expect("within the table")))
}

fn oracle(cycles: &CycleSet, p: &Permutation, lo: usize, hi: usize) -> String {
    join((lo..=hi).map(|n| count_avoiders(n, cycles, p)))
}

fn failed(name: impl Into<String>, err: impl ToString) -> Check {
    Check::holds(name, "ok", err.to_string(), false)
}

/// Each 231 row: `B` specialized, the row's own closed form, and the
/// oracle, against the published values.
pub fn table_231(bounds: &Bounds) -> CheckGroup {
    let mut group = CheckGroup::new("231-avoiders by cycle set");
    let hi = bounds.oracle_max().min(TABLE_LEN);
    let p231 = pattern("231");
    for s in CycleSet::all_subsets_of_three() {
        let row = lookup(&s, &p231).expect("bundled row");
        let expected = published(&row, 1, TABLE_LEN);
        match a231_subset(&s, TABLE_LEN + 1) {
            Ok(series) => group.push(Check::equal(
                format!("S={s} B specialized"),
                expected.clone(),
                coefficients(&series, 1, TABLE_LEN),
            )),
            Err(e) => group.push(failed(format!("S={s} B specialized"), e)),
        }
        match a231_table_closed_form(&s, TABLE_LEN + 1) {
            Ok(series) => group.push(Check::equal(
                format!("S={s} closed form"),
                expected,
                coefficients(&series, 1, TABLE_LEN),
            )),
            Err(e) => group.push(failed(format!("S={s} closed form"), e)),
        }
        group.push(Check::equal(
            format!("S={s} oracle n=1..{hi}"),
            published(&row, 1, hi),
            oracle(&s, &p231, 1, hi),
        ));
    }
    group
}

/// Order-3 123-avoiders vanish from `n = 9` on.
pub fn proposition_123(bounds: &Bounds) -> CheckGroup {
    let mut group = CheckGroup::new("order-3 123-avoiders");
    let hi = bounds.order3_max();
    let cycles = CycleSet::order_three();
    let counts: Vec<BigUint> = (1..=hi).map(|n| count_avoiders(n, &cycles, &pattern("123"))).collect();
    let row = lookup(&cycles, &pattern("123")).expect("bundled row");
    group.push(Check::equal(
        "oracle n=1..12 against published row",
        published(&row, 1, TABLE_LEN),
        join(&counts[..TABLE_LEN]),
    ));
    group.push(Check::equal(
        format!("zero for n=9..{hi}"),
        join(vec![0; hi - 8]),
        join(&counts[8..]),
    ));
    group
}

/// Every pattern row for cycles in `{1,3}` and in `{1,2,3}` by oracle.
pub fn pattern_tables(bounds: &Bounds) -> CheckGroup {
    let mut group = CheckGroup::new("pattern rows by oracle");
    for (table, hi) in [
        (TableId::Order3ByPattern, bounds.order3_max().min(TABLE_LEN)),
        (TableId::Cycles123ByPattern, bounds.oracle_max().min(TABLE_LEN)),
    ] {
        for row in rows_of(table) {
            group.push(Check::equal(
                format!("{table} {} n=1..{hi}", row.label),
                published(&row, 1, hi),
                oracle(&row.cycles, &row.pattern, 1, hi),
            ));
        }
    }
    group
}

/// Closed and structural forms of `B` agree, and its refined coefficients
/// match the refined census.
pub fn b231_consistency(bounds: &Bounds) -> CheckGroup {
    let mut group = CheckGroup::new("trivariate 231 function");
    let bound = 14.max(bounds.n_max);
    let b = match b231(bound) {
        Ok(b) => {
            group.push(Check::holds(format!("closed = i/(1-i(q+s+r)) through weight {bound}"), "equal", "equal", true));
            b
        }
        Err(e) => {
            group.push(failed("closed = structural", e));
            return group;
        }
    };
    let cycles = CycleSet::up_to_three();
    for n in 1..=bounds.n_max {
        let census = match refined_census(n, &cycles, &pattern("231")) {
            Ok(c) => c,
            Err(e) => {
                group.push(failed(format!("refined census n={n}"), e));
                continue;
            }
        };
        let keys: Vec<(usize, usize, usize)> = (0..=n / 3)
            .flat_map(|c3| (0..=(n - 3 * c3) / 2).map(move |c2| (n - 3 * c3 - 2 * c2, c2, c3)))
            .collect();
        let show = |f: &dyn Fn(usize, usize, usize) -> String| {
            join(keys.iter().map(|&(c1, c2, c3)| format!("({c1} {c2} {c3}):{}", f(c1, c2, c3))))
        };
        group.push(Check::equal(
            format!("refined coefficients n={n}"),
            show(&|c1, c2, c3| census.get(c1, c2, c3).to_string()),
            show(&|c1, c2, c3| b.coeff(c1, c2, c3).to_string()),
        ));
    }
    group
}

/// Order-3 132-avoiders: two forms, the published row, the oracle.
pub fn order3_132_theorem(bounds: &Bounds) -> CheckGroup {
    let mut group = CheckGroup::new("order-3 132-avoiders");
    match a13_132(61) {
        Ok(_) => group.push(Check::holds("closed = structural through order 60", "equal", "equal", true)),
        Err(e) => group.push(failed("closed = structural through order 60", e)),
    }
    let hi = bounds.order3_max();
    let series = match a13_132_closed(hi + 1) {
        Ok(s) => s,
        Err(e) => {
            group.push(failed("closed form", e));
            return group;
        }
    };
    let cycles = CycleSet::order_three();
    let row = lookup(&cycles, &pattern("132")).expect("bundled row");
    group.push(Check::equal("published row n=1..12", published(&row, 1, TABLE_LEN), coefficients(&series, 1, TABLE_LEN)));
    group.push(Check::equal(format!("oracle n=0..{hi}"), oracle(&cycles, &pattern("132"), 0, hi), coefficients(&series, 0, hi)));
    group
}

/// 3-cycle-only 132-avoiders, with `a_0 = 1` for the empty permutation.
pub fn three_cycles_132(bounds: &Bounds) -> CheckGroup {
    let mut group = CheckGroup::new("3-cycle-only 132-avoiders");
    group.notes.push("a_0 = 1 is added to the substituted Motzkin expression, which alone has constant term 0".into());
    let hi = bounds.order3_max();
    let series = match a3_132(hi.max(18)) {
        Ok(s) => s,
        Err(e) => {
            group.push(failed("series", e));
            return group;
        }
    };
    let threes: CycleSet = "3".parse().expect("cycle set");
    group.push(Check::equal(format!("oracle n=0..{hi}"), oracle(&threes, &pattern("132"), 0, hi), coefficients(&series, 0, hi)));
    for m in 1..=6 {
        let total: BigUint = all_dyck_words(m).iter().map(first_catalan_count).sum();
        group.push(Check::equal(format!("sum over Dyck words m={m}"), series.coeff(3 * m).to_string(), total.to_string()));
    }
    group
}

/// `(a_{n+3}/a_n)^{1/3}` at `n = 300` inside `[1.86, 1.92]`.
pub fn growth_band() -> CheckGroup {
    let mut group = CheckGroup::new("growth rate");
    let frac = |p: i64, q: i64| BigRational::new(p.into(), q.into());
    match a13_132_closed(310).and_then(|s| growth_estimate(&s, 300)) {
        Ok(g) => {
            group.notes.push(format!("(a_303/a_300)^(1/3) = {}", g.decimal));
            group.push(Check::holds(
                "n=300 estimate in [1.86, 1.92]",
                "[1.86, 1.92]",
                g.decimal.chars().take(12).collect::<String>(),
                g.within(&frac(186, 100), &frac(192, 100)),
            ));
        }
        Err(e) => group.push(failed("growth estimate", e)),
    }
    group
}

/// The `m(t, x)` closed form against the path-counting recurrence, and its
/// functional equation.
pub fn motzkin_cross_check() -> CheckGroup {
    let mut group = CheckGroup::new("Motzkin paths by flats at level zero");
    const K: usize = 12;
    let (m, m1) = match (motzkin_flats(K, K), motzkin(K)) {
        (Ok(m), Ok(m1)) => (m, m1),
        (Err(e), _) | (_, Err(e)) => {
            group.push(failed("series", e));
            return group;
        }
    };
    for k in 0..=K {
        group.push(Check::equal(
            format!("x^{k} row, t^0..t^{k}"),
            join((0..=k).map(|j| motzkin_flat_count(k, j))),
            join((0..=k).map(|j| m.coeff(j, k).clone())),
        ));
    }
    // m = 1 + t x m + x^2 m m(1, x)
    let rhs = BivariateSeries::one(K, K)
        .add(&BivariateSeries::monomial(K, K, rat(1), 1, 1).mul(&m).expect("orders match"))
        .and_then(|acc| {
            let tail = BivariateSeries::monomial(K, K, rat(1), 0, 2)
                .mul(&m)?
                .mul(&BivariateSeries::from_x_series(&m1, K))?;
            acc.add(&tail)
        });
    group.push(Check::holds(
        "m = 1 + t x m + x^2 m m(1,x) through order 12",
        "identity",
        if rhs.as_ref() == Ok(&m) { "identity" } else { "differs" },
        rhs.as_ref() == Ok(&m),
    ));
    group
}

/// Exhaustive round trips on Dyck words up to semilength `m_max`.
pub fn bijection_audit(bounds: &Bounds) -> CheckGroup {
    let mut group = CheckGroup::new("Dyck-Motzkin bijection");
    for m in 1..=bounds.m_max {
        let words = all_dyck_words(m);
        let results: Vec<(bool, bool, bool, Option<Composition>)> = words
            .par_iter()
            .map(|d| {
                let x = free_decomposition(d).composition();
                let path = dyck_to_motzkin(d);
                let round_trip = x.as_ref().and_then(|x| motzkin_to_dyck(&path, x).ok()).as_ref() == Some(d);
                let flats = d.hits().len() - 2 == path.flats_at_level_zero();
                let reduced = x.as_ref().map(|x| reduce(d).semilength() == x.len()).unwrap_or(false);
                (round_trip, flats, reduced, x)
            })
            .collect();
        let count = |f: fn(&(bool, bool, bool, Option<Composition>)) -> bool| results.iter().filter(|r| f(r)).count();
        let n = words.len();
        group.push(Check::equal(format!("m={m} round trips"), n, count(|r| r.0)));
        group.push(Check::equal(format!("m={m} hits - 2 = level-zero flats"), n, count(|r| r.1)));
        group.push(Check::equal(format!("m={m} reduced length = parts"), n, count(|r| r.2)));
        let mut per_composition: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for x in results.iter().filter_map(|r| r.3.as_ref()) {
            *per_composition.entry(x.parts().to_vec()).or_default() += 1;
        }
        let expected = join(per_composition.keys().map(|x| motzkin_number(x.len() - 1)));
        group.push(Check::equal(
            format!("m={m} words per composition = M_(k-1)"),
            expected,
            join(per_composition.values()),
        ));
        group.push(Check::equal(format!("m={m} every composition occurs"), 1usize << (m - 1), per_composition.len()));
    }
    group
}

/// The finite count of order-3 132-avoiders against the refined oracle,
/// for every reading of the fixed-point factor.
pub fn counting_formula(bounds: &Bounds) -> CheckGroup {
    let mut group = CheckGroup::new("counting formula for order-3 132-avoiders");
    let hi = bounds.order3_max();
    let cycles = CycleSet::order_three();
    let mut oracle_counts = BTreeMap::new();
    for n in 0..=hi {
        match refined_census(n, &cycles, &pattern("132")) {
            Ok(census) => {
                for m in 0..=n / 3 {
                    oracle_counts.insert((m, n - 3 * m), census.get(n - 3 * m, 0, m));
                }
            }
            Err(e) => group.push(failed(format!("census n={n}"), e)),
        }
    }
    let mut matching = Vec::new();
    for variant in BinomialVariant::ALL {
        let first_miss = oracle_counts
            .iter()
            .find(|(&(m, r), count)| &&order3_count_with(m, r, variant) != count)
            .map(|(&(m, r), count)| (m, r, count.clone(), order3_count_with(m, r, variant)));
        match first_miss {
            None => {
                matching.push(variant.label());
                group.notes.push(format!("{} matches the oracle for all 3m + r <= {hi}", variant.label()));
            }
            Some((m, r, want, got)) => group
                .notes
                .push(format!("{} fails at m={m}, r={r}: oracle {want}, formula {got}", variant.label())),
        }
    }
    group.push(Check::holds(
        "some fixed-point factor matches the oracle",
        "at least one",
        if matching.is_empty() { "none".to_string() } else { matching.join("; ") },
        !matching.is_empty(),
    ));
    for (&(m, r), count) in &oracle_counts {
        group.push(Check::equal(format!("m={m} r={r}"), count.clone(), order3_count(m, r)));
    }
    group
}

/// Both inequality chains, on oracle values.
pub fn conjecture_chains(bounds: &Bounds) -> CheckGroup {
    let mut group = CheckGroup::new("conjectured inequalities");
    let (order3, full) = (CycleSet::order_three(), CycleSet::up_to_three());
    for n in 1..=bounds.n_max {
        let a = |s: &CycleSet, p: &str| count_avoiders(n, s, &pattern(p));
        let (o132, o321) = (a(&order3, "132"), a(&order3, "321"));
        group.push(Check::holds(
            format!("n={n} order-3: 132 <= 321"),
            "ascending",
            format!("{o132} <= {o321}"),
            o132 <= o321,
        ));
        let chain: Vec<BigUint> = ["123", "132", "321", "231"].iter().map(|p| a(&full, p)).collect();
        group.push(Check::holds(
            format!("n={n} cycles 1,2,3: 123 <= 132 <= 321 <= 231"),
            "ascending",
            join(&chain).replace(',', " <= "),
            chain.windows(2).all(|w| w[0] <= w[1]),
        ));
    }
    group
}

/// Checker sweeps over all 231-avoiders with cycles up to three and all
/// order-3 132-avoiders, plus the two-cycle configuration audits.
pub fn lemma_sweeps(bounds: &Bounds) -> CheckGroup {
    let mut group = CheckGroup::new("configuration lemmas");
    let (n231, n132) = bounds.sweep_max();

    let mut violations = Vec::new();
    let mut observed = BTreeSet::new();
    let mut swept = 0;
    for n in 0..=n231 {
        let avoiders = collect_avoiders(n, &CycleSet::up_to_three(), &pattern("231"));
        swept += avoiders.len();
        let reports: Vec<_> = avoiders.par_iter().map(check_231_family_lemmas).collect();
        for report in reports {
            match report {
                Ok(r) => {
                    if n <= 7 {
                        observed.extend(r.observed.iter().copied());
                    }
                    if !r.passed() {
                        violations.push(r.to_json().to_string());
                    }
                }
                Err(e) => violations.push(e.to_string()),
            }
        }
    }
    group.push(Check::holds(
        format!("231 sweep n<={n231} ({swept} permutations)"),
        "0 violations",
        format!("{} violations{}", violations.len(), violations.first().map(|v| format!(", first {v}")).unwrap_or_default()),
        violations.is_empty(),
    ));
    let wanted: BTreeSet<&str> = OBSERVATIONS_231.into_iter().collect();
    group.push(Check::equal("231 configurations witnessed by n<=7", join(&wanted), join(&observed)));

    let mut violations = Vec::new();
    let mut observed = BTreeSet::new();
    let mut swept = 0;
    for n in 0..=n132 {
        let avoiders = collect_avoiders(n, &CycleSet::order_three(), &pattern("132"));
        swept += avoiders.len();
        let reports: Vec<_> = avoiders.par_iter().map(check_132_structure).collect();
        for report in reports {
            match report {
                Ok(r) => {
                    observed.extend(r.observed.iter().copied());
                    if !r.passed() {
                        violations.push(r.to_json().to_string());
                    }
                }
                Err(e) => violations.push(e.to_string()),
            }
        }
    }
    group.push(Check::holds(
        format!("132 sweep n<={n132} ({swept} permutations)"),
        "0 violations",
        format!("{} violations{}", violations.len(), violations.first().map(|v| format!(", first {v}")).unwrap_or_default()),
        violations.is_empty(),
    ));
    let wanted: BTreeSet<&str> = OBSERVATIONS_132.into_iter().collect();
    group.push(Check::equal(format!("132 configurations witnessed by n<={n132}"), join(&wanted), join(&observed)));

    for (name, audit) in [("231", audit_231_pairs()), ("132", audit_132_pairs())] {
        let show = |set: &BTreeSet<crate::checkers::PairShape>| join(set.iter().map(|s| s.permutation()));
        group.push(Check::equal(
            format!("{name}-avoiding pairs of 3-cycles among 40 shapes"),
            show(&audit.allowed),
            show(&audit.avoiders),
        ));
    }
    let p231 = pattern("231");
    let witnesses = forbidden_witnesses();
    let containing: Vec<String> =
        witnesses.iter().filter(|w| w.contains_pattern(&p231)).map(ToString::to_string).collect();
    group.push(Check::equal("forbidden witnesses contain 231", join(&witnesses), join(containing)));
    group
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perturbed_series_is_caught() {
        let row = lookup(&"1,2".parse().unwrap(), &pattern("231")).unwrap();
        let good = a231_table_closed_form(&"1,2".parse().unwrap(), 13).unwrap();
        let bad = good.add(&TruncatedSeries::monomial(13, rat(1), 7)).unwrap();
        assert!(Check::equal("good", published(&row, 1, 12), coefficients(&good, 1, 12)).passed);
        assert!(!Check::equal("bad", published(&row, 1, 12), coefficients(&bad, 1, 12)).passed);
    }

    #[test]
    fn small_groups_pass() {
        let bounds = Bounds { n_max: 6, m_max: 5, deep: false };
        for group in [bijection_audit(&bounds), motzkin_cross_check(), conjecture_chains(&bounds)] {
            assert!(group.passed(), "{}: {:?}", group.title, group.failures().collect::<Vec<_>>());
        }
    }
}
