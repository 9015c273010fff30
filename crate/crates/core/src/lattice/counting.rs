use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{free_decomposition, Composition, DyckWord};

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn catalan_number(n: usize) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}

/// `M_{k,j}`: Motzkin paths of length `k` with exactly `j` flat steps at
/// height zero.
pub fn motzkin_flat_count(k: usize, j: usize) -> BigUint {
    // table[h][f]: paths so far ending at height h with f flats at level zero
    let mut table = vec![vec![BigUint::zero(); j + 1]; k + 2];
    table[0][0] = BigUint::one();
    for _ in 0..k {
        let mut next = vec![vec![BigUint::zero(); j + 1]; k + 2];
        for h in 0..=k {
            for f in 0..=j {
                let c = &table[h][f];
                if c.is_zero() {
                    continue;
                }
                next[h + 1][f] += c;
                if h > 0 {
                    next[h - 1][f] += c;
                    next[h][f] += c;
                } else if f < j {
                    next[0][f + 1] += c;
                }
            }
        }
        table = next;
    }
    table[0][j].clone()
}

pub fn motzkin_number(k: usize) -> BigUint {
    (0..=k).map(|j| motzkin_flat_count(k, j)).sum()
}

/// Compositions of `m` into exactly `k` parts, lexicographically.
pub fn compositions(m: usize, k: usize) -> Vec<Composition> {
    fn rec(rest: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if slots == 0 {
            if rest == 0 {
                out.push(Composition::new(cur.clone()).expect("positive parts"));
            }
            return;
        }
        for part in 1..=rest.saturating_sub(slots - 1) {
            cur.push(part);
            rec(rest - part, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k >= 1 && k <= m {
        rec(m, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// All compositions of `m`, by number of parts and then lexicographically.
pub fn all_compositions(m: usize) -> Vec<Composition> {
    (1..=m).flat_map(|k| compositions(m, k)).collect()
}

/// Dyck words of semilength `m` in lexicographic order (`0 < 1`).
pub fn all_dyck_words(m: usize) -> Vec<DyckWord> {
    fn rec(open: usize, close: usize, m: usize, cur: &mut Vec<bool>, out: &mut Vec<DyckWord>) {
        if cur.len() == 2 * m {
            out.push(DyckWord(cur.clone()));
            return;
        }
        if open < m {
            cur.push(false);
            rec(open + 1, close, m, cur, out);
            cur.pop();
        }
        if close < open {
            cur.push(true);
            rec(open, close + 1, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, 0, m, &mut Vec::with_capacity(2 * m), &mut out);
    out
}

/// `2^(l-1) · C_{x_1} ··· C_{x_k}` for a word with `l` hits and free
/// composition `(x_1, ..., x_k)`: the number of 3-cycle-only 132-avoiders
/// with this Dyck word.
pub fn first_catalan_count(d: &DyckWord) -> BigUint {
    let hits = d.hits().len();
    let blocks = free_decomposition(d).blocks;
    let product: BigUint = blocks.iter().map(|b| catalan_number(b.size())).product();
    (BigUint::one() << (hits - 1)) * product
}

/// Ways to place `r` fixed points among the hits of a Dyck word with `l`
/// hits. Three readings of this factor are in circulation; only
/// [`BinomialVariant::StarsAndBars`] and [`BinomialVariant::ProofSlots`]
/// (which coincide) agree with exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinomialVariant {
    /// `C(r + l, r)`.
    TheoremStated,
    /// `C(r + l - 1, r)`: `r` identical items into `l` slots.
    StarsAndBars,
    /// `C(r + j, r)` with `j + 1 = l` slots.
    ProofSlots,
}

impl BinomialVariant {
    pub const ALL: [BinomialVariant; 3] =
        [BinomialVariant::TheoremStated, BinomialVariant::StarsAndBars, BinomialVariant::ProofSlots];

    pub fn factor(self, r: usize, hits: usize) -> BigUint {
        match self {
            BinomialVariant::TheoremStated => binomial(r + hits, r),
            BinomialVariant::StarsAndBars => binomial(r + hits - 1, r),
            BinomialVariant::ProofSlots => {
                let j = hits - 1;
                binomial(r + j, r)
            }
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            BinomialVariant::TheoremStated => "C(r+l, r)",
            BinomialVariant::StarsAndBars => "C(r+l-1, r)",
            BinomialVariant::ProofSlots => "C(r+j, r), j = l-1",
        }
    }
}

/// Order-3 132-avoiders with `m` 3-cycles and `r` fixed points.
pub fn order3_count(m: usize, r: usize) -> BigUint {
    order3_count_with(m, r, BinomialVariant::StarsAndBars)
}

/// The finite formula summed over composition lengths `k` and hit counts
/// `l`, with the fixed-point factor chosen by `variant`. `m = 0` counts the
/// identity.
pub fn order3_count_with(m: usize, r: usize, variant: BinomialVariant) -> BigUint {
    if m == 0 {
        return BigUint::one();
    }
    // catalan_products[k][s] = Σ over compositions of s into k parts of Π C_{x_i}
    let catalans: Vec<BigUint> = (0..=m).map(catalan_number).collect();
    let mut catalan_products = vec![vec![BigUint::zero(); m + 1]; m + 1];
    catalan_products[0][0] = BigUint::one();
    for k in 1..=m {
        for s in k..=m {
            let mut acc = BigUint::zero();
            for part in 1..=s - (k - 1) {
                acc += &catalans[part] * &catalan_products[k - 1][s - part];
            }
            catalan_products[k][s] = acc;
        }
    }
    let mut total = BigUint::zero();
    for k in 1..=m {
        let compositions_weight = &catalan_products[k][m];
        for hits in 2..=k + 1 {
            let paths = motzkin_flat_count(k - 1, hits - 2);
            if paths.is_zero() {
                continue;
            }
            total += (BigUint::one() << (hits - 1)) * variant.factor(r, hits) * paths * compositions_weight;
        }
    }
    total
}
