//! Classical pattern containment on sequences of distinct values.
//!
//! Both arguments only need distinct entries; they are compared by relative
//! order, so partially assigned words (with unassigned slots removed) can be
//! checked directly.

/// True iff some subsequence of `word` is order-isomorphic to `pattern`.
pub fn contains_pattern(word: &[usize], pattern: &[usize]) -> bool {
    match pattern.len() {
        0 => true,
        1 => !word.is_empty(),
        2 => contains_length2(word, pattern[0] < pattern[1]),
        3 => contains_length3(word, [pattern[0], pattern[1], pattern[2]]),
        _ => contains_general(word, pattern),
    }
}

fn contains_length2(word: &[usize], ascent: bool) -> bool {
    // an ascent (descent) pair exists iff some adjacent pair is one
    word.windows(2).any(|w| (w[0] < w[1]) == ascent)
}

/// O(n²) scan: fix the middle letter, pick the extremal admissible left letter
/// in one sweep, then look for a compatible right letter in a second sweep.
fn contains_length3(word: &[usize], pattern: [usize; 3]) -> bool {
    let [p1, p2, p3] = pattern;
    let left_below_mid = p1 < p2;
    let right_below_mid = p3 < p2;
    let left_below_right = p1 < p3;
    let n = word.len();
    for j in 1..n.saturating_sub(1) {
        let mid = word[j];
        // Among admissible left letters, keep the one most likely to satisfy
        // the left/right comparison: the smallest if left must be below right.
        let mut best: Option<usize> = None;
        for &l in &word[..j] {
            if (l < mid) != left_below_mid {
                continue;
            }
            best = Some(match best {
                None => l,
                Some(b) if left_below_right => b.min(l),
                Some(b) => b.max(l),
            });
        }
        let Some(left) = best else { continue };
        let found = word[j + 1..].iter().any(|&r| {
            (r < mid) == right_below_mid && (left < r) == left_below_right
        });
        if found {
            return true;
        }
    }
    false
}

fn contains_general(word: &[usize], pattern: &[usize]) -> bool {
    fn extend(word: &[usize], pattern: &[usize], start: usize, chosen: &mut Vec<usize>) -> bool {
        let k = chosen.len();
        if k == pattern.len() {
            return true;
        }
        // not enough letters left
        if word.len() - start < pattern.len() - k {
            return false;
        }
        for idx in start..word.len() {
            let v = word[idx];
            let consistent = chosen
                .iter()
                .zip(pattern)
                .all(|(&c, &q)| v.cmp(&c) == pattern[k].cmp(&q));
            if consistent {
                chosen.push(v);
                if extend(word, pattern, idx + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    if pattern.len() > word.len() {
        return false;
    }
    extend(word, pattern, 0, &mut Vec::with_capacity(pattern.len()))
}

/// Reference check by enumerating every subsequence of length `|pattern|`.
/// Exponential; used to cross-check the fast paths.
pub fn contains_pattern_naive(word: &[usize], pattern: &[usize]) -> bool {
    fn rec(word: &[usize], pattern: &[usize], start: usize, idx: &mut Vec<usize>) -> bool {
        if idx.len() == pattern.len() {
            let k = idx.len();
            return (0..k).all(|a| {
                (0..k).all(|b| word[idx[a]].cmp(&word[idx[b]]) == pattern[a].cmp(&pattern[b]))
            });
        }
        for i in start..word.len() {
            idx.push(i);
            if rec(word, pattern, i + 1, idx) {
                return true;
            }
            idx.pop();
        }
        false
    }
    rec(word, pattern, 0, &mut Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
            let n = used.len();
            if cur.len() == n {
                out.push(cur.clone());
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    cur.push(v + 1);
                    rec(cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    #[test]
    fn length3_agrees_with_naive_exhaustively() {
        let patterns = all_perms(3);
        for n in 0..=8 {
            for w in all_perms(n) {
                for q in &patterns {
                    assert_eq!(
                        contains_pattern(&w, q),
                        contains_pattern_naive(&w, q),
                        "word {w:?} pattern {q:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn short_and_long_patterns_agree_with_naive() {
        let mut patterns = all_perms(1);
        patterns.extend(all_perms(2));
        patterns.extend(all_perms(4));
        for n in 0..=6 {
            for w in all_perms(n) {
                for q in &patterns {
                    assert_eq!(contains_pattern(&w, q), contains_pattern_naive(&w, q));
                }
            }
        }
    }

    #[test]
    fn works_on_non_standard_values() {
        // 3 9 5 is a 132 occurrence
        assert!(contains_pattern(&[3, 9, 5], &[1, 3, 2]));
        assert!(!contains_pattern(&[3, 5, 9], &[1, 3, 2]));
    }
}
