use crate::perm::Permutation;

use super::CycleSet;

/// Candidate cycles opened by `opener`, in generation order.
fn candidate_cycles(opener: usize, others: &[usize], allowed: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for &len in allowed {
        if len - 1 > others.len() {
            continue;
        }
        for_each_combination(others, len - 1, &mut |combo| {
            for_each_arrangement(combo, &mut |arr| {
                let mut cycle = Vec::with_capacity(len);
                cycle.push(opener);
                cycle.extend_from_slice(arr);
                out.push(cycle);
            });
        });
    }
    out
}

fn for_each_combination(items: &[usize], k: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, f);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut Vec::with_capacity(k), f);
}

/// Arrangements of an ascending slice, in lexicographic order.
fn for_each_arrangement(items: &[usize], f: &mut impl FnMut(&[usize])) {
    fn rec(items: &[usize], used: &mut [bool], cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == items.len() {
            f(cur);
            return;
        }
        for i in 0..items.len() {
            if !used[i] {
                used[i] = true;
                cur.push(items[i]);
                rec(items, used, cur, f);
                cur.pop();
                used[i] = false;
            }
        }
    }
    rec(items, &mut vec![false; items.len()], &mut Vec::with_capacity(items.len()), f);
}

/// The possible cycles through `1`, i.e. the roots of the search tree. Each
/// root can be explored independently with [`CycleConstrained::starting_with`].
pub fn first_cycles(n: usize, allowed: &CycleSet) -> Vec<Vec<usize>> {
    if n == 0 {
        return Vec::new();
    }
    let others: Vec<usize> = (2..=n).collect();
    let lengths: Vec<usize> = allowed.lengths().collect();
    candidate_cycles(1, &others, &lengths)
}

pub fn generate_cycle_constrained(n: usize, allowed: &CycleSet) -> CycleConstrained {
    CycleConstrained::new(n, allowed)
}

struct Frame {
    candidates: Vec<Vec<usize>>,
    next: usize,
    applied: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

type KeepAll = fn(&[usize]) -> bool;

/// Depth-first stream over `S_n^S` in the documented order, optionally
/// pruned.
///
/// The pruning callback sees the partial one-line word (`0` marks an
/// unassigned position) after every placed cycle; returning `false` skips
/// the whole subtree.
pub struct CycleConstrained<P = KeepAll> {
    n: usize,
    allowed: Vec<usize>,
    word: Vec<usize>,
    stack: Vec<Frame>,
    state: State,
    root: Option<Vec<usize>>,
    keep: P,
}

impl CycleConstrained<KeepAll> {
    pub fn new(n: usize, allowed: &CycleSet) -> Self {
        Self {
            n,
            allowed: allowed.lengths().collect(),
            word: vec![0; n],
            stack: Vec::new(),
            state: State::Fresh,
            root: None,
            keep: |_| true,
        }
    }

    /// Only the subtree whose cycle through `1` is `first`.
    pub fn starting_with(n: usize, allowed: &CycleSet, first: Vec<usize>) -> Self {
        let mut s = Self::new(n, allowed);
        s.root = Some(first);
        s
    }
}

impl<P: FnMut(&[usize]) -> bool> CycleConstrained<P> {
    pub fn with_pruning<Q: FnMut(&[usize]) -> bool>(self, keep: Q) -> CycleConstrained<Q> {
        CycleConstrained {
            n: self.n,
            allowed: self.allowed,
            word: self.word,
            stack: self.stack,
            state: self.state,
            root: self.root,
            keep,
        }
    }

    fn frame_for(&self, opener: usize) -> Frame {
        let others: Vec<usize> =
            (opener + 1..=self.n).filter(|&v| self.word[v - 1] == 0).collect();
        let candidates = candidate_cycles(opener, &others, &self.allowed);
        Frame { candidates, next: 0, applied: None }
    }

    fn set_cycle(&mut self, cycle: &[usize], assign: bool) {
        for (i, &from) in cycle.iter().enumerate() {
            self.word[from - 1] = if assign { cycle[(i + 1) % cycle.len()] } else { 0 };
        }
    }

    fn first_unplaced(&self, from: usize) -> Option<usize> {
        (from..=self.n).find(|&v| self.word[v - 1] == 0)
    }
}

impl<P: FnMut(&[usize]) -> bool> Iterator for CycleConstrained<P> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        match self.state {
            State::Done => return None,
            State::Fresh => {
                self.state = State::Running;
                if self.n == 0 {
                    self.state = State::Done;
                    return Some(Permutation::empty());
                }
                let mut frame = self.frame_for(1);
                if let Some(root) = self.root.take() {
                    frame.candidates.retain(|c| *c == root);
                }
                self.stack.push(frame);
            }
            State::Running => {}
        }
        loop {
            let depth = match self.stack.len() {
                0 => {
                    self.state = State::Done;
                    return None;
                }
                d => d - 1,
            };
            if let Some(prev) = self.stack[depth].applied.take() {
                let cycle = std::mem::take(&mut self.stack[depth].candidates[prev]);
                self.set_cycle(&cycle, false);
                self.stack[depth].candidates[prev] = cycle;
            }
            let frame = &mut self.stack[depth];
            if frame.next >= frame.candidates.len() {
                self.stack.pop();
                continue;
            }
            let idx = frame.next;
            frame.next += 1;
            frame.applied = Some(idx);
            let cycle = std::mem::take(&mut frame.candidates[idx]);
            self.set_cycle(&cycle, true);
            let opener = cycle[0];
            self.stack[depth].candidates[idx] = cycle;
            if !(self.keep)(&self.word) {
                continue;
            }
            match self.first_unplaced(opener + 1) {
                None => return Some(Permutation::from_vec_unchecked(self.word.clone())),
                Some(next_opener) => {
                    let frame = self.frame_for(next_opener);
                    self.stack.push(frame);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;

    fn set(s: &str) -> CycleSet {
        s.parse().unwrap()
    }

    fn strings(n: usize, s: &str) -> Vec<String> {
        generate_cycle_constrained(n, &set(s)).map(|p| p.to_string()).collect()
    }

    #[test]
    fn single_three_cycle_both_orientations() {
        assert_eq!(strings(3, "3"), vec!["231", "312"]);
    }

    #[test]
    fn all_of_s2() {
        assert_eq!(strings(2, "1,2"), vec!["12", "21"]);
    }

    #[test]
    fn empty_when_no_cycle_type_fits() {
        assert!(strings(1, "2").is_empty());
        assert!(strings(5, "2").is_empty());
        assert_eq!(strings(0, "2"), vec![""]);
    }

    #[test]
    fn size_four_with_all_lengths() {
        assert_eq!(generate_cycle_constrained(4, &set("1,2,3")).count(), 18);
    }

    #[test]
    fn recurrence_for_cycles_up_to_three() {
        // f(n) = f(n-1) + (n-1) f(n-2) + (n-1)(n-2) f(n-3)
        let mut f = vec![1u64, 1, 2];
        for n in 3..=10u64 {
            let k = n as usize;
            f.push(f[k - 1] + (n - 1) * f[k - 2] + (n - 1) * (n - 2) * f[k - 3]);
        }
        for n in 0..=10 {
            assert_eq!(generate_cycle_constrained(n, &set("1,2,3")).count() as u64, f[n], "n = {n}");
        }
    }

    #[test]
    fn stream_has_no_duplicates_and_right_cycle_types() {
        for s in ["1,2,3", "2,3", "1,3", "3", "1,4"] {
            let allowed = set(s);
            let all: Vec<Permutation> = generate_cycle_constrained(7, &allowed).collect();
            let distinct: BTreeSet<&Permutation> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
            for p in &all {
                assert!(p.cycle_counts().as_map().keys().all(|&k| allowed.contains(k)));
            }
        }
    }

    #[test]
    fn partitions_by_first_cycle_cover_the_stream() {
        let allowed = set("1,2,3");
        let whole: Vec<Permutation> = generate_cycle_constrained(6, &allowed).collect();
        let parts: Vec<Permutation> = first_cycles(6, &allowed)
            .into_iter()
            .flat_map(|c| CycleConstrained::starting_with(6, &allowed, c))
            .collect();
        assert_eq!(whole, parts);
    }

    #[test]
    fn deterministic_order() {
        let a: Vec<_> = generate_cycle_constrained(6, &set("1,2,3")).collect();
        let b: Vec<_> = generate_cycle_constrained(6, &set("1,2,3")).collect();
        assert_eq!(a, b);
        assert_eq!(a.first().unwrap().to_string(), "123456");
    }
}
