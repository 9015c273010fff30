use std::ops::Range;

use super::{Composition, DyckWord, LatticeError, MotzkinPath, MotzkinStep};

/// A maximal run of matched pairs whose zeros sit at consecutive positions
/// and whose ones do too. Ranges are 0-based and half-open.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeBlock {
    pub pairs: Range<usize>,
    pub zeros: Range<usize>,
    pub ones: Range<usize>,
}

impl FreeBlock {
    pub fn size(&self) -> usize {
        self.pairs.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeBlockDecomposition {
    pub blocks: Vec<FreeBlock>,
}

impl FreeBlockDecomposition {
    /// Block sizes in order; `None` for the empty word.
    pub fn composition(&self) -> Option<Composition> {
        Composition::new(self.blocks.iter().map(FreeBlock::size).collect()).ok()
    }

    /// Index of the block holding matched pair `i`.
    pub fn block_of_pair(&self, i: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.pairs.contains(&i))
    }
}

pub fn free_decomposition(d: &DyckWord) -> FreeBlockDecomposition {
    let (zeros, ones) = d.matching();
    let mut blocks = Vec::new();
    let mut start = 0;
    for i in 0..zeros.len() {
        let last = i + 1 == zeros.len();
        if last || zeros[i + 1] != zeros[i] + 1 || ones[i + 1] != ones[i] + 1 {
            blocks.push(FreeBlock {
                pairs: start..i + 1,
                zeros: zeros[start]..zeros[i] + 1,
                ones: ones[start]..ones[i] + 1,
            });
            start = i + 1;
        }
    }
    FreeBlockDecomposition { blocks }
}

/// Compress every free block to a single matched pair.
pub fn reduce(d: &DyckWord) -> DyckWord {
    let decomposition = free_decomposition(d);
    let mut keep = vec![false; d.len()];
    for block in &decomposition.blocks {
        keep[block.zeros.start] = true;
        keep[block.ones.start] = true;
    }
    let bits = d.bits().iter().zip(&keep).filter(|(_, &k)| k).map(|(&b, _)| b).collect();
    DyckWord::new(bits).expect("compressing free blocks keeps the word balanced")
}

/// Reduce, then read off one step per matched pair except the last from what
/// follows its zero and its one.
pub fn dyck_to_motzkin(d: &DyckWord) -> MotzkinPath {
    let reduced = reduce(d);
    let (zeros, ones) = reduced.matching();
    let bits = reduced.bits();
    let k = zeros.len();
    let steps = (0..k.saturating_sub(1))
        .map(|i| match (bits[zeros[i] + 1], bits[ones[i] + 1]) {
            (false, false) => MotzkinStep::Up,
            (true, true) => MotzkinStep::Down,
            (true, false) => MotzkinStep::Flat,
            (false, true) => unreachable!("a reduced word has no such pair"),
        })
        .collect();
    MotzkinPath::new(steps).expect("the reduction yields a Motzkin path")
}

/// Inverse of `(free composition, dyck_to_motzkin)`.
pub fn motzkin_to_dyck(path: &MotzkinPath, x: &Composition) -> Result<DyckWord, LatticeError> {
    let k = path.len() + 1;
    if x.len() != k {
        return Err(LatticeError::LengthMismatch { parts: x.len(), needed: k });
    }
    // What follows the i-th zero and the i-th one of the reduced word; the
    // last zero is followed by a one and the last one ends the word.
    let mut after_zero = Vec::with_capacity(k);
    let mut after_one = Vec::with_capacity(k);
    for step in path.steps() {
        let (z, o) = match step {
            MotzkinStep::Up => (false, false),
            MotzkinStep::Down => (true, true),
            MotzkinStep::Flat => (true, false),
        };
        after_zero.push(z);
        after_one.push(o);
    }
    after_zero.push(true);

    let mut reduced = Vec::with_capacity(2 * k);
    let (mut next_zero, mut next_one) = (0, 0);
    let mut current = false;
    while reduced.len() < 2 * k {
        reduced.push(current);
        let follower = if current {
            next_one += 1;
            after_one.get(next_one - 1).copied()
        } else {
            next_zero += 1;
            after_zero.get(next_zero - 1).copied()
        };
        match follower {
            Some(b) => current = b,
            None => break,
        }
    }
    let zero_count = reduced.iter().filter(|&&b| !b).count();
    if reduced.len() != 2 * k || zero_count != k {
        return Err(LatticeError::NotDyck(format!("{path} does not rebuild a word")));
    }

    let (mut zeros_seen, mut ones_seen) = (0, 0);
    let mut bits = Vec::with_capacity(2 * x.total());
    for b in reduced {
        let part = if b {
            ones_seen += 1;
            x.parts()[ones_seen - 1]
        } else {
            zeros_seen += 1;
            x.parts()[zeros_seen - 1]
        };
        bits.extend(std::iter::repeat_n(b, part));
    }
    DyckWord::new(bits)
}

#[cfg(test)]
mod tests {
    use super::super::all_dyck_words;
    use super::*;

    fn dyck(s: &str) -> DyckWord {
        s.parse().unwrap()
    }

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn free_composition_examples() {
        let c = |s| free_decomposition(&dyck(s)).composition().unwrap();
        assert_eq!(c("0001100110001111"), comp("2,1,1,1,3"));
        assert_eq!(c("00101101"), comp("1,1,1,1"));
        assert_eq!(c("000111"), comp("3"));
        assert_eq!(c("00011101"), comp("3,1"));
        assert!(free_decomposition(&DyckWord::empty()).composition().is_none());
    }

    #[test]
    fn blocks_carry_positions() {
        let d = free_decomposition(&dyck("0001100110001111"));
        assert_eq!(d.blocks[0], FreeBlock { pairs: 0..2, zeros: 0..2, ones: 3..5 });
        assert_eq!(d.blocks[4], FreeBlock { pairs: 5..8, zeros: 9..12, ones: 13..16 });
        assert_eq!(d.block_of_pair(6), Some(4));
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce(&dyck("000110011000111101")), dyck("001001101101"));
        assert_eq!(reduce(&dyck("01")), dyck("01"));
        assert_eq!(reduce(&dyck("000111")), dyck("01"));
    }

    #[test]
    fn motzkin_examples() {
        assert_eq!(dyck_to_motzkin(&dyck("000110011000111101")).to_string(), "ududf");
        assert!(dyck_to_motzkin(&dyck("01")).is_empty());
        let back = motzkin_to_dyck(&"ududf".parse().unwrap(), &comp("2,1,1,1,3,1")).unwrap();
        assert_eq!(back, dyck("000110011000111101"));
        let nested = motzkin_to_dyck(&"".parse().unwrap(), &comp("4")).unwrap();
        assert_eq!(nested, dyck("00001111"));
    }

    #[test]
    fn motzkin_to_dyck_rejects_length_mismatch() {
        assert_eq!(
            motzkin_to_dyck(&"f".parse().unwrap(), &comp("1")),
            Err(LatticeError::LengthMismatch { parts: 1, needed: 2 })
        );
    }

    #[test]
    fn round_trip_small() {
        for m in 1..=6 {
            for d in all_dyck_words(m) {
                let x = free_decomposition(&d).composition().unwrap();
                let path = dyck_to_motzkin(&d);
                assert_eq!(path.len() + 1, x.len());
                assert_eq!(motzkin_to_dyck(&path, &x).unwrap(), d);
                assert_eq!(d.hits().len() - 2, path.flats_at_level_zero());
            }
        }
    }
}
