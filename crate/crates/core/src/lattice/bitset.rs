//! Fixed-size bitsets used for down-sets and up-sets.

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet { words: vec![0; len.div_ceil(64)] }
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn highest(&self) -> Option<usize> {
        highest_in(self.words.iter().copied().enumerate())
    }

    pub fn lowest(&self) -> Option<usize> {
        lowest_in(self.words.iter().copied().enumerate())
    }

    pub fn highest_common(&self, other: &BitSet) -> Option<usize> {
        highest_in(self.words.iter().zip(&other.words).map(|(a, b)| a & b).enumerate())
    }

    pub fn lowest_common(&self, other: &BitSet) -> Option<usize> {
        lowest_in(self.words.iter().zip(&other.words).map(|(a, b)| a & b).enumerate())
    }

    /// Highest element of `self & other` that is not in `outside`.
    pub fn highest_common_outside(&self, other: &BitSet, outside: &BitSet) -> Option<usize> {
        let it = self.words.iter().zip(&other.words).zip(&outside.words);
        highest_in(it.map(|((a, b), c)| a & b & !c).enumerate())
    }

    pub fn lowest_common_outside(&self, other: &BitSet, outside: &BitSet) -> Option<usize> {
        let it = self.words.iter().zip(&other.words).zip(&outside.words);
        lowest_in(it.map(|((a, b), c)| a & b & !c).enumerate())
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + t)
            })
        })
    }
}

fn highest_in(words: impl DoubleEndedIterator<Item = (usize, u64)>) -> Option<usize> {
    words.rev().find(|&(_, w)| w != 0).map(|(k, w)| k * 64 + 63 - w.leading_zeros() as usize)
}

fn lowest_in(mut words: impl Iterator<Item = (usize, u64)>) -> Option<usize> {
    words.find(|&(_, w)| w != 0).map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
}
