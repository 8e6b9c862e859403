//! Words of distinct integers and permutations in one-line notation.
//!
//! Positions are 1-based in every public accessor.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Parses "5,1,7,6" style text. A string of bare digits without commas,
/// such as "3142", is read one digit per entry.
pub fn parse_entries(text: &str) -> Result<Vec<u32>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    let bad = |reason: &str| Error::Parse { input: text.to_string(), reason: reason.to_string() };
    if !text.contains(',') && text.chars().all(|c| c.is_ascii_digit()) {
        return Ok(text.chars().map(|c| c.to_digit(10).unwrap()).collect());
    }
    text.split(',')
        .map(|piece| {
            let piece = piece.trim();
            if piece.is_empty() {
                return Err(bad("empty entry"));
            }
            piece.parse::<u32>().map_err(|_| bad("entries must be decimal integers"))
        })
        .collect()
}

fn write_entries(f: &mut fmt::Formatter<'_>, entries: &[u32]) -> fmt::Result {
    for (i, v) in entries.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// A finite sequence of distinct positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        let mut seen = std::collections::HashSet::with_capacity(entries.len());
        for &v in &entries {
            if v == 0 {
                return Err(Error::ZeroEntry);
            }
            if !seen.insert(v) {
                return Err(Error::RepeatedEntry(v));
            }
        }
        Ok(Word(entries))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entry at 1-based position `i`.
    pub fn get(&self, i: usize) -> Option<u32> {
        i.checked_sub(1).and_then(|k| self.0.get(k).copied())
    }

    /// The permutation order-isomorphic to this word.
    pub fn reduce(&self) -> Permutation {
        reduce(&self.0)
    }
}

impl AsRef<[u32]> for Word {
    fn as_ref(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_entries(f, &self.0)
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Word::new(parse_entries(s)?)
    }
}

/// Replaces every entry by its rank among the entries. The input must
/// have distinct entries.
pub fn reduce(entries: &[u32]) -> Permutation {
    let mut order: Vec<usize> = (0..entries.len()).collect();
    order.sort_unstable_by_key(|&i| entries[i]);
    let mut out = vec![0u32; entries.len()];
    for (rank, &i) in order.iter().enumerate() {
        out[i] = rank as u32 + 1;
    }
    Permutation(out)
}

/// A permutation of 1..=m in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        let m = entries.len();
        let mut seen = vec![false; m + 1];
        for &v in &entries {
            if v == 0 || v as usize > m {
                return Err(Error::NotAPermutation(m));
            }
            if seen[v as usize] {
                return Err(Error::RepeatedEntry(v));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation(entries))
    }

    /// Caller guarantees `entries` is a permutation of 1..=len.
    pub(crate) fn from_vec_unchecked(entries: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(entries.clone()).is_ok());
        Permutation(entries)
    }

    pub fn identity(m: usize) -> Self {
        Permutation((1..=m as u32).collect())
    }

    pub fn reversal(m: usize) -> Self {
        Permutation((1..=m as u32).rev().collect())
    }

    /// All permutations of 1..=m in lexicographic order.
    pub fn all(m: usize) -> Vec<Permutation> {
        let mut current: Vec<u32> = (1..=m as u32).collect();
        let mut out = vec![Permutation(current.clone())];
        while next_permutation(&mut current) {
            out.push(Permutation(current.clone()));
        }
        out
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entry at 1-based position `i`.
    pub fn get(&self, i: usize) -> Option<u32> {
        i.checked_sub(1).and_then(|k| self.0.get(k).copied())
    }

    /// 1-based position of the value `v`.
    pub fn index_of(&self, v: u32) -> Result<usize> {
        self.0.iter().position(|&e| e == v).map(|p| p + 1).ok_or(Error::OutOfRange { value: v, len: self.len() })
    }

    /// `pos[v]` is the 0-based position of value `v`; `pos[0]` is unused.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.len() + 1];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v as usize] = i;
        }
        pos
    }

    /// Maximal strictly decreasing factors, left to right.
    pub fn descending_runs(&self) -> Vec<&[u32]> {
        split_runs(&self.0, |a, b| a > b)
    }

    /// Maximal strictly increasing factors, left to right.
    pub fn ascending_runs(&self) -> Vec<&[u32]> {
        split_runs(&self.0, |a, b| a < b)
    }

    /// Reverses every descending run in place.
    pub fn rev(&self) -> Permutation {
        let mut out = Vec::with_capacity(self.len());
        for run in self.descending_runs() {
            out.extend(run.iter().rev());
        }
        Permutation(out)
    }

    /// 1-based positions `i` with `p[i] > p[i+1]`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.len()).filter(|&i| self.0[i - 1] > self.0[i]).collect()
    }

    pub fn descent_count(&self) -> usize {
        self.0.windows(2).filter(|w| w[0] > w[1]).count()
    }

    pub fn ascent_count(&self) -> usize {
        self.0.windows(2).filter(|w| w[0] < w[1]).count()
    }

    /// Number of `i <= bound` with `p[i] < p[i+1]`.
    pub fn bounded_ascent_count(&self, bound: usize) -> usize {
        self.0.windows(2).take(bound).filter(|w| w[0] < w[1]).count()
    }

    pub fn has_double_descent(&self) -> bool {
        self.0.windows(3).any(|w| w[0] > w[1] && w[1] > w[2])
    }

    /// Inversions as a bitmask over value pairs `a < b` (bit set when `b`
    /// precedes `a`). Supports lengths up to 16.
    pub fn inversion_mask(&self) -> u128 {
        let m = self.len();
        assert!(m <= 16, "inversion masks support length at most 16");
        let pos = self.positions();
        let mut mask = 0u128;
        let mut bit = 0;
        for a in 1..=m {
            for b in a + 1..=m {
                if pos[b] < pos[a] {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        mask
    }

    /// Right weak order: inversion-set containment.
    pub fn weak_le(&self, other: &Permutation) -> bool {
        assert_eq!(self.len(), other.len());
        let (p, q) = (self.positions(), other.positions());
        let m = self.len();
        for a in 1..=m {
            for b in a + 1..=m {
                if p[b] < p[a] && q[b] > q[a] {
                    return false;
                }
            }
        }
        true
    }

    /// The word with `k` added to every entry.
    pub fn shifted(&self, k: u32) -> Word {
        Word(self.0.iter().map(|&v| v + k).collect())
    }
}

fn split_runs(entries: &[u32], keep: impl Fn(u32, u32) -> bool) -> Vec<&[u32]> {
    let mut runs = Vec::new();
    let mut start = 0;
    for i in 1..=entries.len() {
        if i == entries.len() || !keep(entries[i - 1], entries[i]) {
            if i > start {
                runs.push(&entries[start..i]);
            }
            start = i;
        }
    }
    runs
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl AsRef<[u32]> for Permutation {
    fn as_ref(&self) -> &[u32] {
        &self.0
    }
}

impl From<Permutation> for Word {
    fn from(p: Permutation) -> Word {
        Word(p.0)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_entries(f, &self.0)
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(parse_entries(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn reduction_and_indices() {
        assert_eq!(reduce(&[8, 5, 1, 2]), p("4312"));
        assert_eq!(reduce(&[10, 5, 1, 2]), p("4312"));
        assert_eq!(reduce(&[1, 2, 3]), p("123"));
        assert_eq!(p("4312").index_of(3).unwrap(), 2);
        assert_eq!(p("51763284").index_of(8).unwrap(), 7);
        assert!(p("4312").index_of(5).is_err());
    }

    #[test]
    fn runs_and_rev() {
        let x = p("51763284");
        let runs: Vec<Vec<u32>> = x.descending_runs().iter().map(|r| r.to_vec()).collect();
        assert_eq!(runs, vec![vec![5, 1], vec![7, 6, 3, 2], vec![8, 4]]);
        assert_eq!(x.rev(), p("15236748"));
        assert_eq!(x.descent_count(), 5);
        assert_eq!(p("4321").rev(), p("1234"));
        assert_eq!(p("1234").descending_runs().len(), 4);
        assert_eq!(p("3142").bounded_ascent_count(2), 1);
    }

    #[test]
    fn double_descents() {
        assert!(p("321").has_double_descent());
        assert!(!p("213").has_double_descent());
        assert!(!p("1324").has_double_descent());
    }

    #[test]
    fn parsing() {
        assert_eq!(p("5,1,7,6,3,2,8,4"), p("51763284"));
        assert_eq!(p(" 2 , 1 "), p("21"));
        assert!("1,1".parse::<Permutation>().is_err());
        assert!("1,3".parse::<Permutation>().is_err());
        assert!("1,,2".parse::<Word>().is_err());
        assert_eq!("10,5,1".parse::<Word>().unwrap().reduce(), p("321"));
        assert_eq!("7,1,10".parse::<Word>().unwrap().to_string(), "7,1,10");
    }

    #[test]
    fn weak_order_agrees_with_masks() {
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        for a in &all {
            for b in &all {
                let by_mask = a.inversion_mask() & !b.inversion_mask() == 0;
                assert_eq!(a.weak_le(b), by_mask);
            }
        }
    }
}
