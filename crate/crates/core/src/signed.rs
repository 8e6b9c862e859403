//! The hyperoctahedral group B_n as centrally symmetric permutations of
//! 1..=2n, with the ascending-run and large-entry decompositions.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{parse_entries, Permutation};

pub const MAX_ENUMERATION_RANK: usize = 7;

/// A permutation `x` of 1..=2n with `x[i] + x[2n+1-i] = 2n+1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    word: Permutation,
}

impl SignedPermutation {
    pub fn validate(word: Permutation) -> Result<Self> {
        let m = word.len();
        if m % 2 == 1 {
            return Err(Error::OddLength(m));
        }
        let e = word.entries();
        let target = m as u32 + 1;
        for i in 0..m {
            if e[i] + e[m - 1 - i] != target {
                return Err(Error::SymmetryViolation { index: i + 1, left: e[i], right: e[m - 1 - i], target });
            }
        }
        Ok(SignedPermutation { word })
    }

    pub fn from_entries(entries: Vec<u32>) -> Result<Self> {
        Self::validate(Permutation::new(entries)?)
    }

    pub(crate) fn from_entries_unchecked(entries: Vec<u32>) -> Self {
        let s = SignedPermutation { word: Permutation::from_vec_unchecked(entries) };
        debug_assert!(Self::validate(s.word.clone()).is_ok());
        s
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation { word: Permutation::identity(2 * n) }
    }

    pub fn rank(&self) -> usize {
        self.word.len() / 2
    }

    pub fn word(&self) -> &Permutation {
        &self.word
    }

    pub fn entries(&self) -> &[u32] {
        self.word.entries()
    }

    pub fn into_word(self) -> Permutation {
        self.word
    }

    /// `2n + 1 - v`.
    pub fn mirror_value(&self, v: u32) -> u32 {
        self.word.len() as u32 + 1 - v
    }

    /// Reverses descending runs; symmetry is preserved.
    pub fn rev(&self) -> SignedPermutation {
        SignedPermutation { word: self.word.rev() }
    }

    /// Number of `i <= n` with `x[i] < x[i+1]`.
    pub fn upper_ascent_count(&self) -> usize {
        self.word.bounded_ascent_count(self.rank())
    }

    pub fn asc_decompose(&self) -> AscDecomposition {
        AscDecomposition::new(self)
    }

    pub fn half_decompose(&self) -> HalfDecomposition {
        HalfDecomposition::new(self)
    }
}

impl AsRef<[u32]> for SignedPermutation {
    fn as_ref(&self) -> &[u32] {
        self.word.entries()
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.word.fmt(f)
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::from_entries(parse_entries(s)?)
    }
}

/// All 2^n n! elements of B_n, sorted lexicographically.
pub fn enumerate_bn(n: usize) -> Result<Vec<SignedPermutation>> {
    if n > MAX_ENUMERATION_RANK {
        return Err(Error::Guard { what: "rank of B_n", value: n, limit: MAX_ENUMERATION_RANK });
    }
    let top = 2 * n as u32 + 1;
    let mut out = Vec::with_capacity((1usize << n) * (1..=n).product::<usize>());
    for base in Permutation::all(n) {
        for signs in 0u32..(1 << n) {
            let mut w = vec![0u32; 2 * n];
            for (i, &v) in base.entries().iter().enumerate() {
                let v = if signs >> i & 1 == 1 { top - v } else { v };
                w[i] = v;
                w[2 * n - 1 - i] = top - v;
            }
            out.push(SignedPermutation::from_entries_unchecked(w));
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Maximal ascending factors and the one straddling the centre.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AscDecomposition {
    runs: Vec<Vec<u32>>,
    mid: Vec<u32>,
}

impl AscDecomposition {
    fn new(x: &SignedPermutation) -> Self {
        let n = x.rank();
        let mut runs = Vec::new();
        let mut mid = Vec::new();
        let mut start = 0;
        for run in x.word.ascending_runs() {
            let end = start + run.len();
            // 0-based positions n-1 and n hold x_n and x_{n+1}
            if n > 0 && start < n && end > n {
                mid = run.to_vec();
            }
            runs.push(run.to_vec());
            start = end;
        }
        AscDecomposition { runs, mid }
    }

    pub fn runs(&self) -> &[Vec<u32>] {
        &self.runs
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.runs.iter().map(Vec::len).collect()
    }

    /// `asc(k)` for `k >= 1` counts from the left, `asc(-k)` from the right.
    pub fn asc(&self, k: isize) -> Option<&[u32]> {
        let len = self.runs.len() as isize;
        let idx = match k {
            k if k >= 1 => k - 1,
            k if k <= -1 => len + k,
            _ => return None,
        };
        (0..len).contains(&idx).then(|| self.runs[idx as usize].as_slice())
    }

    /// Empty when no ascending run contains both central positions.
    pub fn mid(&self) -> &[u32] {
        &self.mid
    }
}

/// A maximal factor of entries at least n+1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfBlock {
    /// 1-based position of the first entry.
    pub start: usize,
    pub entries: Vec<u32>,
}

impl HalfBlock {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of entries before the block.
    pub fn offset(&self) -> usize {
        self.start - 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfDecomposition {
    rank: usize,
    half: Vec<u32>,
    blocks: Vec<HalfBlock>,
}

impl HalfDecomposition {
    fn new(x: &SignedPermutation) -> Self {
        let n = x.rank() as u32;
        let mut blocks: Vec<HalfBlock> = Vec::new();
        let mut previous_big = false;
        for (i, &v) in x.entries().iter().enumerate() {
            let big = v > n;
            if big {
                if previous_big {
                    blocks.last_mut().unwrap().entries.push(v);
                } else {
                    blocks.push(HalfBlock { start: i + 1, entries: vec![v] });
                }
            }
            previous_big = big;
        }
        let half = blocks.iter().flat_map(|b| b.entries.iter().copied()).collect();
        HalfDecomposition { rank: x.rank(), half, blocks }
    }

    /// All entries at least n+1, in order.
    pub fn half(&self) -> &[u32] {
        &self.half
    }

    pub fn blocks(&self) -> &[HalfBlock] {
        &self.blocks
    }

    /// Block `k` reversed and complemented by 2n+1 (`k` is 1-based).
    pub fn complement(&self, k: usize) -> Option<Vec<u32>> {
        let top = 2 * self.rank as u32 + 1;
        let block = self.blocks.get(k.checked_sub(1)?)?;
        Some(block.entries.iter().rev().map(|&v| top - v).collect())
    }
}
