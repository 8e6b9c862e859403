//! Classical, vincular and starred pattern containment.

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Where a starred pattern entry must lie relative to `n = len(host) / 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StarBound {
    /// The entry is at least `n + 1`.
    Upper,
    /// The entry is at most `n`.
    Lower,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StarConstraint {
    /// 1-based position in the pattern.
    pub position: usize,
    pub bound: StarBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PatternSpec {
    pattern: Permutation,
    adjacent: Vec<bool>,
    stars: Vec<StarConstraint>,
}

impl PatternSpec {
    /// `adjacent[i]` requires pattern positions `i+1` and `i+2` to be
    /// consecutive in the host.
    pub fn new(pattern: Permutation, adjacent: Vec<bool>, stars: Vec<StarConstraint>) -> Result<Self> {
        if adjacent.len() + 1 != pattern.len().max(1) {
            return Err(Error::Parameter(format!(
                "adjacency mask has length {}, expected {}",
                adjacent.len(),
                pattern.len().saturating_sub(1)
            )));
        }
        if let Some(s) = stars.iter().find(|s| s.position == 0 || s.position > pattern.len()) {
            return Err(Error::Parameter(format!("star position {} out of range", s.position)));
        }
        Ok(PatternSpec { pattern, adjacent, stars })
    }

    pub fn classical(pattern: Permutation) -> Self {
        let adjacent = vec![false; pattern.len().saturating_sub(1)];
        PatternSpec { pattern, adjacent, stars: Vec::new() }
    }

    pub fn vincular(pattern: Permutation, adjacent: Vec<bool>) -> Result<Self> {
        PatternSpec::new(pattern, adjacent, Vec::new())
    }

    fn starred(pattern: &str, stars: &[(usize, StarBound)]) -> Self {
        let mut spec = PatternSpec::classical(pattern.parse().expect("constant pattern"));
        spec.stars = stars.iter().map(|&(position, bound)| StarConstraint { position, bound }).collect();
        spec
    }

    /// 312 whose "2" is at least n+1.
    pub fn star_312() -> Self {
        Self::starred("312", &[(3, StarBound::Upper)])
    }

    /// A 312* occurrence whose "1" is also at least n+1.
    pub fn big_star_312() -> Self {
        Self::starred("312", &[(2, StarBound::Upper), (3, StarBound::Upper)])
    }

    /// A 312* occurrence whose "1" is at most n.
    pub fn small_star_312() -> Self {
        Self::starred("312", &[(2, StarBound::Lower), (3, StarBound::Upper)])
    }

    /// 213 whose first entry is at most n.
    pub fn star_213() -> Self {
        Self::starred("213", &[(1, StarBound::Lower)])
    }

    /// 231 whose last entry is at most n.
    pub fn star_231() -> Self {
        Self::starred("231", &[(3, StarBound::Lower)])
    }

    pub fn pattern(&self) -> &Permutation {
        &self.pattern
    }

    pub fn adjacency(&self) -> &[bool] {
        &self.adjacent
    }

    pub fn stars(&self) -> &[StarConstraint] {
        &self.stars
    }

    /// 1-based host positions of the leftmost occurrence, if any.
    pub fn find_in(&self, host: &[u32]) -> Result<Option<Vec<usize>>> {
        let half = if self.stars.is_empty() {
            0
        } else if host.len() % 2 == 1 {
            return Err(Error::OddHost(host.len()));
        } else {
            (host.len() / 2) as u32
        };
        let k = self.pattern.len();
        if k == 0 {
            return Ok(Some(Vec::new()));
        }
        let mut chosen = Vec::with_capacity(k);
        if self.search(host, half, 0, &mut chosen) {
            Ok(Some(chosen.iter().map(|&i| i + 1).collect()))
        } else {
            Ok(None)
        }
    }

    pub fn is_contained_in(&self, host: &[u32]) -> Result<bool> {
        Ok(self.find_in(host)?.is_some())
    }

    fn entry_allowed(&self, slot: usize, value: u32, half: u32) -> bool {
        self.stars.iter().filter(|s| s.position == slot + 1).all(|s| match s.bound {
            StarBound::Upper => value > half,
            StarBound::Lower => value <= half,
        })
    }

    fn search(&self, host: &[u32], half: u32, slot: usize, chosen: &mut Vec<usize>) -> bool {
        let pat = self.pattern.entries();
        if slot == pat.len() {
            return true;
        }
        let (lo, hi) = match chosen.last() {
            None => (0, host.len()),
            Some(&prev) if self.adjacent[slot - 1] => (prev + 1, (prev + 2).min(host.len())),
            Some(&prev) => (prev + 1, host.len()),
        };
        // leave room for the remaining slots
        let hi = hi.min((host.len() + slot + 1).saturating_sub(pat.len()));
        for pos in lo..hi {
            let v = host[pos];
            if !self.entry_allowed(slot, v, half) {
                continue;
            }
            let consistent = chosen.iter().enumerate().all(|(s, &p)| (host[p] < v) == (pat[s] < pat[slot]));
            if consistent {
                chosen.push(pos);
                if self.search(host, half, slot + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
}

pub fn contains_pattern(host: &[u32], spec: &PatternSpec) -> Result<bool> {
    spec.is_contained_in(host)
}

pub fn avoids_312(p: &[u32]) -> bool {
    // a 312 occurrence exists iff some entry has a smaller entry to its
    // right followed later by an entry strictly between them
    let m = p.len();
    for i in 0..m {
        let mut low = u32::MAX;
        for &v in &p[i + 1..] {
            if v < p[i] {
                if low < v {
                    return false;
                }
                low = low.min(v);
            }
        }
    }
    true
}

/// True iff the even-length word contains no 312* occurrence.
pub fn avoids_312_star(x: &[u32]) -> bool {
    !PatternSpec::star_312().is_contained_in(x).expect("signed permutations have even length")
}
