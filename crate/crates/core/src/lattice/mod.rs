//! Finite lattices given by a cover relation, with meets, joins, the
//! pop-stack operators and their generating polynomials.
//!
//! Elements are stored in a linear extension of the order, so the meet of
//! two elements is the highest-indexed member of the intersection of their
//! down-sets and the join is the lowest-indexed member of the intersection
//! of their up-sets.

mod bitset;
mod congruence;
mod poly;

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};
use std::fmt::Display;
use std::hash::Hash;

use rayon::prelude::*;
use serde_json::json;

pub use congruence::{congruence_project, Congruence};
pub use poly::QPolynomial;

use crate::error::{Error, Result};
use bitset::BitSet;

/// Largest lattice built without raising the limit; Weak(B_6) and larger
/// need an explicit override.
pub const DEFAULT_MAX_ELEMENTS: usize = 20_000;

/// Bounds shared by every lattice constructor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    /// Check that every pair has a unique meet and join.
    pub validate: bool,
    pub max_elements: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { validate: true, max_elements: DEFAULT_MAX_ELEMENTS }
    }
}

impl BuildOptions {
    pub fn unvalidated() -> Self {
        BuildOptions { validate: false, ..Self::default() }
    }

    pub(crate) fn check_size(&self, what: &'static str, size: usize) -> Result<()> {
        if size > self.max_elements {
            return Err(Error::Guard { what, value: size, limit: self.max_elements });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PopDirection {
    /// Images of the meet operator, weighted by upper covers.
    Down,
    /// Images of the join operator, weighted by lower covers.
    Up,
}

/// Requirements on element keys.
pub trait LatticeKey: Clone + Eq + Hash + Display + Send + Sync {}
impl<T: Clone + Eq + Hash + Display + Send + Sync> LatticeKey for T {}

#[derive(Clone, Debug)]
pub struct FiniteLattice<K> {
    elements: Vec<K>,
    index: HashMap<K, usize>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
    down: Vec<BitSet>,
    up: Vec<BitSet>,
}

impl<K: LatticeKey> FiniteLattice<K> {
    /// Builds from elements and `(lower, upper)` cover pairs.
    pub fn build(elements: Vec<K>, covers: Vec<(K, K)>, options: &BuildOptions) -> Result<Self> {
        options.check_size("number of lattice elements", elements.len())?;
        if elements.is_empty() {
            return Err(Error::Empty);
        }
        let mut index = HashMap::with_capacity(elements.len());
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.clone(), i).is_some() {
                return Err(Error::DuplicateElement(e.to_string()));
            }
        }
        let lookup = |k: &K| index.get(k).copied().ok_or_else(|| Error::UnknownElement(k.to_string()));
        let mut edges = Vec::with_capacity(covers.len());
        for (a, b) in &covers {
            edges.push((lookup(a)?, lookup(b)?));
        }
        edges.sort_unstable();
        edges.dedup();
        Self::from_index_edges(elements, edges, options)
    }

    /// Builds from an order predicate `le(a, b)`, taking the transitive
    /// reduction to get covers.
    pub fn from_order<F>(elements: Vec<K>, le: F, options: &BuildOptions) -> Result<Self>
    where
        F: Fn(&K, &K) -> bool + Sync,
    {
        let le_index = |i: usize, j: usize| le(&elements[i], &elements[j]);
        let edges = transitive_reduction(elements.len(), le_index, options)?;
        Self::from_index_edges(elements, edges, options)
    }

    /// Like [`FiniteLattice::from_order`] with the predicate on positions
    /// in `elements`.
    pub fn from_order_indexed<F>(elements: Vec<K>, le: F, options: &BuildOptions) -> Result<Self>
    where
        F: Fn(usize, usize) -> bool + Sync,
    {
        let edges = transitive_reduction(elements.len(), le, options)?;
        Self::from_index_edges(elements, edges, options)
    }

    fn from_index_edges(elements: Vec<K>, edges: Vec<(usize, usize)>, options: &BuildOptions) -> Result<Self> {
        let n = elements.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut ups = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        for &(a, b) in &edges {
            if a == b {
                return Err(Error::Cycle);
            }
            ups[a].push(b);
            indegree[b] += 1;
        }
        // Kahn's algorithm, smallest original index first for determinism
        let mut heap: BinaryHeap<Reverse<usize>> = (0..n).filter(|&i| indegree[i] == 0).map(Reverse).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(Reverse(i)) = heap.pop() {
            order.push(i);
            for &j in &ups[i] {
                indegree[j] -= 1;
                if indegree[j] == 0 {
                    heap.push(Reverse(j));
                }
            }
        }
        if order.len() != n {
            return Err(Error::Cycle);
        }
        let mut rank = vec![0; n];
        for (r, &i) in order.iter().enumerate() {
            rank[i] = r;
        }
        let mut slots: Vec<Option<K>> = elements.into_iter().map(Some).collect();
        let elements: Vec<K> = order.iter().map(|&i| slots[i].take().unwrap()).collect();
        let mut upper = vec![Vec::new(); n];
        let mut lower = vec![Vec::new(); n];
        for &(a, b) in &edges {
            upper[rank[a]].push(rank[b]);
            lower[rank[b]].push(rank[a]);
        }
        for v in upper.iter_mut().chain(lower.iter_mut()) {
            v.sort_unstable();
        }
        let mut down = vec![BitSet::new(n); n];
        for i in 0..n {
            let mut s = BitSet::new(n);
            s.insert(i);
            for &l in &lower[i] {
                s.union_with(&down[l]);
            }
            down[i] = s;
        }
        let mut up = vec![BitSet::new(n); n];
        for i in (0..n).rev() {
            let mut s = BitSet::new(n);
            s.insert(i);
            for &u in &upper[i] {
                s.union_with(&up[u]);
            }
            up[i] = s;
        }
        let index = elements.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        let lattice = FiniteLattice { elements, index, upper, lower, down, up };
        lattice.check_bounds()?;
        if options.validate {
            lattice.check_covers()?;
            lattice.check_meets_and_joins()?;
        }
        Ok(lattice)
    }

    fn check_bounds(&self) -> Result<()> {
        let n = self.len();
        let minimal: Vec<usize> = (0..n).filter(|&i| self.lower[i].is_empty()).collect();
        if minimal.len() > 1 {
            return Err(self.not_a_lattice("lower", minimal[0], minimal[1], minimal[0], minimal[1]));
        }
        let maximal: Vec<usize> = (0..n).filter(|&i| self.upper[i].is_empty()).collect();
        if maximal.len() > 1 {
            return Err(self.not_a_lattice("upper", maximal[0], maximal[1], maximal[0], maximal[1]));
        }
        Ok(())
    }

    fn not_a_lattice(&self, kind: &'static str, a: usize, b: usize, first: usize, second: usize) -> Error {
        Error::NotALattice {
            kind,
            left: self.elements[a].to_string(),
            right: self.elements[b].to_string(),
            first: self.elements[first].to_string(),
            second: self.elements[second].to_string(),
        }
    }

    fn check_covers(&self) -> Result<()> {
        for b in 0..self.len() {
            for &a in &self.lower[b] {
                if self.lower[b].iter().any(|&c| c != a && self.down[c].contains(a)) {
                    return Err(Error::RedundantCover {
                        lower: self.elements[a].to_string(),
                        upper: self.elements[b].to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    fn check_meets_and_joins(&self) -> Result<()> {
        let failure = (0..self.len()).into_par_iter().find_map_first(|i| {
            for j in i + 1..self.len() {
                // both sets are nonempty because bottom and top are unique
                let m = self.down[i].highest_common(&self.down[j]).unwrap();
                if let Some(e) = self.down[i].highest_common_outside(&self.down[j], &self.down[m]) {
                    return Some(self.not_a_lattice("lower", i, j, m, e));
                }
                let m = self.up[i].lowest_common(&self.up[j]).unwrap();
                if let Some(e) = self.up[i].lowest_common_outside(&self.up[j], &self.up[m]) {
                    return Some(self.not_a_lattice("upper", i, j, m, e));
                }
            }
            None
        });
        failure.map_or(Ok(()), Err)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements in a linear extension of the order.
    pub fn elements(&self) -> &[K] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &K {
        &self.elements[i]
    }

    pub fn index_of(&self, key: &K) -> Option<usize> {
        self.index.get(key).copied()
    }

    pub fn require(&self, key: &K) -> Result<usize> {
        self.index_of(key).ok_or_else(|| Error::UnknownElement(key.to_string()))
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.len() - 1
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower[i]
    }

    pub fn cover_count(&self) -> usize {
        self.upper.iter().map(Vec::len).sum()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.down[j].contains(i)
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.down[i].highest_common(&self.down[j]).expect("lattice has a bottom")
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.up[i].lowest_common(&self.up[j]).expect("lattice has a top")
    }

    /// Meet of `i` and every element it covers.
    pub fn pop_down(&self, i: usize) -> usize {
        let mut acc = self.down[i].clone();
        for &l in &self.lower[i] {
            acc.intersect_with(&self.down[l]);
        }
        acc.highest().expect("lattice has a bottom")
    }

    /// Join of `i` and every element covering it.
    pub fn pop_up(&self, i: usize) -> usize {
        let mut acc = self.up[i].clone();
        for &u in &self.upper[i] {
            acc.intersect_with(&self.up[u]);
        }
        acc.lowest().expect("lattice has a top")
    }

    pub fn pop(&self, direction: PopDirection, i: usize) -> usize {
        match direction {
            PopDirection::Down => self.pop_down(i),
            PopDirection::Up => self.pop_up(i),
        }
    }

    /// Sorted distinct images of the chosen operator.
    pub fn pop_image(&self, direction: PopDirection) -> Vec<usize> {
        let mut hit = vec![false; self.len()];
        let images: Vec<usize> = (0..self.len()).into_par_iter().map(|i| self.pop(direction, i)).collect();
        for i in images {
            hit[i] = true;
        }
        (0..self.len()).filter(|&i| hit[i]).collect()
    }

    /// Sum over the image of `q^(#upper covers)` (down) or
    /// `q^(#lower covers)` (up).
    pub fn pop_polynomial(&self, direction: PopDirection) -> QPolynomial {
        let mut p = QPolynomial::zero();
        for i in self.pop_image(direction) {
            let d = match direction {
                PopDirection::Down => self.upper[i].len(),
                PopDirection::Up => self.lower[i].len(),
            };
            p.add_term(d as u32, 1);
        }
        p
    }

    /// Element list and cover pairs as JSON strings.
    pub fn to_json(&self) -> serde_json::Value {
        let names: Vec<String> = self.elements.iter().map(ToString::to_string).collect();
        let covers: Vec<[&str; 2]> = (0..self.len())
            .flat_map(|i| self.upper[i].iter().map(move |&j| (i, j)))
            .map(|(i, j)| [names[i].as_str(), names[j].as_str()])
            .collect();
        json!({ "elements": names, "covers": covers })
    }
}

fn transitive_reduction<F>(n: usize, le: F, options: &BuildOptions) -> Result<Vec<(usize, usize)>>
where
    F: Fn(usize, usize) -> bool + Sync,
{
    options.check_size("number of lattice elements", n)?;
    let above: Vec<BitSet> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut s = BitSet::new(n);
            for j in 0..n {
                if le(i, j) {
                    s.insert(j);
                }
            }
            s
        })
        .collect();
    let mut below = vec![BitSet::new(n); n];
    for (i, set) in above.iter().enumerate() {
        for j in set.iter() {
            below[j].insert(i);
        }
    }
    let edges = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let (above, below) = (&above, &below);
            above[i]
                .iter()
                .filter(move |&j| {
                    if j == i {
                        return false;
                    }
                    let mut between = above[i].clone();
                    between.intersect_with(&below[j]);
                    between.count() == 2
                })
                .map(move |j| (i, j))
        })
        .collect();
    Ok(edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lattice(
        elements: &[&'static str],
        covers: &[(&'static str, &'static str)],
    ) -> Result<FiniteLattice<&'static str>> {
        FiniteLattice::build(elements.to_vec(), covers.to_vec(), &BuildOptions::default())
    }

    #[test]
    fn two_chain() {
        let l = lattice(&["a", "b"], &[("a", "b")]).unwrap();
        let (a, b) = (l.index_of(&"a").unwrap(), l.index_of(&"b").unwrap());
        assert_eq!((l.meet(a, b), l.join(a, b)), (a, b));
        assert_eq!(l.pop_down(b), a);
        assert_eq!(l.pop_up(a), b);
        assert_eq!(l.pop_polynomial(PopDirection::Down), QPolynomial::monomial(1, 1));
        assert_eq!(l.pop_polynomial(PopDirection::Up), QPolynomial::monomial(1, 1));
    }

    #[test]
    fn rejects_non_lattices() {
        let diamond = lattice(&["0", "a", "b"], &[("0", "a"), ("0", "b")]);
        assert!(matches!(diamond, Err(Error::NotALattice { kind: "upper", .. })));
        let bowtie = lattice(
            &["0", "a", "b", "c", "d", "1"],
            &[("0", "a"), ("0", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "1"), ("d", "1")],
        );
        assert!(matches!(bowtie, Err(Error::NotALattice { .. })));
        let cycle = lattice(&["a", "b"], &[("a", "b"), ("b", "a")]);
        assert_eq!(cycle.unwrap_err(), Error::Cycle);
        let redundant = lattice(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]);
        assert!(matches!(redundant, Err(Error::RedundantCover { .. })));
        assert!(matches!(lattice(&["a"], &[("a", "z")]), Err(Error::UnknownElement(_))));
    }

    #[test]
    fn pentagon_from_order() {
        // 0 < a < b < 1, 0 < c < 1
        let rank = |x: &&str| match *x {
            "0" => 0,
            "a" => 1,
            "b" => 2,
            "c" => 5,
            _ => 9,
        };
        let le = |x: &&str, y: &&str| x == y || *x == "0" || *y == "1" || (rank(x) < rank(y) && *x != "c" && *y != "c");
        let l = FiniteLattice::from_order(vec!["1", "c", "b", "a", "0"], le, &BuildOptions::default()).unwrap();
        assert_eq!(l.cover_count(), 5);
        assert_eq!(l.element(l.bottom()), &"0");
        assert_eq!(l.element(l.top()), &"1");
        let (b, c) = (l.index_of(&"b").unwrap(), l.index_of(&"c").unwrap());
        assert_eq!(l.element(l.meet(b, c)), &"0");
        assert_eq!(l.pop_polynomial(PopDirection::Down), l.pop_polynomial(PopDirection::Up));
        let exported = l.to_json();
        assert_eq!(exported["covers"].as_array().unwrap().len(), 5);
    }

    #[test]
    fn size_guard() {
        let options = BuildOptions { max_elements: 1, ..BuildOptions::default() };
        let err = FiniteLattice::build(vec!["a", "b"], vec![("a", "b")], &options).unwrap_err();
        assert!(matches!(err, Error::Guard { .. }));
    }
}
