use super::{BitSet, FiniteLattice, LatticeKey};
use crate::error::{Error, Result};

/// Classes of the equivalence generated by an adjacency relation, each
/// checked to be an interval of the lattice.
#[derive(Clone, Debug)]
pub struct Congruence {
    class_of: Vec<usize>,
    minimum: Vec<usize>,
    maximum: Vec<usize>,
}

impl Congruence {
    /// `adjacent(x)` lists elements congruent to `x`; the relation is
    /// symmetrized and closed transitively.
    pub fn new<K, F>(lattice: &FiniteLattice<K>, adjacent: F) -> Result<Self>
    where
        K: LatticeKey,
        F: Fn(&K) -> Vec<K>,
    {
        let n = lattice.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for i in 0..n {
            for other in adjacent(lattice.element(i)) {
                let j = lattice.require(&other)?;
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut class_id = vec![usize::MAX; n];
        let mut class_of = vec![0; n];
        let mut members: Vec<BitSet> = Vec::new();
        for i in 0..n {
            let root = find(&mut parent, i);
            if class_id[root] == usize::MAX {
                class_id[root] = members.len();
                members.push(BitSet::new(n));
            }
            class_of[i] = class_id[root];
            members[class_of[i]].insert(i);
        }
        let mut minimum = Vec::with_capacity(members.len());
        let mut maximum = Vec::with_capacity(members.len());
        for class in &members {
            // lowest index is minimal and highest is maximal in a linear extension
            let lo = class.lowest().unwrap();
            let hi = class.highest().unwrap();
            let broken = |kind, a: usize, b: usize| Error::NonIntervalClass {
                kind,
                element: lattice.element(lo).to_string(),
                first: lattice.element(a).to_string(),
                second: lattice.element(b).to_string(),
            };
            if let Some(other) = class.lowest_common_outside(class, &lattice.up[lo]) {
                return Err(broken("minimal", lo, other));
            }
            if let Some(other) = class.highest_common_outside(class, &lattice.down[hi]) {
                return Err(broken("maximal", hi, other));
            }
            let mut interval = lattice.up[lo].clone();
            interval.intersect_with(&lattice.down[hi]);
            if let Some(gap) = interval.lowest_common_outside(&interval, class) {
                return Err(broken("in the interval but not the class", lo, gap));
            }
            minimum.push(lo);
            maximum.push(hi);
        }
        Ok(Congruence { class_of, minimum, maximum })
    }

    pub fn class_count(&self) -> usize {
        self.minimum.len()
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    /// Minimum of the class of `i`.
    pub fn project(&self, i: usize) -> usize {
        self.minimum[self.class_of[i]]
    }

    /// Maximum of the class of `i`.
    pub fn project_up(&self, i: usize) -> usize {
        self.maximum[self.class_of[i]]
    }

    /// Class minima in increasing index order.
    pub fn minima(&self) -> Vec<usize> {
        let mut m = self.minimum.clone();
        m.sort_unstable();
        m
    }
}

/// Minimum of the congruence class of `x`.
pub fn congruence_project<K, F>(lattice: &FiniteLattice<K>, adjacent: F, x: &K) -> Result<K>
where
    K: LatticeKey,
    F: Fn(&K) -> Vec<K>,
{
    let i = lattice.require(x)?;
    let c = Congruence::new(lattice, adjacent)?;
    Ok(lattice.element(c.project(i)).clone())
}

#[cfg(test)]
mod tests {
    use super::super::BuildOptions;
    use super::*;

    fn square() -> FiniteLattice<&'static str> {
        FiniteLattice::build(
            vec!["0", "a", "b", "1"],
            vec![("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
            &BuildOptions::default(),
        )
        .unwrap()
    }

    #[test]
    fn identity_relation() {
        let l = square();
        assert_eq!(congruence_project(&l, |_| Vec::new(), &"1").unwrap(), "1");
    }

    #[test]
    fn collapsing_an_edge() {
        let l = square();
        let adj = |x: &&str| match *x {
            "b" => vec!["1"],
            _ => Vec::new(),
        };
        let c = Congruence::new(&l, adj).unwrap();
        assert_eq!(c.class_count(), 3);
        assert_eq!(l.element(c.project(l.index_of(&"1").unwrap())), &"b");
    }

    #[test]
    fn non_interval_rejected() {
        let l = square();
        let adj = |x: &&str| match *x {
            "a" => vec!["b"],
            _ => Vec::new(),
        };
        assert!(matches!(Congruence::new(&l, adj), Err(Error::NonIntervalClass { .. })));
        let adj = |x: &&str| match *x {
            "0" => vec!["1"],
            _ => Vec::new(),
        };
        assert!(matches!(Congruence::new(&l, adj), Err(Error::NonIntervalClass { .. })));
    }
}
