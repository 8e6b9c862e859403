//! Tamari lattices of types A and B: the 312-avoiding (resp. 312*-avoiding)
//! elements of the weak order, the congruence moves whose classes they
//! represent, Pop via projection of run reversal, image tests and explicit
//! preimages.

use crate::binomial::catalan;
use crate::error::{Error, Result};
use crate::lattice::{BuildOptions, Congruence, FiniteLattice};
use crate::pattern::{avoids_312, avoids_312_star};
use crate::perm::{reduce, Permutation};
use crate::signed::{enumerate_bn, SignedPermutation};

/// The 312-avoiding permutations of 1..=n+1.
/// Deleting the largest value keeps a 312-avoider 312-avoiding, so the set
/// grows by inserting `k` everywhere into the avoiders of `1..k`.
pub fn tam_a_elements(n: usize) -> Vec<Permutation> {
    let mut words: Vec<Vec<u32>> = vec![vec![]];
    for k in 1..=n as u32 + 1 {
        words = words
            .iter()
            .flat_map(|w| {
                (0..=w.len()).map(move |i| {
                    let mut v = w.clone();
                    v.insert(i, k);
                    v
                })
            })
            .filter(|v| avoids_312(v))
            .collect();
    }
    words.sort_unstable();
    words.into_iter().map(Permutation::from_vec_unchecked).collect()
}

/// Tam(A_n): weak order restricted to 312-avoiding permutations of 1..=n+1.
pub fn tam_a_lattice(n: usize, options: &BuildOptions) -> Result<FiniteLattice<Permutation>> {
    let size = usize::try_from(catalan(n as u64 + 1)).unwrap_or(usize::MAX);
    options.check_size("number of lattice elements", size)?;
    let elements = tam_a_elements(n);
    let masks: Vec<u128> = elements.iter().map(Permutation::inversion_mask).collect();
    FiniteLattice::from_order_indexed(elements, |i, j| masks[i] & !masks[j] == 0, options)
}

/// The 312*-avoiding elements of B_n.
pub fn tam_b_elements(n: usize) -> Result<Vec<SignedPermutation>> {
    Ok(enumerate_bn(n)?.into_iter().filter(|x| avoids_312_star(x.entries())).collect())
}

/// Tam(B_n): weak order restricted to 312*-avoiding elements of B_n.
pub fn tam_b_lattice(n: usize, options: &BuildOptions) -> Result<FiniteLattice<SignedPermutation>> {
    let elements = tam_b_elements(n)?;
    options.check_size("number of lattice elements", elements.len())?;
    let masks: Vec<u128> = elements.iter().map(|x| x.word().inversion_mask()).collect();
    FiniteLattice::from_order_indexed(elements, |i, j| masks[i] & !masks[j] == 0, options)
}

/// One downward rewrite `..ca..b.. -> ..ac..b..` with `a < b < c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MoveA {
    /// 1-based position of `c`.
    pub position: usize,
    pub c: u32,
    pub a: u32,
    pub witness: u32,
}

impl MoveA {
    pub fn apply(&self, p: &Permutation) -> Permutation {
        let mut w = p.entries().to_vec();
        w.swap(self.position - 1, self.position);
        Permutation::from_vec_unchecked(w)
    }
}

/// All moves applicable to `p`, left to right.
pub fn tam_a_moves(p: &Permutation) -> Vec<MoveA> {
    let e = p.entries();
    let mut out = Vec::new();
    for i in 0..e.len().saturating_sub(1) {
        let (c, a) = (e[i], e[i + 1]);
        if c < a {
            continue;
        }
        if let Some(&b) = e[i + 2..].iter().find(|&&b| a < b && b < c) {
            out.push(MoveA { position: i + 1, c, a, witness: b });
        }
    }
    out
}

/// One downward rewrite in B_n: the adjacent descent `c a` becomes `a c`
/// and the mirrored pair is swapped too, unless `a + c = 2n + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MoveB {
    /// 1-based position of `c`.
    pub position: usize,
    pub c: u32,
    pub a: u32,
    /// 1-based position of the mirrored `2n+1-a`, or `None` for the
    /// central swap.
    pub mirror_position: Option<usize>,
    pub witness: u32,
}

impl MoveB {
    pub fn apply(&self, x: &SignedPermutation) -> SignedPermutation {
        let mut w = x.entries().to_vec();
        w.swap(self.position - 1, self.position);
        if let Some(m) = self.mirror_position {
            w.swap(m - 1, m);
        }
        SignedPermutation::from_entries_unchecked(w)
    }

    pub fn is_central(&self) -> bool {
        self.mirror_position.is_none()
    }
}

/// All moves applicable to `x`. A descent `c a` at positions `(i, i+1)`
/// moves when some `b` with `a < b < c` is either at least n+1 and after
/// `a`, or at most n and before `c`. Each non-central move shows up twice,
/// once from each side of the centre.
pub fn tam_b_moves(x: &SignedPermutation) -> Vec<MoveB> {
    let n = x.rank();
    let e = x.entries();
    let pos = x.word().positions();
    let mut out = Vec::new();
    for i in 0..e.len().saturating_sub(1) {
        let (c, a) = (e[i], e[i + 1]);
        if c < a {
            continue;
        }
        let witness = (a + 1..c).find(|&b| {
            let p = pos[b as usize];
            if b as usize > n {
                p > i + 1
            } else {
                p < i
            }
        });
        if let Some(b) = witness {
            let mirror = 2 * n - 2 - i;
            out.push(MoveB { position: i + 1, c, a, mirror_position: (mirror != i).then_some(mirror + 1), witness: b });
        }
    }
    out
}

/// Minimum of the Tam(A) congruence class, by applying the leftmost move
/// until none applies.
pub fn project_tam_a(p: &Permutation) -> Permutation {
    let mut current = p.clone();
    while let Some(m) = tam_a_moves(&current).into_iter().next() {
        current = m.apply(&current);
    }
    current
}

/// Minimum of the Tam(B) congruence class, by leftmost rewriting.
pub fn project_tam_b(x: &SignedPermutation) -> SignedPermutation {
    let mut current = x.clone();
    while let Some(m) = tam_b_moves(&current).into_iter().next() {
        current = m.apply(&current);
    }
    current
}

/// Pop on Tam(A_n): project the run reversal.
pub fn pop_tam_a(p: &Permutation) -> Result<Permutation> {
    if !avoids_312(p.entries()) {
        return Err(Error::Precondition(format!("{p} contains 312")));
    }
    Ok(project_tam_a(&p.rev()))
}

/// Pop on Tam(B_n): project the run reversal.
pub fn pop_tam_b(x: &SignedPermutation) -> Result<SignedPermutation> {
    if !avoids_312_star(x.entries()) {
        return Err(Error::Precondition(format!("{x} contains 312*")));
    }
    Ok(project_tam_b(&x.rev()))
}

/// The Tam(A) congruence on a weak order lattice of permutations.
pub fn tam_a_congruence(weak: &FiniteLattice<Permutation>) -> Result<Congruence> {
    Congruence::new(weak, |p| tam_a_moves(p).iter().map(|m| m.apply(p)).collect())
}

/// The Tam(B) congruence on Weak(B_n).
pub fn tam_b_congruence(weak: &FiniteLattice<SignedPermutation>) -> Result<Congruence> {
    Congruence::new(weak, |x| tam_b_moves(x).iter().map(|m| m.apply(x)).collect())
}

/// Number of elements covering `z` in Tam(B_n): `n - ceil(des(z) / 2)`.
pub fn tam_b_upper_cover_count(z: &SignedPermutation) -> usize {
    z.rank() - z.word().descent_count().div_ceil(2)
}

/// Membership in the Pop image of Tam(A): 312-avoiding, ending with the
/// maximum, and without three consecutive decreasing entries.
pub fn hong_image_predicate(p: &Permutation) -> bool {
    let e = p.entries();
    avoids_312(e) && e.last().map_or(true, |&v| v as usize == e.len()) && !p.has_double_descent()
}

/// Membership in the Pop image of Tam(B_n) for a 312*-avoiding `x`:
/// `2n` sits in the right half and every maximal factor of entries at
/// least n+1 reduces to a Tam(A) image element.
pub fn tam_b_image_predicate(x: &SignedPermutation) -> bool {
    let n = x.rank();
    let top = 2 * n as u32;
    n == 0
        || x.word().index_of(top).unwrap() > n
            && x.half_decompose().blocks().iter().all(|b| hong_image_predicate(&reduce(&b.entries)))
}

/// Variant that tests the blocks of `Pop(x)` rather than of `x`. It
/// accepts elements outside the image (2143 for n = 2) and is kept only
/// to document that difference.
pub fn tam_b_image_predicate_as_printed(x: &SignedPermutation) -> Result<bool> {
    let popped = pop_tam_b(x)?;
    let n = x.rank();
    Ok(n == 0
        || x.word().index_of(2 * n as u32).unwrap() > n
            && popped.half_decompose().blocks().iter().all(|b| hong_image_predicate(&reduce(&b.entries))))
}

fn end1(x: &[u32]) -> Vec<u32> {
    if x.is_empty() {
        return Vec::new();
    }
    let k = x.iter().position(|&v| v == 1).unwrap() + 1;
    let left = end1(reduce(&x[..k - 1]).entries());
    let right = end1(reduce(&x[k..]).entries());
    let mut y: Vec<u32> = left.iter().map(|v| v + 1).collect();
    y.extend(right.iter().map(|&v| v + k as u32));
    y.push(1);
    y
}

/// A Tam(A) preimage of `x` under Pop whose last entry is 1: split at the
/// position `k` of 1, recurse on both reduced sides `z`, `w`, and return
/// `(z + 1) . (w + k) . 1`.
pub fn preimage_end1(x: &Permutation) -> Result<Permutation> {
    if !hong_image_predicate(x) {
        return Err(Error::Precondition(format!("{x} is not a Pop image in Tam(A)")));
    }
    let y = Permutation::from_vec_unchecked(end1(x.entries()));
    assert_eq!(&pop_tam_a(&y)?, x, "constructed preimage does not map back");
    Ok(y)
}

/// A Tam(B_n) preimage of `x` under Pop. Each maximal factor `h_k` of
/// large entries of `x` is rearranged by [`preimage_end1`] on its own value
/// set, giving `y_k`; if `x` starts with a large entry an empty factor is
/// appended. With `L` factors the result is
/// `y_1 . c(y_L) . y_2 . c(y_{L-1}) ... y_L . c(y_1)` where `c` reverses and
/// complements by `2n + 1`.
pub fn preimage_tam_b(x: &SignedPermutation) -> Result<SignedPermutation> {
    if !avoids_312_star(x.entries()) || !tam_b_image_predicate(x) {
        return Err(Error::Precondition(format!("{x} is not a Pop image in Tam(B)")));
    }
    let n = x.rank();
    let top = 2 * n as u32 + 1;
    let mut parts: Vec<Vec<u32>> = x
        .half_decompose()
        .blocks()
        .iter()
        .map(|block| {
            let mut values = block.entries.clone();
            values.sort_unstable();
            end1(reduce(&block.entries).entries()).iter().map(|&r| values[r as usize - 1]).collect()
        })
        .collect();
    if x.entries().first().is_some_and(|&v| v as usize > n) {
        parts.push(Vec::new());
    }
    let count = parts.len();
    let mut y = Vec::with_capacity(2 * n);
    for k in 0..count {
        y.extend(&parts[k]);
        y.extend(parts[count - 1 - k].iter().rev().map(|&v| top - v));
    }
    let y = SignedPermutation::from_entries(y)?;
    assert_eq!(&pop_tam_b(&y)?, x, "constructed preimage does not map back");
    Ok(y)
}

/// Lifts a Tam(A) move `x -> y` to a chain of Tam(B) moves starting at `z`,
/// where the large entries of `z` reduce to `x`: the entry playing `c` is
/// moved right past small entries until it meets the entry playing `a`,
/// then the two are swapped. Every step is checked to be a legal move.
pub fn adjacency_chain(x: &Permutation, y: &Permutation, z: &SignedPermutation) -> Result<Vec<SignedPermutation>> {
    let step = tam_a_moves(x)
        .into_iter()
        .find(|m| &m.apply(x) == y)
        .ok_or_else(|| Error::Precondition(format!("{y} is not one move below {x}")))?;
    let half = z.half_decompose().half().to_vec();
    if reduce(&half) != *x {
        return Err(Error::Precondition(format!("the large entries of {z} do not reduce to {x}")));
    }
    let mut values = half;
    values.sort_unstable();
    let (big_c, big_a) = (values[step.c as usize - 1], values[step.a as usize - 1]);
    let mut chain = vec![z.clone()];
    loop {
        let v = chain.last().unwrap();
        let p = v.word().index_of(big_c).unwrap();
        let next = v.entries()[p];
        let legal = tam_b_moves(v)
            .into_iter()
            .find(|m| m.position == p)
            .ok_or_else(|| Error::Precondition(format!("no legal move at position {p} of {v}")))?;
        let w = legal.apply(v);
        chain.push(w);
        if next == big_a {
            return Ok(chain);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn avoiders_by_insertion_match_filtering() {
        for n in 0..=6 {
            let filtered: Vec<_> = Permutation::all(n + 1).into_iter().filter(|p| avoids_312(p.entries())).collect();
            assert_eq!(tam_a_elements(n), filtered);
        }
    }

    fn s(text: &str) -> SignedPermutation {
        text.parse().unwrap()
    }

    #[test]
    fn projections() {
        assert_eq!(project_tam_a(&p("3142")), p("1342"));
        assert_eq!(project_tam_a(&p("312")), p("132"));
        assert_eq!(project_tam_a(&p("1342")), p("1342"));
        assert_eq!(project_tam_b(&s("2413")), s("2143"));
        assert_eq!(project_tam_b(&s("3142")), s("3142"));
        // the class minimum of 37154826
        assert_eq!(project_tam_b(&s("37154826")), s("31254786"));
    }

    #[test]
    fn pop_examples() {
        assert_eq!(pop_tam_a(&p("45327861")).unwrap(), p("24351768"));
        let y = s("7,1,10,11,9,8,5,4,2,3,12,6");
        assert_eq!(pop_tam_b(&y).unwrap(), s("1,7,2,4,3,5,8,10,9,11,6,12"));
        assert!(pop_tam_a(&p("312")).is_err());
        assert_eq!(pop_tam_b(&s("1234")).unwrap(), s("1234"));
    }

    #[test]
    fn image_predicates() {
        assert!(hong_image_predicate(&p("24351768")));
        assert!(!hong_image_predicate(&p("21")));
        assert!(hong_image_predicate(&p("1234")));
        assert!(!tam_b_image_predicate(&s("2143")));
        assert!(tam_b_image_predicate_as_printed(&s("2143")).unwrap());
        assert!(!tam_b_image_predicate(&s("3412")));
        assert!(tam_b_image_predicate(&s("1234")));
        assert!(tam_b_image_predicate(&s("1324")));
        assert!(tam_b_image_predicate(&s("3142")));
    }

    #[test]
    fn preimages() {
        assert_eq!(preimage_end1(&p("24351768")).unwrap(), p("45327861"));
        assert_eq!(preimage_end1(&p("12")).unwrap(), p("21"));
        assert_eq!(preimage_end1(&p("1")).unwrap(), p("1"));
        assert!(preimage_end1(&p("21")).is_err());
        let x = s("1,7,2,4,3,5,8,10,9,11,6,12");
        assert_eq!(preimage_tam_b(&x).unwrap(), s("7,1,10,11,9,8,5,4,2,3,12,6"));
        assert_eq!(preimage_tam_b(&s("1234")).unwrap(), s("4321"));
        assert_eq!(preimage_tam_b(&s("1324")).unwrap(), s("3142"));
        assert_eq!(preimage_tam_b(&s("3142")).unwrap(), s("3412"));
        assert!(preimage_tam_b(&s("2143")).is_err());
    }

    #[test]
    fn lifted_chain() {
        let chain = adjacency_chain(&p("3142"), &p("1342"), &s("37145826")).unwrap();
        let expected: Vec<_> =
            ["37145826", "31745286", "31472586", "31427586", "31245786"].iter().map(|t| s(t)).collect();
        assert_eq!(chain, expected);
        let short = adjacency_chain(&p("312"), &p("132"), &s("645231")).unwrap();
        assert_eq!(short.len(), 2);
    }

    #[test]
    fn hexagon() {
        let l = tam_b_lattice(2, &BuildOptions::default()).unwrap();
        assert_eq!((l.len(), l.cover_count()), (6, 6));
        let pentagon = tam_a_lattice(2, &BuildOptions::default()).unwrap();
        assert_eq!((pentagon.len(), pentagon.cover_count()), (5, 5));
    }
}
