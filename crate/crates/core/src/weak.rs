//! Weak order on the symmetric group and on B_n.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::{BuildOptions, FiniteLattice};
use crate::perm::Permutation;
use crate::signed::{enumerate_bn, SignedPermutation};

/// Largest rank accepted by [`census_coefficient`] unless extended.
pub const CENSUS_MAX_RANK: usize = 4;

/// Weak order on the permutations of 1..=n.
pub fn weak_a_lattice(n: usize, options: &BuildOptions) -> Result<FiniteLattice<Permutation>> {
    let size = (1..=n).product::<usize>();
    options.check_size("number of permutations", size)?;
    let elements = Permutation::all(n);
    let mut covers = Vec::new();
    for p in &elements {
        let e = p.entries();
        for i in 0..e.len().saturating_sub(1) {
            if e[i] < e[i + 1] {
                let mut up = e.to_vec();
                up.swap(i, i + 1);
                covers.push((p.clone(), Permutation::from_vec_unchecked(up)));
            }
        }
    }
    FiniteLattice::build(elements, covers, options)
}

/// Upper covers of `x` in the weak order on B_n: swap an ascent at
/// positions (i, i+1) together with its mirror, or the central ascent alone.
pub fn weak_b_upper_covers(x: &SignedPermutation) -> Vec<SignedPermutation> {
    let n = x.rank();
    let e = x.entries();
    let mut out = Vec::new();
    for i in 0..n {
        if e[i] >= e[i + 1] {
            continue;
        }
        let mut w = e.to_vec();
        w.swap(i, i + 1);
        if i + 1 != n {
            w.swap(2 * n - 2 - i, 2 * n - 1 - i);
        }
        out.push(SignedPermutation::from_entries_unchecked(w));
    }
    out
}

/// Weak order on B_n, built from the signed generators.
pub fn weak_b_lattice(n: usize, options: &BuildOptions) -> Result<FiniteLattice<SignedPermutation>> {
    let size = (1usize << n) * (1..=n).product::<usize>();
    options.check_size("order of B_n", size)?;
    let elements = enumerate_bn(n)?;
    let covers =
        elements.iter().flat_map(|x| weak_b_upper_covers(x).into_iter().map(move |y| (x.clone(), y))).collect();
    FiniteLattice::build(elements, covers, options)
}

/// Pop on either weak order: reverse every descending run.
pub fn pop_direct(p: &Permutation) -> Permutation {
    p.rev()
}

pub fn pop_direct_b(x: &SignedPermutation) -> SignedPermutation {
    x.rev()
}

/// The first entry of each ascending run is smaller than the last entry
/// of the next run. Every Pop image in Weak(B_n) satisfies this.
pub fn image_necessary_condition(x: &SignedPermutation) -> bool {
    let d = x.asc_decompose();
    d.runs().windows(2).all(|w| w[0][0] < *w[1].last().unwrap())
}

/// The explicit image element with first entry 1 and a block of large
/// values in positions 2..=j+1.
pub fn family_one_two(n: usize, j: usize) -> Result<SignedPermutation> {
    if j == 0 || j >= n {
        return Err(Error::Parameter(format!("j must lie in 1..={}, got {j}", n.saturating_sub(1))));
    }
    let (n, j) = (n as i64, j as i64);
    let x: Vec<u32> = (1..=2 * n)
        .map(|i| {
            let v = if i == 1 {
                1
            } else if i <= j + 1 {
                2 * n - j + i - 2
            } else if i < 2 * n - j {
                i
            } else if i < 2 * n {
                j + i - 2 * n + 2
            } else {
                2 * n
            };
            v as u32
        })
        .collect();
    SignedPermutation::from_entries(x)
}

/// `1 . (y + 1) . 2n` for `y` in B_{n-1}.
pub fn one_one_lift(y: &SignedPermutation) -> SignedPermutation {
    let top = 2 * y.rank() as u32 + 2;
    let mut w = Vec::with_capacity(top as usize);
    w.push(1);
    w.extend(y.entries().iter().map(|v| v + 1));
    w.push(top);
    SignedPermutation::from_entries_unchecked(w)
}

/// For each first entry `i`, the number of Pop images in Weak(B_n) with
/// `x_1 = i` and exactly `n - 1` upper covers, by brute force on the built
/// lattice. `extended` raises the rank limit to 5.
pub fn census_coefficient(n: usize, extended: bool) -> Result<BTreeMap<u32, u64>> {
    let limit = if extended { CENSUS_MAX_RANK + 1 } else { CENSUS_MAX_RANK };
    if n > limit {
        return Err(Error::Guard { what: "census rank", value: n, limit });
    }
    if n == 0 {
        return Err(Error::Parameter("census needs n >= 1".into()));
    }
    let lattice = weak_b_lattice(n, &BuildOptions::default())?;
    let image = lattice.pop_image(crate::lattice::PopDirection::Down);
    let mut counts: BTreeMap<u32, u64> = (1..=2 * n as u32).map(|i| (i, 0)).collect();
    let hits: Vec<u32> = image
        .par_iter()
        .filter(|&&i| lattice.upper_covers(i).len() == n - 1)
        .map(|&i| lattice.element(i).entries()[0])
        .collect();
    for first in hits {
        *counts.get_mut(&first).unwrap() += 1;
    }
    Ok(counts)
}
