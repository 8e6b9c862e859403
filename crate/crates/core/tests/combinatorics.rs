use num_bigint::BigInt;
use poplat_core::binomial::{binomial, binomial_generalized, catalan, motzkin};
use poplat_core::pattern::{contains_pattern, PatternSpec};
use poplat_core::perm::{reduce, Permutation};
use poplat_core::signed::{enumerate_bn, SignedPermutation};
use poplat_core::tamari::tam_b_elements;

fn factorial(n: i64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Reverses each maximal decreasing factor of a word of distinct values.
fn rev_word(w: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(w.len());
    let mut start = 0;
    for i in 1..=w.len() {
        if i == w.len() || w[i] > w[i - 1] {
            out.extend(w[start..i].iter().rev());
            start = i;
        }
    }
    out
}

/// Every subsequence of `host` of the pattern's length, checked by value
/// order.
fn brute_contains(host: &[u32], pattern: &[u32]) -> bool {
    let k = pattern.len();
    let m = host.len();
    if k > m {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let sub: Vec<u32> = idx.iter().map(|&i| host[i]).collect();
        if reduce(&sub).entries() == pattern {
            return true;
        }
        let mut j = k;
        loop {
            if j == 0 {
                return false;
            }
            j -= 1;
            if idx[j] < m - k + j {
                break;
            }
        }
        idx[j] += 1;
        for t in j + 1..k {
            idx[t] = idx[t - 1] + 1;
        }
    }
}

#[test]
fn binomials_match_factorial_ratio() {
    for n in 0..=30 {
        for k in 0..=n {
            assert_eq!(binomial(n, k), factorial(n) / (factorial(k) * factorial(n - k)));
        }
    }
    assert_eq!(binomial_generalized(-1, 0), BigInt::from(1));
    assert_eq!(binomial(-1, 0), BigInt::from(0));
    let cat: Vec<BigInt> = (0..8).map(catalan).collect();
    assert_eq!(cat, [1, 1, 2, 5, 14, 42, 132, 429].map(BigInt::from));
    let mot: Vec<BigInt> = (0..8).map(motzkin).collect();
    assert_eq!(mot, [1, 1, 2, 4, 9, 21, 51, 127].map(BigInt::from));
}

#[test]
fn reduction_is_idempotent() {
    for m in 0..=7 {
        for p in Permutation::all(m) {
            let spread: Vec<u32> = p.entries().iter().map(|v| 3 * v + 7).collect();
            let r = reduce(&spread);
            assert_eq!(r, p);
            assert_eq!(reduce(r.entries()), r);
        }
    }
}

#[test]
fn run_reversal_sorts_each_run() {
    for m in 1..=7 {
        for p in Permutation::all(m) {
            let r = p.rev();
            let mut sorted = r.entries().to_vec();
            sorted.sort_unstable();
            assert_eq!(sorted, Permutation::identity(m).entries());
            let mut start = 0;
            for run in p.descending_runs() {
                let range = &r.entries()[start..start + run.len()];
                assert!(range.windows(2).all(|w| w[0] < w[1]), "{p}");
                start += run.len();
            }
            assert_eq!(r.entries(), rev_word(p.entries()));
        }
    }
}

#[test]
fn pattern_search_matches_subsequence_oracle() {
    let patterns: Vec<Permutation> = (1..=4).flat_map(Permutation::all).collect();
    for m in 1..=7 {
        for host in Permutation::all(m) {
            for pattern in &patterns {
                let spec = PatternSpec::classical(pattern.clone());
                assert_eq!(
                    contains_pattern(host.entries(), &spec).unwrap(),
                    brute_contains(host.entries(), pattern.entries()),
                    "{pattern} in {host}"
                );
            }
        }
    }
}

#[test]
fn star_pattern_splits_into_big_and_small() {
    let (star, big, small) = (PatternSpec::star_312(), PatternSpec::big_star_312(), PatternSpec::small_star_312());
    for m in [2, 4, 6, 8] {
        for host in Permutation::all(m) {
            let h = host.entries();
            let either = big.is_contained_in(h).unwrap() || small.is_contained_in(h).unwrap();
            assert_eq!(either, star.is_contained_in(h).unwrap(), "{host}");
        }
    }
}

#[test]
fn half_blocks_reconstruct_the_word() {
    for n in 1..=4 {
        for x in enumerate_bn(n).unwrap() {
            let d = x.half_decompose();
            let mut rebuilt = vec![0u32; 2 * n];
            for b in d.blocks() {
                rebuilt[b.offset()..b.offset() + b.entries.len()].copy_from_slice(&b.entries);
            }
            let mut small = x.entries().iter().filter(|&&v| v as usize <= n);
            for slot in rebuilt.iter_mut().filter(|s| **s == 0) {
                *slot = *small.next().unwrap();
            }
            assert_eq!(rebuilt, x.entries());
            let mirror: Vec<u32> =
                x.entries().iter().rev().filter(|&&v| v as usize <= n).map(|&v| 2 * n as u32 + 1 - v).collect();
            assert_eq!(mirror, d.half(), "{x}");
        }
    }
}

#[test]
fn blocks_of_tamari_elements_increase() {
    for n in 1..=5 {
        for x in tam_b_elements(n).unwrap() {
            let d = x.half_decompose();
            for w in d.blocks().windows(2) {
                let max_prev = w[0].entries.iter().max().unwrap();
                let min_next = w[1].entries.iter().min().unwrap();
                assert!(min_next > max_prev, "{x}");
            }
            assert_eq!(x.rev().half_decompose().half(), rev_word(d.half()), "{x}");
        }
    }
}

#[test]
fn large_early_entries_sit_in_the_first_run() {
    for n in 1..=4 {
        for x in enumerate_bn(n).unwrap() {
            if x.word().bounded_ascent_count(n) != n - 1 {
                continue;
            }
            let first = x.asc_decompose().asc(1).unwrap().to_vec();
            for (i, &v) in x.entries().iter().enumerate().take(n) {
                if v as usize > n {
                    assert!(first.contains(&v), "{x}: {v} at {}", i + 1);
                }
            }
        }
    }
}

#[test]
fn enumeration_sizes() {
    for n in 0..=6 {
        let expected = (1usize << n) * (1..=n).product::<usize>();
        assert_eq!(enumerate_bn(n).unwrap().len(), expected);
    }
    assert!(enumerate_bn(8).is_err());
    assert!("2,1,4,3".parse::<SignedPermutation>().is_ok());
    assert!("2,1,3,4".parse::<SignedPermutation>().is_err());
}
