use std::sync::OnceLock;

use poplat_core::dyck::{build_j_a, DyckPath};
use poplat_core::lattice::{congruence_project, BuildOptions, FiniteLattice, LatticeKey};
use poplat_core::perm::Permutation;
use poplat_core::signed::SignedPermutation;
use poplat_core::tamari::{tam_a_congruence, tam_a_lattice, tam_a_moves, tam_b_lattice};
use poplat_core::weak::{weak_a_lattice, weak_b_lattice};
use proptest::prelude::*;

fn pops_move_the_right_way<K: LatticeKey>(l: &FiniteLattice<K>) {
    for i in 0..l.len() {
        assert!(l.leq(l.pop_down(i), i));
        assert!(l.leq(i, l.pop_up(i)));
    }
}

fn lattice_laws<K: LatticeKey>(l: &FiniteLattice<K>, a: usize, b: usize, c: usize) {
    assert_eq!(l.meet(a, b), l.meet(b, a));
    assert_eq!(l.join(a, b), l.join(b, a));
    assert_eq!(l.meet(l.meet(a, b), c), l.meet(a, l.meet(b, c)));
    assert_eq!(l.join(l.join(a, b), c), l.join(a, l.join(b, c)));
    assert_eq!(l.meet(a, l.join(a, b)), a);
    assert_eq!(l.join(a, l.meet(a, b)), a);
}

#[test]
fn small_lattices_exhaustively() {
    let weak = weak_b_lattice(3, &BuildOptions::default()).unwrap();
    let tam = tam_a_lattice(4, &BuildOptions::default()).unwrap();
    let tam_b = tam_b_lattice(3, &BuildOptions::default()).unwrap();
    pops_move_the_right_way(&weak);
    pops_move_the_right_way(&tam);
    pops_move_the_right_way(&tam_b);
    for l in [&weak, &tam_b] {
        for a in 0..l.len() {
            for b in 0..l.len() {
                for c in 0..l.len() {
                    lattice_laws(l, a, b, c);
                }
            }
        }
    }
    for a in 0..tam.len() {
        for b in 0..tam.len() {
            for c in 0..tam.len() {
                lattice_laws(&tam, a, b, c);
            }
        }
    }
}

#[test]
fn congruence_projection_is_a_retraction() {
    for n in 1..=4 {
        let weak = weak_a_lattice(n + 1, &BuildOptions::default()).unwrap();
        let cong = tam_a_congruence(&weak).unwrap();
        for i in 0..weak.len() {
            let m = cong.project(i);
            assert_eq!(cong.project(m), m);
            assert!(weak.leq(m, i));
            assert!(weak.leq(i, cong.project_up(i)));
        }
    }
    let weak = weak_a_lattice(4, &BuildOptions::default()).unwrap();
    let x: Permutation = "3142".parse().unwrap();
    let y = congruence_project(&weak, |p| tam_a_moves(p).iter().map(|m| m.apply(p)).collect(), &x).unwrap();
    assert_eq!(y.to_string(), "1,3,4,2");
}

fn weak_b4() -> &'static FiniteLattice<SignedPermutation> {
    static L: OnceLock<FiniteLattice<SignedPermutation>> = OnceLock::new();
    L.get_or_init(|| weak_b_lattice(4, &BuildOptions::default()).unwrap())
}

fn j_a8() -> &'static FiniteLattice<DyckPath> {
    static L: OnceLock<FiniteLattice<DyckPath>> = OnceLock::new();
    L.get_or_init(|| build_j_a(8, &BuildOptions::default()).unwrap())
}

#[test]
fn larger_lattices_pop_within_bounds() {
    pops_move_the_right_way(weak_b4());
    pops_move_the_right_way(j_a8());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn weak_b4_laws(a in 0usize..384, b in 0usize..384, c in 0usize..384) {
        lattice_laws(weak_b4(), a, b, c);
    }

    #[test]
    fn j_a8_laws(a in 0usize..1430, b in 0usize..1430, c in 0usize..1430) {
        lattice_laws(j_a8(), a, b, c);
    }
}
