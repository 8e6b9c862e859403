//! Lattice names accepted on the command line and uniform access to the
//! operations each one supports.

use std::collections::BTreeSet;

use clap::ValueEnum;
use poplat_core::dyck::{self, DyckPath, SymmetricDyckPath};
use poplat_core::lattice::{BuildOptions, FiniteLattice, LatticeKey, PopDirection, QPolynomial};
use poplat_core::tamari;
use poplat_core::weak;
use poplat_core::{Error, Permutation, Result, SignedPermutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LatticeName {
    /// Weak order on permutations of 1..=n
    WeakA,
    /// Weak order on signed permutations of rank n
    WeakB,
    /// Tamari lattice Tam(A_n) on 312-avoiding permutations of 1..=n+1
    TamA,
    /// Type B Tamari lattice Tam(B_n)
    TamB,
    /// Ideals of the type A root poset: Dyck paths of a given semi-length
    #[value(name = "j-a")]
    JA,
    /// Ideals of the type B root poset: symmetric Dyck paths of semi-length 2n
    #[value(name = "j-b")]
    JB,
}

impl LatticeName {
    pub fn as_str(self) -> &'static str {
        match self {
            LatticeName::WeakA => "weak-a",
            LatticeName::WeakB => "weak-b",
            LatticeName::TamA => "tam-a",
            LatticeName::TamB => "tam-b",
            LatticeName::JA => "j-a",
            LatticeName::JB => "j-b",
        }
    }

    /// The Pop operator the lattice is usually studied with.
    pub fn natural_direction(self) -> PopDirection {
        match self {
            LatticeName::JA | LatticeName::JB => PopDirection::Up,
            _ => PopDirection::Down,
        }
    }
}

/// A built lattice of any supported kind.
pub enum AnyLattice {
    WeakA(FiniteLattice<Permutation>),
    WeakB(FiniteLattice<SignedPermutation>),
    TamA(FiniteLattice<Permutation>),
    TamB(FiniteLattice<SignedPermutation>),
    JA(FiniteLattice<DyckPath>),
    JB(FiniteLattice<SymmetricDyckPath>),
}

macro_rules! each {
    ($self:expr, $l:ident => $body:expr) => {
        match $self {
            AnyLattice::WeakA($l) | AnyLattice::TamA($l) => $body,
            AnyLattice::WeakB($l) | AnyLattice::TamB($l) => $body,
            AnyLattice::JA($l) => $body,
            AnyLattice::JB($l) => $body,
        }
    };
}

fn names<K: LatticeKey>(l: &FiniteLattice<K>, idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| l.element(i).to_string()).collect()
}

impl AnyLattice {
    pub fn build(name: LatticeName, size: usize, options: &BuildOptions) -> Result<Self> {
        Ok(match name {
            LatticeName::WeakA => AnyLattice::WeakA(weak::weak_a_lattice(size, options)?),
            LatticeName::WeakB => AnyLattice::WeakB(weak::weak_b_lattice(size, options)?),
            LatticeName::TamA => AnyLattice::TamA(tamari::tam_a_lattice(size, options)?),
            LatticeName::TamB => AnyLattice::TamB(tamari::tam_b_lattice(size, options)?),
            LatticeName::JA => AnyLattice::JA(dyck::build_j_a(size, options)?),
            LatticeName::JB => AnyLattice::JB(dyck::build_j_b(size, options)?),
        })
    }

    pub fn len(&self) -> usize {
        each!(self, l => l.len())
    }

    pub fn cover_count(&self) -> usize {
        each!(self, l => l.cover_count())
    }

    pub fn pop_polynomial(&self, direction: PopDirection) -> QPolynomial {
        each!(self, l => l.pop_polynomial(direction))
    }

    pub fn to_json(&self) -> serde_json::Value {
        each!(self, l => l.to_json())
    }

    pub fn elements(&self) -> Vec<String> {
        each!(self, l => names(l, &(0..l.len()).collect::<Vec<_>>()))
    }

    /// Image elements in lattice order.
    pub fn image(&self, direction: PopDirection) -> Vec<String> {
        each!(self, l => names(l, &l.pop_image(direction)))
    }

    /// Elements where the image predicate disagrees with the computed image,
    /// or `None` when the lattice has no exact predicate.
    pub fn predicate_mismatches(&self, direction: PopDirection) -> Option<Vec<String>> {
        fn sweep<K: LatticeKey + Ord>(l: &FiniteLattice<K>, d: PopDirection, pred: impl Fn(&K) -> bool) -> Vec<String> {
            let image: BTreeSet<&K> = l.pop_image(d).into_iter().map(|i| l.element(i)).collect();
            l.elements().iter().filter(|k| pred(k) != image.contains(k)).map(ToString::to_string).collect()
        }
        match (self, direction) {
            (AnyLattice::TamA(l), PopDirection::Down) => Some(sweep(l, direction, tamari::hong_image_predicate)),
            (AnyLattice::TamB(l), PopDirection::Down) => Some(sweep(l, direction, tamari::tam_b_image_predicate)),
            (AnyLattice::JA(l), PopDirection::Up) => Some(sweep(l, direction, dyck::image_predicate_a)),
            (AnyLattice::JB(l), PopDirection::Up) => Some(sweep(l, direction, dyck::image_predicate_b)),
            _ => None,
        }
    }

    /// Image elements violating the run condition (Weak(B_n) only).
    pub fn run_condition_violations(&self) -> Option<Vec<String>> {
        match self {
            AnyLattice::WeakB(l) => Some(
                l.pop_image(PopDirection::Down)
                    .into_iter()
                    .map(|i| l.element(i))
                    .filter(|x| !weak::image_necessary_condition(x))
                    .map(ToString::to_string)
                    .collect(),
            ),
            _ => None,
        }
    }
}

/// Applies the lattice's Pop operator to one element given as text.
pub fn pop_one(name: LatticeName, text: &str) -> Result<String> {
    Ok(match name {
        LatticeName::WeakA => weak::pop_direct(&text.parse()?).to_string(),
        LatticeName::WeakB => weak::pop_direct_b(&text.parse()?).to_string(),
        LatticeName::TamA => tamari::pop_tam_a(&text.parse()?)?.to_string(),
        LatticeName::TamB => tamari::pop_tam_b(&text.parse()?)?.to_string(),
        LatticeName::JA => dyck::pop_up_path(&text.parse()?).to_string(),
        LatticeName::JB => dyck::pop_up_symmetric(&text.parse()?).to_string(),
    })
}

/// The canonical Pop preimage of an image element.
pub fn preimage_one(name: LatticeName, text: &str) -> Result<String> {
    match name {
        LatticeName::TamA => Ok(tamari::preimage_end1(&text.parse()?)?.to_string()),
        LatticeName::TamB => Ok(tamari::preimage_tam_b(&text.parse()?)?.to_string()),
        other => Err(Error::Parameter(format!("no preimage construction for {}", other.as_str()))),
    }
}
