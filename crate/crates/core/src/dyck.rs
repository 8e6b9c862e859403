//! Dyck paths as order ideals of the type A root poset, symmetric Dyck
//! paths as order ideals of the type B root poset, and Pop on both.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::{BuildOptions, FiniteLattice, QPolynomial};

pub const MAX_SEMILENGTH_A: usize = 10;
pub const MAX_RANK_B: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Rise,
    Fall,
}

/// A path of rises and falls that starts and ends on the axis and never
/// goes below it. Points are indexed by x-coordinate 0..=2m.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<Step>,
}

/// Valleys, peaks, and peaks of height at least 2, by x-coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathFeature {
    pub valleys: Vec<usize>,
    pub peaks: Vec<usize>,
    pub flippable_peaks: Vec<usize>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut h: i64 = 0;
        for (i, s) in steps.iter().enumerate() {
            h += if *s == Step::Rise { 1 } else { -1 };
            if h < 0 {
                return Err(Error::Parse {
                    input: render(&steps),
                    reason: format!("goes below the axis after step {}", i + 1),
                });
            }
        }
        if h != 0 {
            return Err(Error::Parse { input: render(&steps), reason: "does not end on the axis".into() });
        }
        Ok(DyckPath { steps })
    }

    /// `(rf)^m`, the bottom of the ideal lattice.
    pub fn zigzag(m: usize) -> Self {
        DyckPath { steps: [Step::Rise, Step::Fall].repeat(m) }
    }

    /// `r^m f^m`, the top.
    pub fn pyramid(m: usize) -> Self {
        let mut steps = vec![Step::Rise; m];
        steps.extend(vec![Step::Fall; m]);
        DyckPath { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn heights(&self) -> Vec<usize> {
        let mut h = Vec::with_capacity(self.steps.len() + 1);
        let mut cur = 0usize;
        h.push(0);
        for s in &self.steps {
            cur = if *s == Step::Rise { cur + 1 } else { cur - 1 };
            h.push(cur);
        }
        h
    }

    /// x-coordinates of points preceded by a fall and followed by a rise.
    pub fn valleys(&self) -> Vec<usize> {
        (1..self.steps.len()).filter(|&x| self.steps[x - 1] == Step::Fall && self.steps[x] == Step::Rise).collect()
    }

    /// x-coordinates of points preceded by a rise and followed by a fall.
    pub fn peaks(&self) -> Vec<usize> {
        (1..self.steps.len()).filter(|&x| self.steps[x - 1] == Step::Rise && self.steps[x] == Step::Fall).collect()
    }

    pub fn features(&self) -> PathFeature {
        let h = self.heights();
        let peaks = self.peaks();
        PathFeature {
            valleys: self.valleys(),
            flippable_peaks: peaks.iter().copied().filter(|&x| h[x] >= 2).collect(),
            peaks,
        }
    }

    fn swap_at(&self, x: usize) -> DyckPath {
        let mut steps = self.steps.clone();
        steps.swap(x - 1, x);
        DyckPath { steps }
    }

    /// Turns the valley at `x` into a peak.
    pub fn flip_valley(&self, x: usize) -> Result<DyckPath> {
        if !self.valleys().contains(&x) {
            return Err(Error::Parameter(format!("no valley at x = {x} in {self}")));
        }
        Ok(self.swap_at(x))
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.steps.len();
        (0..n).all(|i| self.steps[i] != self.steps[n - 1 - i])
    }

    /// Contains the factor fall, fall, rise, rise.
    pub fn has_ffrr(&self) -> bool {
        use Step::{Fall, Rise};
        self.steps.windows(4).any(|w| w == [Fall, Fall, Rise, Rise])
    }

    /// Touches the axis strictly between its endpoints.
    pub fn touches_axis_inside(&self) -> bool {
        let h = self.heights();
        h[1..h.len() - 1].contains(&0)
    }

    /// Drops the first and last step. Only valid when the path does not
    /// touch the axis inside.
    pub fn strip(&self) -> Result<DyckPath> {
        if self.steps.is_empty() || self.touches_axis_inside() {
            return Err(Error::Precondition(format!("{self} is not elevated")));
        }
        Ok(DyckPath { steps: self.steps[1..self.steps.len() - 1].to_vec() })
    }

    /// Wraps the path as `r . path . f`.
    pub fn elevate(&self) -> DyckPath {
        let mut steps = Vec::with_capacity(self.steps.len() + 2);
        steps.push(Step::Rise);
        steps.extend(&self.steps);
        steps.push(Step::Fall);
        DyckPath { steps }
    }

    /// Pointwise height comparison.
    pub fn le(&self, other: &DyckPath) -> bool {
        self.steps.len() == other.steps.len() && self.heights().iter().zip(other.heights()).all(|(a, b)| *a <= b)
    }
}

fn render(steps: &[Step]) -> String {
    steps.iter().map(|s| if *s == Step::Rise { 'r' } else { 'f' }).collect()
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.steps))
    }
}

impl FromStr for DyckPath {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'r' | 'R' | 'u' | 'U' => Ok(Step::Rise),
                'f' | 'F' | 'd' | 'D' => Ok(Step::Fall),
                other => Err(Error::Parse { input: s.to_string(), reason: format!("unexpected step {other:?}") }),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }
}

/// A Dyck path of semi-length 2n symmetric about x = 2n.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymmetricDyckPath(DyckPath);

impl SymmetricDyckPath {
    pub fn new(path: DyckPath) -> Result<Self> {
        if path.semilength() % 2 == 1 || !path.is_symmetric() {
            return Err(Error::Precondition(format!("{path} is not a symmetric path of even semi-length")));
        }
        Ok(SymmetricDyckPath(path))
    }

    pub fn path(&self) -> &DyckPath {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.semilength() / 2
    }

    /// Peaks with x-coordinate at most 2n.
    pub fn p_statistic(&self) -> usize {
        let centre = 2 * self.rank();
        self.0.peaks().iter().filter(|&&x| x <= centre).count()
    }
}

impl fmt::Display for SymmetricDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for SymmetricDyckPath {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SymmetricDyckPath::new(s.parse()?)
    }
}

/// All Dyck paths of semi-length m, lexicographic with rise before fall.
pub fn enumerate_dyck(m: usize) -> Vec<DyckPath> {
    fn go(m: usize, rises: usize, falls: usize, cur: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
        if rises == m && falls == m {
            out.push(DyckPath { steps: cur.clone() });
            return;
        }
        if rises < m {
            cur.push(Step::Rise);
            go(m, rises + 1, falls, cur, out);
            cur.pop();
        }
        if falls < rises {
            cur.push(Step::Fall);
            go(m, rises, falls + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, 0, 0, &mut Vec::with_capacity(2 * m), &mut out);
    out
}

/// All symmetric Dyck paths of semi-length 2n: a prefix of length 2n that
/// stays nonnegative, mirrored.
pub fn enumerate_symmetric(n: usize) -> Vec<SymmetricDyckPath> {
    fn go(len: usize, h: usize, cur: &mut Vec<Step>, out: &mut Vec<SymmetricDyckPath>) {
        if cur.len() == len {
            let mut steps = cur.clone();
            steps.extend(cur.iter().rev().map(|s| match s {
                Step::Rise => Step::Fall,
                Step::Fall => Step::Rise,
            }));
            out.push(SymmetricDyckPath(DyckPath { steps }));
            return;
        }
        cur.push(Step::Rise);
        go(len, h + 1, cur, out);
        cur.pop();
        if h > 0 {
            cur.push(Step::Fall);
            go(len, h - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(2 * n, 0, &mut Vec::with_capacity(4 * n), &mut out);
    out
}

/// Pop-up on either ideal lattice: every valley becomes a peak at once.
pub fn pop_up_path(mu: &DyckPath) -> DyckPath {
    let mut steps = mu.steps.clone();
    for x in mu.valleys() {
        steps.swap(x - 1, x);
    }
    DyckPath { steps }
}

pub fn pop_up_symmetric(mu: &SymmetricDyckPath) -> SymmetricDyckPath {
    SymmetricDyckPath(pop_up_path(&mu.0))
}

fn check_semilength(m: usize) -> Result<()> {
    if m == 0 || m > MAX_SEMILENGTH_A {
        return Err(Error::Guard { what: "semi-length", value: m, limit: MAX_SEMILENGTH_A });
    }
    Ok(())
}

fn check_rank_b(n: usize) -> Result<()> {
    if n == 0 || n > MAX_RANK_B {
        return Err(Error::Guard { what: "rank of the symmetric path lattice", value: n, limit: MAX_RANK_B });
    }
    Ok(())
}

/// J(Phi+ of A_{m-1}): Dyck paths of semi-length m under pointwise order.
pub fn build_j_a(m: usize, options: &BuildOptions) -> Result<FiniteLattice<DyckPath>> {
    check_semilength(m)?;
    let elements = enumerate_dyck(m);
    options.check_size("number of Dyck paths", elements.len())?;
    let covers =
        elements.iter().flat_map(|p| p.valleys().into_iter().map(move |x| (p.clone(), p.swap_at(x)))).collect();
    FiniteLattice::build(elements, covers, options)
}

/// Upper covers of a symmetric path: flip the central valley alone or a
/// mirrored pair of valleys together.
pub fn symmetric_upper_covers(mu: &SymmetricDyckPath) -> Vec<SymmetricDyckPath> {
    let centre = 2 * mu.rank();
    mu.0.valleys()
        .into_iter()
        .filter(|&x| x <= centre)
        .map(|x| {
            let mut p = mu.0.swap_at(x);
            if x != centre {
                p = p.swap_at(2 * centre - x);
            }
            SymmetricDyckPath(p)
        })
        .collect()
}

/// J(Phi+ of B_n): symmetric Dyck paths of semi-length 2n.
pub fn build_j_b(n: usize, options: &BuildOptions) -> Result<FiniteLattice<SymmetricDyckPath>> {
    check_rank_b(n)?;
    let elements = enumerate_symmetric(n);
    options.check_size("number of symmetric paths", elements.len())?;
    let covers =
        elements.iter().flat_map(|p| symmetric_upper_covers(p).into_iter().map(move |q| (p.clone(), q))).collect();
    FiniteLattice::build(elements, covers, options)
}

/// No ffrr factor and no interior contact with the axis.
pub fn image_predicate_a(mu: &DyckPath) -> bool {
    !mu.has_ffrr() && !mu.touches_axis_inside()
}

pub fn image_predicate_b(mu: &SymmetricDyckPath) -> bool {
    image_predicate_a(&mu.0)
}

/// Number of elements covered by `mu` in the lattice.
pub fn d_statistic<K: crate::lattice::LatticeKey>(lattice: &FiniteLattice<K>, mu: &K) -> Result<usize> {
    Ok(lattice.lower_covers(lattice.require(mu)?).len())
}

/// Lower covers in J(Phi+ of A): peaks of height at least 2.
pub fn lower_cover_count_a(mu: &DyckPath) -> usize {
    mu.features().flippable_peaks.len()
}

/// Lower covers in J(Phi+ of B): flippable peaks up to the centre.
pub fn lower_cover_count_b(mu: &SymmetricDyckPath) -> usize {
    let centre = 2 * mu.rank();
    mu.0.features().flippable_peaks.iter().filter(|&&x| x <= centre).count()
}

/// Pop polynomial of J(Phi+ of A_{m-1}) computed from Pop-up images and
/// peak counts without building the lattice.
pub fn pop_polynomial_direct_a(m: usize) -> Result<QPolynomial> {
    if m == 0 {
        return Err(Error::Parameter("semi-length must be positive".into()));
    }
    let image: HashSet<DyckPath> = enumerate_dyck(m).par_iter().map(pop_up_path).collect();
    Ok(image.iter().map(|p| (lower_cover_count_a(p) as u32, 1.into())).collect())
}

pub fn pop_polynomial_direct_b(n: usize) -> Result<QPolynomial> {
    if n == 0 {
        return Err(Error::Parameter("rank must be positive".into()));
    }
    let image: HashSet<SymmetricDyckPath> = enumerate_symmetric(n).par_iter().map(pop_up_symmetric).collect();
    Ok(image.iter().map(|p| (lower_cover_count_b(p) as u32, 1.into())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::PopDirection;

    fn d(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    #[test]
    fn parsing_and_features() {
        assert!("rffr".parse::<DyckPath>().is_err());
        assert!("rrf".parse::<DyckPath>().is_err());
        let f = d("rrfrfrff").features();
        assert_eq!(f.valleys, vec![3, 5]);
        assert_eq!(f.peaks, vec![2, 4, 6]);
        assert_eq!(f.flippable_peaks, vec![2, 4, 6]);
        assert_eq!(d("rfrf").features().flippable_peaks, Vec::<usize>::new());
        assert!(d("rrfrfrff").is_symmetric());
        assert!(d("rrfrff").is_symmetric());
        assert!(!d("rrffrf").is_symmetric());
    }

    #[test]
    fn pop_up() {
        assert_eq!(pop_up_path(&d("rfrf")), d("rrff"));
        assert_eq!(pop_up_path(&d("rfrfrf")), d("rrfrff"));
        assert_eq!(pop_up_path(&d("rrrfff")), d("rrrfff"));
    }

    #[test]
    fn small_lattices() {
        let o = BuildOptions::default();
        assert_eq!(build_j_a(1, &o).unwrap().len(), 1);
        let two = build_j_a(2, &o).unwrap();
        assert_eq!((two.len(), two.cover_count()), (2, 1));
        let three = build_j_a(3, &o).unwrap();
        let image: Vec<String> =
            three.pop_image(PopDirection::Up).into_iter().map(|i| three.element(i).to_string()).collect();
        assert_eq!(image.len(), 2);
        assert!(image.contains(&"rrrfff".to_string()) && image.contains(&"rrfrff".to_string()));
        let b2 = build_j_b(2, &o).unwrap();
        assert_eq!(b2.len(), 6);
        assert_eq!(
            b2.pop_polynomial(PopDirection::Up),
            [(2, 1), (1, 2)].into_iter().map(|(d, c)| (d, c.into())).collect()
        );
        assert_eq!(build_j_b(1, &o).unwrap().len(), 2);
        assert!(build_j_a(11, &o).is_err());
        assert!(build_j_b(6, &o).is_err());
    }

    #[test]
    fn statistics() {
        let o = BuildOptions::default();
        let three = build_j_a(3, &o).unwrap();
        assert_eq!(d_statistic(&three, &d("rrrfff")).unwrap(), 1);
        let two = build_j_a(2, &o).unwrap();
        assert_eq!(d_statistic(&two, &d("rfrf")).unwrap(), 0);
        assert_eq!(d("rfrf").peaks().len(), 2);
        let mu: SymmetricDyckPath = "rrfrfrff".parse().unwrap();
        assert_eq!(mu.p_statistic(), 2);
        assert!(image_predicate_a(&d("rrff")));
        assert!(!image_predicate_a(&d("rfrf")));
        assert!(!image_predicate_a(&d("rrffrrff")));
    }

    #[test]
    fn enumeration_counts() {
        let sizes: Vec<usize> = (1..=6).map(|m| enumerate_dyck(m).len()).collect();
        assert_eq!(sizes, vec![1, 2, 5, 14, 42, 132]);
        let sym: Vec<usize> = (1..=5).map(|n| enumerate_symmetric(n).len()).collect();
        assert_eq!(sym, vec![2, 6, 20, 70, 252]);
        for p in enumerate_symmetric(3) {
            assert!(p.path().is_symmetric());
        }
    }
}
