//! Named series with their coefficient tables and cross-checks.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::{
    radical_check_j, radical_g, radical_i, radical_j_rational, radical_m2, solve_f, solve_g, solve_h, solve_i, solve_j,
    solve_tamari, split_n, BiSeries,
};
use crate::dyck::{enumerate_dyck, pop_polynomial_direct_a, pop_polynomial_direct_b};
use crate::error::{Error, Result};
use crate::formulas::{h_coefficient, jayan_polynomial, jaybn_polynomial, n_coefficient, tam_b_polynomial};
use crate::lattice::QPolynomial;
use crate::tamari::{pop_tam_a, pop_tam_b, tam_a_elements, tam_b_elements, tam_b_upper_cover_count};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SeriesName {
    G,
    F,
    H,
    I,
    J,
    M,
    N,
    K,
}

impl SeriesName {
    pub const ALL: [SeriesName; 8] = [
        SeriesName::G,
        SeriesName::F,
        SeriesName::H,
        SeriesName::I,
        SeriesName::J,
        SeriesName::M,
        SeriesName::N,
        SeriesName::K,
    ];
}

impl fmt::Display for SeriesName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for SeriesName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SeriesName::ALL
            .into_iter()
            .find(|n| n.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parameter(format!("unknown series {s:?}")))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SeriesCheck {
    pub name: String,
    pub passed: bool,
    /// First disagreement, if any.
    pub detail: Option<String>,
}

impl SeriesCheck {
    fn new(name: impl Into<String>, mismatch: Option<String>) -> Self {
        SeriesCheck { name: name.into(), passed: mismatch.is_none(), detail: mismatch }
    }
}

/// Coefficient table of a series (row `n` is the coefficient of `x^n` as a
/// polynomial in `y`, serialized with `y` written as `q`) and its checks.
#[derive(Clone, Debug, Serialize)]
pub struct SeriesReport {
    pub series: SeriesName,
    pub order: usize,
    pub rows: Vec<QPolynomial>,
    pub checks: Vec<SeriesCheck>,
}

impl SeriesReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn rows_of(s: &BiSeries) -> Result<Vec<QPolynomial>> {
    (0..=s.order()).map(|n| s.row_poly(n)).collect()
}

/// Compares `rows[n]` with `expected(n)` for each `n` in `range`; the first
/// difference is reported.
fn compare_rows(
    name: &str,
    rows: &[QPolynomial],
    range: impl IntoIterator<Item = usize>,
    expected: impl Fn(usize) -> Result<QPolynomial> + Sync,
) -> Result<SeriesCheck> {
    let range: Vec<usize> = range.into_iter().collect();
    let results: Vec<Result<Option<String>>> = range
        .par_iter()
        .map(|&n| {
            let e = expected(n)?;
            Ok((rows[n] != e).then(|| format!("x^{n}: series {} but expected {}", rows[n], e)))
        })
        .collect();
    let mut mismatch = None;
    for r in results {
        if let Some(m) = r? {
            mismatch.get_or_insert(m);
        }
    }
    Ok(SeriesCheck::new(name, mismatch))
}

fn equal_check(name: &str, a: &BiSeries, b: &BiSeries) -> SeriesCheck {
    let n = a.order().min(b.order());
    let mismatch = (0..=n).find(|&i| a.row(i) != b.row(i)).map(|i| format!("rows differ at x^{i}"));
    SeriesCheck::new(name, mismatch)
}

fn tally<T>(items: impl IntoIterator<Item = T>, key: impl Fn(&T) -> usize) -> QPolynomial {
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    for item in items {
        *counts.entry(key(&item)).or_default() += 1;
    }
    counts.into_iter().map(|(k, c)| (k as u32, BigInt::from(c))).collect()
}

/// Largest sizes used for the enumeration cross-checks.
const ENUM_PATHS: usize = 8;
const ENUM_SYMMETRIC: usize = 9;
const ENUM_IDEAL_A: usize = 9;
const ENUM_IDEAL_B: usize = 5;
const ENUM_TAM_A: usize = 8;
const ENUM_TAM_B: usize = 4;

/// ffrr-avoiding paths of semi-length `m`, by peaks.
fn paths_by_peaks(m: usize) -> QPolynomial {
    tally(enumerate_dyck(m).into_iter().filter(|p| !p.has_ffrr()), |p| p.peaks().len())
}

/// Symmetric ffrr-avoiding paths of semi-length `m`, by peaks up to the
/// centre. Contacts with the axis are allowed.
fn symmetric_paths_by_peaks(m: usize) -> QPolynomial {
    tally(enumerate_dyck(m).into_iter().filter(|p| p.is_symmetric() && !p.has_ffrr()), |p| {
        p.peaks().iter().filter(|&&x| x <= m).count()
    })
}

/// Pop images among the 312-avoiding permutations of length `len >= 1`.
fn tam_a_image_by_descents(len: usize) -> Result<QPolynomial> {
    let image: std::collections::BTreeSet<_> = tam_a_elements(len - 1).iter().map(pop_tam_a).collect::<Result<_>>()?;
    Ok(tally(image, |p| p.descent_count()))
}

fn tam_b_image(n: usize) -> Result<std::collections::BTreeSet<crate::SignedPermutation>> {
    tam_b_elements(n)?.iter().map(pop_tam_b).collect()
}

/// Builds the requested series to `order` and runs every check that
/// applies to it.
pub fn run(series: SeriesName, order: usize) -> Result<SeriesReport> {
    super::check_order(order)?;
    let mut checks = Vec::new();
    let rows = match series {
        SeriesName::G => {
            let g = solve_g(order)?;
            let rows = rows_of(&g)?;
            checks.push(SeriesCheck::new("functional equation", None));
            checks.push(equal_check("closed form in radicals", &g, &radical_g(order)?));
            checks.push(compare_rows("ffrr-avoiding paths by peaks", &rows, 0..=order.min(ENUM_PATHS), |m| {
                Ok(paths_by_peaks(m))
            })?);
            rows
        }
        SeriesName::H => {
            let h = solve_h(order)?;
            let rows = rows_of(&h)?;
            checks.push(compare_rows("Lagrange inversion coefficients", &rows, 0..=order, |n| {
                (1..=n).map(|k| Ok((k as u32, h_coefficient(n, k)?))).collect()
            })?);
            rows
        }
        SeriesName::F => {
            let f = solve_f(order)?;
            let rows = rows_of(&f)?;
            checks.push(compare_rows("closed-form ideal polynomials", &rows, 2..=order, |m| jayan_polynomial(m - 2))?);
            checks.push(compare_rows("Pop-up images in J(A)", &rows, 2..=order.min(ENUM_IDEAL_A), |m| {
                pop_polynomial_direct_a(m)
            })?);
            rows
        }
        SeriesName::I => {
            let i = solve_i(order)?;
            let rows = rows_of(&i)?;
            checks.push(SeriesCheck::new("functional equation", None));
            checks.push(equal_check("closed form in radicals", &i, &radical_i(order)?));
            checks.push(compare_rows(
                "symmetric ffrr-avoiding paths by peaks",
                &rows,
                0..=order.min(ENUM_SYMMETRIC),
                |m| Ok(symmetric_paths_by_peaks(m)),
            )?);
            rows
        }
        SeriesName::J => {
            let j = solve_j(order)?;
            let rows = rows_of(&j)?;
            checks.push(SeriesCheck::new(
                "inverse square root form",
                (!radical_check_j(order)?).then(|| "radical form differs".to_string()),
            ));
            checks.push(equal_check("rational form in D", &j, &radical_j_rational(order)?));
            checks.push(compare_rows("closed-form ideal polynomials", &rows, 1..=order, |n| {
                Ok(jaybn_polynomial(n, true))
            })?);
            checks.push(compare_rows("Pop-up images in J(B)", &rows, 1..=order.min(ENUM_IDEAL_B), |n| {
                pop_polynomial_direct_b(n)
            })?);
            rows
        }
        SeriesName::M => {
            let t = solve_tamari(order)?;
            let rows = rows_of(&t.m)?;
            checks.push(equal_check("closed form in radicals", &t.m2, &radical_m2(order)?));
            checks.push(compare_rows("Tam(A) images by descents", &rows, 1..=order.min(ENUM_TAM_A), |len| {
                tam_a_image_by_descents(len)
            })?);
            rows
        }
        SeriesName::N => {
            let t = solve_tamari(order)?;
            let rows = rows_of(&t.n)?;
            checks.push(equal_check("split through L, N0 and N1", &t.n, &split_n(order)?));
            checks.push(compare_rows("binomial coefficients", &rows, 1..=order, |n| {
                Ok((0..=2 * n).map(|d| (d as u32, n_coefficient(n, d))).collect())
            })?);
            checks.push(compare_rows("Tam(B) images by descents", &rows, 1..=order.min(ENUM_TAM_B), |n| {
                Ok(tally(tam_b_image(n)?, |x| x.word().descent_count()))
            })?);
            rows
        }
        SeriesName::K => {
            let t = solve_tamari(order)?;
            let rows = rows_of(&t.k)?;
            checks.push(compare_rows("Tam(B) Pop polynomials", &rows, 1..=order, |n| Ok(tam_b_polynomial(n)))?);
            checks.push(compare_rows("Tam(B) images by upper covers", &rows, 1..=order.min(ENUM_TAM_B), |n| {
                Ok(tally(tam_b_image(n)?, tam_b_upper_cover_count))
            })?);
            rows
        }
    };
    Ok(SeriesReport { series, order, rows, checks })
}
