//! Closed-form counts for the Pop polynomials, evaluated exactly.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::binomial::{binomial, binomial_generalized, catalan, exact_div};
use crate::error::{Error, Result};
use crate::lattice::QPolynomial;

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn pow(base: u32, exp: usize) -> BigInt {
    num_traits::pow(BigInt::from(base), exp)
}

/// Coefficient of `q^(n-1)` in the Pop polynomial of Weak(B_n): `3^n - 2n - 1`.
pub fn weak_b_coefficient(n: usize) -> BigInt {
    pow(3, n) - big(2 * n as i64 + 1)
}

/// Predicted count of Pop images in Weak(B_n) with `n - 1` upper covers and
/// first entry `i`, for `i` in 1..=2n.
pub fn weak_b_census_prediction(n: usize) -> BTreeMap<u32, BigInt> {
    (1..=2 * n)
        .map(|i| {
            let v = if i == 1 {
                pow(3, n - 1) - big(n as i64)
            } else if i <= n {
                pow(2, i - 1) * pow(3, n - i)
            } else {
                pow(2, 2 * n - i) - BigInt::one()
            };
            (i as u32, v)
        })
        .collect()
}

/// Pop polynomial of Tam(B_n):
/// `sum_k C(n-1, k) C(n+1-k, k) q^(n-k)`.
pub fn tam_b_polynomial(n: usize) -> QPolynomial {
    let n = n as i64;
    (0..=(n + 1) / 2).map(|k| ((n - k) as u32, binomial(n - 1, k) * binomial(n + 1 - k, k))).collect()
}

/// Pop polynomial of Tam(A_n):
/// `sum_k Cat(k) C(n, 2k) q^(n-k)`.
pub fn tam_a_polynomial(n: usize) -> QPolynomial {
    let n = n as i64;
    (0..=n / 2).map(|k| ((n - k) as u32, catalan(k as u64) * binomial(n, 2 * k))).collect()
}

/// Pop polynomial of J(Phi+ of A) for Dyck paths of semi-length `n + 2`:
/// `sum_k 1/(k+1) sum_j C(k+1, j-1) C(k+1, j) C(n-j+1, n-k-j+1) q^(k+1)`.
pub fn jayan_polynomial(n: usize) -> Result<QPolynomial> {
    let n = n as i64;
    let mut p = QPolynomial::zero();
    for k in 0..=n {
        let inner: BigInt = (0..=n - k + 1)
            .map(|j| binomial(k + 1, j - 1) * binomial(k + 1, j) * binomial(n - j + 1, n - k - j + 1))
            .sum();
        p.add_term(k as u32 + 1, exact_div(&inner, &big(k + 1))?);
    }
    Ok(p)
}

/// Pop polynomial of J(Phi+ of B_n):
/// `sum_k sum_j C(2j, j) C(k+j, k-j) C(n-k+j-1, n-k) (-1)^(k-j) q^k`.
/// With `include_j0` the sum starts at `j = 0`, reading `C(-1, 0)` as 1;
/// without it the sum starts at `j = 1` and is off by `(-1)^n q^n`.
pub fn jaybn_polynomial(n: usize, include_j0: bool) -> QPolynomial {
    let n = n as i64;
    let start = if include_j0 { 0 } else { 1 };
    let mut p = QPolynomial::zero();
    for k in 0..=n {
        let mut c = BigInt::zero();
        for j in start..=k {
            let sign = if (k - j) % 2 == 0 { big(1) } else { big(-1) };
            c += sign * binomial(2 * j, j) * binomial(k + j, k - j) * binomial_generalized(n - k + j - 1, n - k);
        }
        p.add_term(k as u32, c);
    }
    p
}

/// `[x^n y^k]` of the generating function of ffrr-avoiding Dyck paths by
/// peaks: `sum_j (1/k) C(k, j+1) C(k, j) C(n-j-1, n-k-j)`, for `k >= 1`.
pub fn h_coefficient(n: usize, k: usize) -> Result<BigInt> {
    if k == 0 {
        return Err(Error::Parameter("k must be at least 1".into()));
    }
    let (n, k) = (n as i64, k as i64);
    let sum: BigInt = (0..k).map(|j| binomial(k, j + 1) * binomial(k, j) * binomial(n - j - 1, n - k - j)).sum();
    exact_div(&sum, &big(k))
}

/// Number of Pop images in Tam(B_n) with `d` descents:
/// `C(n-1, k) C(n-k, k)` for `d = 2k`, `C(n-1, k) C(n-k, k-1)` for `d = 2k - 1`.
pub fn n_coefficient(n: usize, d: usize) -> BigInt {
    let n = n as i64;
    let k = d.div_ceil(2) as i64;
    if d % 2 == 0 {
        binomial(n - 1, k) * binomial(n - k, k)
    } else {
        binomial(n - 1, k) * binomial(n - k, k - 1)
    }
}

/// `[x^n y^(n-k)]` of the upper-cover generating function:
/// `C(n-1, k) C(n-k+1, k)`.
pub fn k_coefficient(n: usize, k: usize) -> BigInt {
    let (n, k) = (n as i64, k as i64);
    binomial(n - 1, k) * binomial(n - k + 1, k)
}

/// Number of Pop images in Tam(A) of length `len` with `des` descents:
/// `Cat(des) C(len-1, 2 des)`.
pub fn m_coefficient(len: usize, des: usize) -> BigInt {
    if len == 0 {
        return BigInt::zero();
    }
    catalan(des as u64) * binomial(len as i64 - 1, 2 * des as i64)
}

/// Named formulas for lookup by the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Formula {
    WeakB,
    TamA,
    TamB,
    JayA,
    JayB,
    JayBAsPrinted,
}

impl Formula {
    pub const ALL: [Formula; 6] =
        [Formula::WeakB, Formula::TamA, Formula::TamB, Formula::JayA, Formula::JayB, Formula::JayBAsPrinted];

    pub fn name(self) -> &'static str {
        match self {
            Formula::WeakB => "weak-b",
            Formula::TamA => "tam-a",
            Formula::TamB => "tam-b",
            Formula::JayA => "jay-a",
            Formula::JayB => "jay-b",
            Formula::JayBAsPrinted => "jay-b-printed",
        }
    }

    /// The weak-b entry is the single monomial `(3^n - 2n - 1) q^(n-1)`.
    pub fn evaluate(self, n: usize) -> Result<QPolynomial> {
        Ok(match self {
            Formula::WeakB => {
                if n == 0 {
                    return Err(Error::Parameter("n must be at least 1".into()));
                }
                QPolynomial::monomial(n as u32 - 1, weak_b_coefficient(n))
            }
            Formula::TamA => tam_a_polynomial(n),
            Formula::TamB => tam_b_polynomial(n),
            Formula::JayA => jayan_polynomial(n)?,
            Formula::JayB => jaybn_polynomial(n, true),
            Formula::JayBAsPrinted => jaybn_polynomial(n, false),
        })
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Formula {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Formula::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown formula {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(u32, i64)]) -> QPolynomial {
        terms.iter().map(|&(d, c)| (d, BigInt::from(c))).collect()
    }

    #[test]
    fn weak_values() {
        let v: Vec<BigInt> = (1..=5).map(weak_b_coefficient).collect();
        assert_eq!(v, [0, 4, 20, 72, 232].map(BigInt::from));
        let c = weak_b_census_prediction(2);
        assert_eq!(c.values().cloned().collect::<Vec<_>>(), [1, 2, 1, 0].map(BigInt::from));
    }

    #[test]
    fn tamari_values() {
        assert_eq!(tam_b_polynomial(1), poly(&[(1, 1)]));
        assert_eq!(tam_b_polynomial(2), poly(&[(2, 1), (1, 2)]));
        assert_eq!(tam_b_polynomial(3), poly(&[(3, 1), (2, 6), (1, 1)]));
        assert_eq!(tam_a_polynomial(1), poly(&[(1, 1)]));
        assert_eq!(tam_a_polynomial(2), poly(&[(2, 1), (1, 1)]));
        assert_eq!(tam_a_polynomial(3), poly(&[(3, 1), (2, 3)]));
    }

    #[test]
    fn ideal_values() {
        assert_eq!(jayan_polynomial(0).unwrap(), poly(&[(1, 1)]));
        assert_eq!(jayan_polynomial(1).unwrap(), poly(&[(1, 1), (2, 1)]));
        assert_eq!(jayan_polynomial(2).unwrap(), poly(&[(1, 1), (2, 3), (3, 1)]));
        assert_eq!(jaybn_polynomial(1, true), poly(&[(1, 1)]));
        assert_eq!(jaybn_polynomial(2, true), poly(&[(1, 2), (2, 1)]));
        assert_eq!(jaybn_polynomial(2, false), poly(&[(1, 2)]));
        for n in 1..=6 {
            let delta = &jaybn_polynomial(n, true) - &jaybn_polynomial(n, false);
            let sign = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(delta, poly(&[(n as u32, sign)]));
        }
    }

    #[test]
    fn coefficient_families() {
        assert_eq!(h_coefficient(2, 1).unwrap(), BigInt::from(1));
        assert_eq!(h_coefficient(2, 2).unwrap(), BigInt::from(1));
        assert!(h_coefficient(2, 0).is_err());
        for n in 1..=8 {
            for k in 0..=n {
                assert_eq!(k_coefficient(n, k), tam_b_polynomial(n).coefficient((n - k) as u32));
            }
        }
        assert_eq!(n_coefficient(2, 1), BigInt::from(1));
        assert_eq!(n_coefficient(4, 4), BigInt::from(3));
        assert_eq!("tam-b".parse::<Formula>().unwrap(), Formula::TamB);
        assert!("nope".parse::<Formula>().is_err());
    }
}
