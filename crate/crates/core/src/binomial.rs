//! Exact binomial coefficients and related counting sequences.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// C(n, k), zero when `k < 0`, `k > n`, or `n < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// a(a-1)...(a-k+1)/k! for any integer `a`, zero when `k < 0`.
/// Gives C(-1, 0) = 1 and C(-1, k) = (-1)^k.
pub fn binomial_generalized(a: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

pub fn catalan(n: u64) -> BigInt {
    binomial(2 * n as i64, n as i64) / (n + 1)
}

/// Motzkin numbers 1, 1, 2, 4, 9, 21, 51, ...
pub fn motzkin(n: u64) -> BigInt {
    (0..=n / 2).map(|k| binomial(n as i64, 2 * k as i64) * catalan(k)).sum()
}

/// Division that fails unless the remainder is zero.
pub fn exact_div(dividend: &BigInt, divisor: &BigInt) -> Result<BigInt> {
    let (q, r) = dividend.div_rem(divisor);
    if divisor.is_zero() || !r.is_zero() {
        return Err(Error::InexactDivision { dividend: dividend.to_string(), divisor: divisor.to_string() });
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial(n: i64) -> BigInt {
        (1..=n).map(BigInt::from).product()
    }

    #[test]
    fn matches_factorial_ratio() {
        for n in 0..=30 {
            for k in 0..=n {
                assert_eq!(binomial(n, k), factorial(n) / (factorial(k) * factorial(n - k)));
            }
            assert!(binomial(n, n + 1).is_zero());
            assert!(binomial(n, -1).is_zero());
        }
    }

    #[test]
    fn generalized_negative_upper() {
        assert_eq!(binomial_generalized(-1, 0), BigInt::one());
        assert_eq!(binomial_generalized(-1, 3), BigInt::from(-1));
        assert_eq!(binomial_generalized(-2, 2), BigInt::from(3));
        assert!(binomial(-1, 0).is_zero());
        assert_eq!(binomial_generalized(7, 3), binomial(7, 3));
    }

    #[test]
    fn sequences() {
        let cat: Vec<BigInt> = (0..8).map(catalan).collect();
        assert_eq!(cat, [1, 1, 2, 5, 14, 42, 132, 429].map(BigInt::from));
        let mot: Vec<BigInt> = (0..8).map(motzkin).collect();
        assert_eq!(mot, [1, 1, 2, 4, 9, 21, 51, 127].map(BigInt::from));
        assert!(exact_div(&BigInt::from(7), &BigInt::from(2)).is_err());
    }
}
