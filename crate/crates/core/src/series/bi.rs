use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::QPolynomial;

/// A power series in `x` truncated after `x^order`, whose coefficients are
/// polynomials in `y` with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSeries {
    order: usize,
    /// `rows[n][k]` is the coefficient of `x^n y^k`; rows carry no
    /// trailing zeros.
    rows: Vec<Vec<BigRational>>,
}

fn trim(row: &mut Vec<BigRational>) {
    while row.last().is_some_and(Zero::is_zero) {
        row.pop();
    }
}

fn add_rows(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out: Vec<BigRational> = (0..a.len().max(b.len()))
        .map(|k| match (a.get(k), b.get(k)) {
            (Some(u), Some(v)) => u + v,
            (Some(u), None) => u.clone(),
            (None, Some(v)) => v.clone(),
            (None, None) => unreachable!(),
        })
        .collect();
    trim(&mut out);
    out
}

fn mul_rows(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, u) in a.iter().enumerate() {
        if u.is_zero() {
            continue;
        }
        for (j, v) in b.iter().enumerate() {
            out[i + j] += u * v;
        }
    }
    trim(&mut out);
    out
}

fn scale_row(a: &[BigRational], c: &BigRational) -> Vec<BigRational> {
    let mut out: Vec<BigRational> = a.iter().map(|v| v * c).collect();
    trim(&mut out);
    out
}

impl BiSeries {
    pub fn zero(order: usize) -> Self {
        BiSeries { order, rows: vec![Vec::new(); order + 1] }
    }

    /// `c x^i y^j`.
    pub fn monomial(order: usize, i: usize, j: usize, c: impl Into<BigRational>) -> Self {
        let mut s = Self::zero(order);
        s.add_to(i, j, c.into());
        s
    }

    pub fn constant(order: usize, c: impl Into<BigRational>) -> Self {
        Self::monomial(order, 0, 0, c)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, BigRational::one())
    }

    pub fn x(order: usize) -> Self {
        Self::monomial(order, 1, 0, BigRational::one())
    }

    pub fn y(order: usize) -> Self {
        Self::monomial(order, 0, 1, BigRational::one())
    }

    /// Series with `[x^n y^k] = f(n, k)` for `k <= y_degree(n)`.
    pub fn from_fn(order: usize, y_degree: impl Fn(usize) -> usize, f: impl Fn(usize, usize) -> BigRational) -> Self {
        let rows = (0..=order)
            .map(|n| {
                let mut row: Vec<BigRational> = (0..=y_degree(n)).map(|k| f(n, k)).collect();
                trim(&mut row);
                row
            })
            .collect();
        BiSeries { order, rows }
    }

    /// Adds `c x^i y^j`, ignoring terms past the truncation order.
    pub fn add_to(&mut self, i: usize, j: usize, c: BigRational) {
        if i > self.order || c.is_zero() {
            return;
        }
        let row = &mut self.rows[i];
        if row.len() <= j {
            row.resize(j + 1, BigRational::zero());
        }
        row[j] += c;
        trim(row);
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, n: usize, k: usize) -> BigRational {
        self.rows.get(n).and_then(|r| r.get(k)).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Coefficients of `x^n` as a polynomial in `y`.
    pub fn row(&self, n: usize) -> &[BigRational] {
        &self.rows[n]
    }

    /// The `x^n` row as an integer polynomial, failing on fractions.
    pub fn row_poly(&self, n: usize) -> Result<QPolynomial> {
        self.rows[n]
            .iter()
            .enumerate()
            .map(|(k, c)| {
                if c.is_integer() {
                    Ok((k as u32, c.to_integer()))
                } else {
                    Err(Error::Series(format!("[x^{n} y^{k}] = {c} is not an integer")))
                }
            })
            .collect()
    }

    pub fn is_integral(&self) -> bool {
        self.rows.iter().flatten().all(BigRational::is_integer)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        BiSeries { order, rows: self.rows[..=order].to_vec() }
    }

    /// Equal coefficients through `x^order`.
    pub fn agrees_through(&self, other: &BiSeries, order: usize) -> bool {
        (0..=order.min(self.order).min(other.order)).all(|n| self.rows[n] == other.rows[n])
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        BiSeries { order: self.order, rows: self.rows.iter().map(|r| scale_row(r, c)).collect() }
    }

    /// Multiplies by `x^i y^j`.
    pub fn shift(&self, i: usize, j: usize) -> Self {
        let mut rows = vec![Vec::new(); self.order + 1];
        for n in 0..=self.order.saturating_sub(i) {
            if self.order < i {
                break;
            }
            let src = &self.rows[n];
            if !src.is_empty() {
                let mut r = vec![BigRational::zero(); j];
                r.extend(src.iter().cloned());
                rows[n + i] = r;
            }
        }
        BiSeries { order: self.order, rows }
    }

    /// Divides by `x^i y^j`, failing unless the division is exact. The
    /// result has truncation order reduced by `i`.
    pub fn div_monomial(&self, i: usize, j: usize) -> Result<Self> {
        if i > self.order {
            return Err(Error::Series("division exhausts the truncation order".into()));
        }
        for n in 0..i {
            if !self.rows[n].is_empty() {
                return Err(Error::Series(format!("x^{n} row is nonzero, cannot divide by x^{i}")));
            }
        }
        let mut rows = Vec::with_capacity(self.order + 1 - i);
        for n in i..=self.order {
            let src = &self.rows[n];
            if src.iter().take(j).any(|c| !c.is_zero()) {
                return Err(Error::Series(format!("x^{n} row is not divisible by y^{j}")));
            }
            rows.push(src.iter().skip(j).cloned().collect());
        }
        Ok(BiSeries { order: self.order - i, rows })
    }

    fn constant_scalar(&self) -> Result<BigRational> {
        match self.rows[0].as_slice() {
            [c] if !c.is_zero() => Ok(c.clone()),
            _ => Err(Error::Series("constant term must be a nonzero scalar".into())),
        }
    }

    /// Multiplicative inverse; the `x^0` row must be a nonzero constant.
    pub fn inverse(&self) -> Result<Self> {
        let c = self.constant_scalar()?;
        let c_inv = c.recip();
        let mut out: Vec<Vec<BigRational>> = vec![vec![c_inv.clone()]];
        for n in 1..=self.order {
            let mut acc = Vec::new();
            for i in 1..=n {
                acc = add_rows(&acc, &mul_rows(&self.rows[i], &out[n - i]));
            }
            out.push(scale_row(&acc, &-c_inv.clone()));
        }
        Ok(BiSeries { order: self.order, rows: out })
    }

    /// Square root with constant term 1; the `x^0` row must be exactly 1.
    pub fn sqrt(&self) -> Result<Self> {
        if self.constant_scalar()? != BigRational::one() {
            return Err(Error::Series("square root needs constant term 1".into()));
        }
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut out: Vec<Vec<BigRational>> = vec![vec![BigRational::one()]];
        for n in 1..=self.order {
            let mut acc = self.rows[n].clone();
            for i in 1..n {
                acc = add_rows(&acc, &scale_row(&mul_rows(&out[i], &out[n - i]), &-BigRational::one()));
            }
            out.push(scale_row(&acc, &half));
        }
        Ok(BiSeries { order: self.order, rows: out })
    }

    pub fn inv_sqrt(&self) -> Result<Self> {
        self.sqrt()?.inverse()
    }

    /// `f(x^2, y)` truncated at `order`; needs `self.order >= floor(order / 2)`.
    pub fn substitute_x_squared(&self, order: usize) -> Result<Self> {
        if 2 * self.order + 1 < order {
            return Err(Error::Series("not enough terms to substitute x^2".into()));
        }
        let mut rows = vec![Vec::new(); order + 1];
        for n in 0..=order / 2 {
            rows[2 * n] = self.rows[n].clone();
        }
        Ok(BiSeries { order, rows })
    }

    /// `f(x, y^2)`.
    pub fn substitute_y_squared(&self) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut out = vec![BigRational::zero(); (2 * r.len()).saturating_sub(1)];
                for (k, c) in r.iter().enumerate() {
                    out[2 * k] = c.clone();
                }
                out
            })
            .collect();
        BiSeries { order: self.order, rows }
    }

    /// `sum_t a_(2t) x^t` for `self = sum_s a_s x^s`.
    pub fn even_part(&self) -> Self {
        let rows: Vec<_> = self.rows.iter().step_by(2).cloned().collect();
        BiSeries { order: rows.len() - 1, rows }
    }

    /// `sum_t a_(2t+1) x^t`.
    pub fn odd_part(&self) -> Result<Self> {
        if self.order == 0 {
            return Err(Error::Series("no odd coefficients below the truncation order".into()));
        }
        let rows: Vec<_> = self.rows.iter().skip(1).step_by(2).cloned().collect();
        Ok(BiSeries { order: rows.len() - 1, rows })
    }

    /// Coefficients of `x^n` at `y = 1`.
    pub fn eval_y_one(&self) -> Vec<BigRational> {
        self.rows.iter().map(|r| r.iter().sum()).collect()
    }
}

impl Add for &BiSeries {
    type Output = BiSeries;
    fn add(self, rhs: &BiSeries) -> BiSeries {
        let order = self.order.min(rhs.order);
        BiSeries { order, rows: (0..=order).map(|n| add_rows(&self.rows[n], &rhs.rows[n])).collect() }
    }
}

impl Neg for &BiSeries {
    type Output = BiSeries;
    fn neg(self) -> BiSeries {
        self.scale(&-BigRational::one())
    }
}

impl Sub for &BiSeries {
    type Output = BiSeries;
    fn sub(self, rhs: &BiSeries) -> BiSeries {
        self + &(-rhs)
    }
}

impl Mul for &BiSeries {
    type Output = BiSeries;
    fn mul(self, rhs: &BiSeries) -> BiSeries {
        let order = self.order.min(rhs.order);
        let mut rows = vec![Vec::new(); order + 1];
        for (n, row) in rows.iter_mut().enumerate() {
            let mut acc = Vec::new();
            for i in 0..=n {
                if self.rows[i].is_empty() || rhs.rows[n - i].is_empty() {
                    continue;
                }
                acc = add_rows(&acc, &mul_rows(&self.rows[i], &rhs.rows[n - i]));
            }
            *row = acc;
        }
        BiSeries { order, rows }
    }
}

impl fmt::Display for BiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, row) in self.rows.iter().enumerate() {
            for (k, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if !first {
                    f.write_str(" + ")?;
                }
                first = false;
                write!(f, "({c})")?;
                if n > 0 {
                    write!(f, "x^{n}")?;
                }
                if k > 0 {
                    write!(f, "y^{k}")?;
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn product_of_conjugates() {
        let u = &BiSeries::x(6) + &BiSeries::y(6);
        let one = BiSeries::one(6);
        let lhs = &(&one + &u) * &(&one - &u);
        let rhs = &one - &(&u * &u);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn square_root_of_one_minus_four_x() {
        let s = &BiSeries::one(10) - &BiSeries::x(10).scale(&int(4));
        let r = s.sqrt().unwrap();
        assert_eq!(&r * &r, s);
        // -2/n C(2n-2, n-1)
        for n in 1..=10i64 {
            let c = crate::binomial::binomial(2 * n - 2, n - 1);
            assert_eq!(r.coeff(n as usize, 0), BigRational::new(-2 * c, n.into()));
        }
        assert_eq!(&r.inverse().unwrap() * &r, BiSeries::one(10));
        assert!(BiSeries::x(4).inverse().is_err());
        assert!(BiSeries::constant(4, int(4)).sqrt().is_err());
    }

    #[test]
    fn substitutions_and_parts() {
        let mut s = BiSeries::zero(6);
        for n in 0..=6 {
            s.add_to(n, n % 3, int(n as i64 + 1));
        }
        let even = s.even_part();
        assert_eq!(even.order(), 3);
        assert_eq!(even.coeff(2, 1), int(5));
        let odd = s.odd_part().unwrap();
        assert_eq!(odd.coeff(1, 0), int(4));
        let sq = s.substitute_x_squared(12).unwrap();
        assert_eq!(sq.coeff(10, 2), int(6));
        assert!(sq.coeff(9, 0).is_zero());
        let ys = s.substitute_y_squared();
        assert_eq!(ys.coeff(5, 4), int(6));
        let shifted = s.shift(2, 1);
        assert_eq!(shifted.div_monomial(2, 1).unwrap(), s.truncate(4));
        assert!(s.div_monomial(1, 0).is_err());
    }
}
