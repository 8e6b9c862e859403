use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

/// A polynomial in `q` with integer coefficients. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    terms: BTreeMap<u32, BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(degree: u32, coefficient: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(degree, coefficient);
        p
    }

    pub fn add_term(&mut self, degree: u32, coefficient: impl Into<BigInt>) {
        let c = coefficient.into();
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(degree).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&degree);
        }
    }

    pub fn coefficient(&self, degree: u32) -> BigInt {
        self.terms.get(&degree).cloned().unwrap_or_default()
    }

    /// Nonzero terms in increasing degree.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.terms.iter().map(|(&d, c)| (d, c))
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Value at q = 1.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl FromIterator<(u32, BigInt)> for QPolynomial {
    fn from_iter<I: IntoIterator<Item = (u32, BigInt)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (d, c) in iter {
            p.add_term(d, c);
        }
        p
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = self.clone();
        for (d, c) in rhs.terms() {
            out.add_term(d, c.clone());
        }
        out
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        self.terms().map(|(d, c)| (d, -c)).collect()
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        self + &(-rhs)
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&d, c)) in self.terms.iter().rev().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if d == 0 || !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            match d {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{d}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for QPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (d, c) in &self.terms {
            map.serialize_entry(&d.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for QPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct PolyVisitor;
        impl<'de> Visitor<'de> for PolyVisitor {
            type Value = QPolynomial;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a map from degree strings to coefficient strings")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<QPolynomial, A::Error> {
                let mut p = QPolynomial::zero();
                while let Some((d, c)) = access.next_entry::<String, String>()? {
                    let d: u32 = d.parse().map_err(de::Error::custom)?;
                    let c: BigInt = c.parse().map_err(de::Error::custom)?;
                    p.add_term(d, c);
                }
                Ok(p)
            }
        }
        deserializer.deserialize_map(PolyVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(u32, i64)]) -> QPolynomial {
        terms.iter().map(|&(d, c)| (d, BigInt::from(c))).collect()
    }

    #[test]
    fn arithmetic_drops_zeros() {
        let a = poly(&[(2, 1), (1, 4)]);
        let b = poly(&[(1, 4)]);
        assert_eq!(&a - &b, QPolynomial::monomial(2, 1));
        assert!((&a - &a).is_zero());
        assert_eq!(a.eval_one(), BigInt::from(5));
        assert_eq!(a.degree(), Some(2));
    }

    #[test]
    fn display() {
        assert_eq!(poly(&[(2, 1), (1, 4)]).to_string(), "q^2 + 4q");
        assert_eq!(poly(&[(3, -1), (0, 2)]).to_string(), "-q^3 + 2");
        assert_eq!(poly(&[(1, 2), (0, -1)]).to_string(), "2q - 1");
        assert_eq!(QPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn json_round_trip() {
        let a = poly(&[(2, 1), (1, 4), (10, 3)]);
        let text = serde_json::to_string(&a).unwrap();
        assert_eq!(text, r#"{"1":"4","2":"1","10":"3"}"#);
        let back: QPolynomial = serde_json::from_str(&text).unwrap();
        assert_eq!(back, a);
    }
}
